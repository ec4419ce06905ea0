"""Tests for lattices, the median-line separator and recursive weighting."""

import pytest

from zomatch.config import SeparatorSettings, Settings
from zomatch.core.exceptions import InputError, SeparatorError, UnsupportedFamilyError
from zomatch.data.generators import lattice_instance, random_graph
from zomatch.separator.lattice import grid_graph_separator, lattice_graph
from zomatch.separator.models import SeparatorStep
from zomatch.separator.recursive import (
    assign_weights_recursive,
    default_piece_size,
    inner_edge_count,
    measure_weight,
    validate_step,
)


@pytest.fixture
def path16():
    """A 16-vertex path laid out on the x axis."""
    return lattice_instance(16, 1)


def _xs(graph, vertices):
    return sorted(graph.coordinates[v][0] for v in vertices)


class TestLattice:
    """Test suite for lattice graphs."""

    def test_four_by_four(self):
        """Test the 4x4 lattice sizes and its all-zero weights."""
        graph = lattice_graph(4, 4)
        assert (graph.n_a, graph.n_b, graph.m) == (8, 8, 24)
        assert set(graph.weight) == {0}
        assert len(graph.coordinates) == 16

    def test_parity_coloring(self):
        """Test that every edge joins an even and an odd lattice point."""
        graph = lattice_graph(5, 3)
        for e in range(graph.m):
            a, b = graph.endpoints(e)
            (xa, ya), (xb, yb) = graph.coordinates[a], graph.coordinates[b]
            assert (xa + ya) % 2 == 0
            assert (xb + yb) % 2 == 1
            assert abs(xa - xb) + abs(ya - yb) == 1

    def test_bad_dimensions(self):
        """Test that non-positive dimensions are rejected."""
        with pytest.raises(InputError):
            lattice_graph(0, 3)


class TestGridSeparator:
    """Test suite for the median-line separator."""

    def test_splits_on_median_column(self):
        """Test that the 4x4 lattice splits on column 2."""
        graph = lattice_graph(4, 4)
        step = grid_graph_separator(graph, list(range(graph.vertex_count)))
        assert {graph.coordinates[v][0] for v in step.separator} == {2}
        assert len(step.separator) == 4
        assert len(step.side_x) == 8
        assert len(step.side_y) == 4
        validate_step(graph, step, alpha=3.0)

    def test_rows_when_taller(self):
        """Test that a tall lattice splits on a row."""
        graph = lattice_graph(2, 6)
        step = grid_graph_separator(graph, list(range(graph.vertex_count)))
        assert {graph.coordinates[v][1] for v in step.separator} == {3}

    def test_needs_coordinates(self):
        """Test that a graph without coordinates is not supported."""
        graph = random_graph(3, 3, 4, seed=1)
        with pytest.raises(UnsupportedFamilyError):
            grid_graph_separator(graph, [0, 1])


class TestValidateStep:
    """Test suite for separator step validation."""

    @pytest.fixture
    def path4(self):
        # vertices 0 and 1 are x = 0 and x = 2, vertices 2 and 3 are x = 1 and x = 3
        return lattice_graph(4, 1)

    @pytest.mark.parametrize(
        "separator,side_x,side_y,invariant",
        [
            ([2], [0], [1], "partition"),
            ([], [0, 2], [1, 3], "progress"),
            ([3], [0], [2, 1], "separation"),
            ([3], [0, 2, 1], [], "balance"),
        ],
    )
    def test_rejections(self, path4, separator, side_x, side_y, invariant):
        """Test that each kind of bad step names its broken condition."""
        step = SeparatorStep(
            vertices=[0, 1, 2, 3], separator=separator, side_x=side_x, side_y=side_y
        )
        with pytest.raises(SeparatorError) as info:
            validate_step(path4, step, alpha=3.0)
        assert info.value.invariant == invariant

    def test_inner_edge_count(self, path4):
        """Test that only edges inside the subset are counted."""
        assert inner_edge_count(path4, [0, 2]) == 1
        assert inner_edge_count(path4, [0, 1]) == 0
        assert inner_edge_count(path4, [0, 1, 2, 3]) == 3


class TestAssignWeights:
    """Test suite for recursive weight assignment."""

    def test_path_of_sixteen(self, path16):
        """Test that r = 4 cuts at x = 8, then 4 and 12, weighting six edges."""
        assignment = assign_weights_recursive(path16, 4)
        assert [_xs(path16, step.separator) for step in assignment.steps] == [[8], [4], [12]]
        assert [step.depth for step in assignment.steps] == [0, 1, 1]
        assert assignment.weight_one_edges == 6
        assert assignment.separator_vertices == 3
        assert assignment.piece_count == 7
        assert assignment.max_piece_vertices == 4
        assert assignment.max_piece_edges == 3
        assert assignment.within_bounds

    def test_measure_weight(self, path16):
        """Test that the unique perfect matching of the path pays for three cuts."""
        assignment = assign_weights_recursive(path16, 4)
        measured, result = measure_weight(path16, assignment)
        assert measured.matching_size == 8
        assert measured.realized_weight == 3
        assert measured.constant == pytest.approx(0.375)
        assert result.weight == 3

    def test_square_lattice_within_bounds(self):
        """Test that a 16x16 lattice at r = 40 stays within the piece bounds."""
        graph = lattice_instance(16, 16)
        assignment = assign_weights_recursive(graph, 40)
        assert assignment.within_bounds
        measured, _ = measure_weight(graph, assignment)
        assert measured.matching_size == 128
        assert measured.realized_weight <= assignment.weight_one_edges

    def test_small_graph_needs_no_steps(self):
        """Test that a graph already within r keeps every weight at 0."""
        graph = lattice_instance(2, 2)
        assignment = assign_weights_recursive(graph, 10)
        assert assignment.steps == []
        assert assignment.weight_one_edges == 0

    def test_unsupported_family(self):
        """Test that a graph without coordinates cannot be separated."""
        with pytest.raises(UnsupportedFamilyError):
            assign_weights_recursive(random_graph(5, 5, 10, seed=2), 2)

    def test_bad_piece_size(self, path16):
        """Test that r below 1 is rejected."""
        with pytest.raises(InputError):
            assign_weights_recursive(path16, 0)

    def test_unbalanced_separator_fn(self, path16):
        """Test that a custom separator producing lopsided steps is rejected."""

        def lopsided(graph, vertices):
            return SeparatorStep(
                vertices=list(vertices), separator=[vertices[0]], side_x=list(vertices[1:])
            )

        with pytest.raises(SeparatorError) as info:
            assign_weights_recursive(path16, 4, separator_fn=lopsided)
        assert info.value.invariant == "balance"

    def test_piece_bounds_strict_and_lenient(self, path16):
        """Test that oversized pieces raise when strict and only warn otherwise."""
        tight = SeparatorSettings(vertex_factor=0.5)
        with pytest.raises(SeparatorError) as info:
            assign_weights_recursive(path16, 4, settings=Settings(separator=tight))
        assert info.value.invariant == "piece size"

        lenient = Settings(strict_invariants=False, separator=tight)
        assignment = assign_weights_recursive(path16, 4, settings=lenient)
        assert not assignment.within_bounds

    def test_default_piece_size(self):
        """Test that the default r is n^(2/3), at least 1."""
        assert default_piece_size(1000) == 100
        assert default_piece_size(8) == 4
        assert default_piece_size(0) == 1
