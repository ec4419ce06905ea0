"""Tests for instance files and seeded generators."""

import numpy as np
import pytest

from zomatch.core.enums import Distribution
from zomatch.core.exceptions import FormatError, InputError
from zomatch.data.formats import (
    emit_graph,
    emit_points,
    parse_graph_file,
    parse_graph_text,
    parse_points_file,
    parse_points_text,
    parse_weights_file,
    write_graph_file,
    write_points_file,
)
from zomatch.data.generators import lattice_instance, random_graph, random_points


class TestGraphFormat:
    """Test suite for graph files."""

    def test_parse_with_comments(self):
        """Test that comments and blank lines are skipped and pieces are stamped."""
        graph = parse_graph_text("# demo\n2 2 3\n0 0 0\n\n1 0 1\n# note\n1 1 0\n")
        assert (graph.n_a, graph.n_b, graph.m) == (2, 2, 3)
        assert list(graph.edges()) == [(0, 0, 0), (1, 0, 1), (1, 1, 0)]
        assert graph.piece_id[0] is not None
        assert graph.piece_id[1] is None
        assert graph.coordinates is None

    def test_coordinates(self):
        """Test that coord comments attach lattice positions to vertices."""
        graph = parse_graph_text("1 1 1\n0 0 0\n# coord a 0 0 0\n# coord b 0 1 0\n")
        assert graph.coordinates == {0: (0, 0), 1: (1, 0)}

    @pytest.mark.parametrize(
        "text,line",
        [
            ("2 2\n", 1),
            ("2 2 1\n0 0 2\n", 2),
            ("2 2 1\n0 5 0\n", 2),
            ("2 2 2\n0 0 0\n0 0 1\n", 3),
            ("2 2 1\n0 x 0\n", 2),
            ("2 2 1\n0 0 0\n# coord a 7 0 0\n", 3),
            ("2 2 1\n0 0 0\n# coord c 0 0 0\n", 3),
            ("-1 2 0\n", 1),
        ],
    )
    def test_errors_name_the_line(self, text, line):
        """Test that malformed lines raise FormatError with their line number."""
        with pytest.raises(FormatError) as info:
            parse_graph_text(text, path="bad.txt")
        assert info.value.line_number == line
        assert info.value.path == "bad.txt"

    @pytest.mark.parametrize("text", ["", "# only a comment\n", "2 2 2\n0 0 0\n"])
    def test_whole_file_errors(self, text):
        """Test that a missing header or a short edge list is reported without a line."""
        with pytest.raises(FormatError) as info:
            parse_graph_text(text)
        assert info.value.line_number is None

    def test_lattice_survives_a_file(self, tmp_path):
        """Test that a written lattice reads back with its edges and coordinates."""
        graph = lattice_instance(3, 4)
        path = tmp_path / "lattice.txt"
        write_graph_file(graph, path)
        back = parse_graph_file(path)
        assert list(back.edges()) == list(graph.edges())
        assert back.coordinates == graph.coordinates

    def test_emit_header_first(self):
        """Test that emitted text starts with the header line."""
        text = emit_graph(random_graph(3, 4, 5, seed=1))
        lines = text.splitlines()
        assert lines[0] == "3 4 5"
        assert len(lines) == 6

    def test_missing_file(self, tmp_path):
        """Test that reading a missing file raises OSError."""
        with pytest.raises(OSError):
            parse_graph_file(tmp_path / "absent.txt")


class TestPointFormat:
    """Test suite for point files."""

    def test_parse(self):
        """Test that side labels are case-insensitive and comments skipped."""
        points = parse_points_text("A 0 0\n# comment\nb 1.5 2\n\nB -1 3e-2\n")
        assert points.a.tolist() == [[0.0, 0.0]]
        assert points.b.tolist() == [[1.5, 2.0], [-1.0, 0.03]]

    @pytest.mark.parametrize("text,line", [("C 0 0\n", 1), ("A 0 0\nB 1\n", 2), ("A 0 y\n", 1)])
    def test_errors(self, text, line):
        """Test that bad point lines name their line number."""
        with pytest.raises(FormatError) as info:
            parse_points_text(text)
        assert info.value.line_number == line

    def test_floats_are_exact_through_a_file(self, tmp_path):
        """Test that written coordinates read back bit for bit."""
        points = random_points(7, seed=13)
        path = tmp_path / "points.txt"
        write_points_file(points, path)
        back = parse_points_file(path)
        assert np.array_equal(back.a, points.a)
        assert np.array_equal(back.b, points.b)
        assert emit_points(back) == emit_points(points)


class TestWeightsFile:
    """Test suite for weight lists."""

    def test_parse(self, tmp_path):
        """Test that weights may span lines."""
        path = tmp_path / "w.txt"
        path.write_text("0 1\n# c\n1\n", encoding="utf-8")
        assert parse_weights_file(path, 3) == [0, 1, 1]

    def test_bad_weight(self, tmp_path):
        """Test that weights outside {0, 1} are rejected with their line."""
        path = tmp_path / "w.txt"
        path.write_text("0\n2\n", encoding="utf-8")
        with pytest.raises(FormatError) as info:
            parse_weights_file(path, 2)
        assert info.value.line_number == 2

    def test_wrong_count(self, tmp_path):
        """Test that the count must equal m."""
        path = tmp_path / "w.txt"
        path.write_text("0 1\n", encoding="utf-8")
        with pytest.raises(FormatError):
            parse_weights_file(path, 3)


class TestGenerators:
    """Test suite for seeded generators."""

    def test_random_graph_is_seeded(self):
        """Test that a seed fixes the edge list."""
        first = random_graph(20, 20, 60, 0.5, seed=3)
        again = random_graph(20, 20, 60, 0.5, seed=3)
        other = random_graph(20, 20, 60, 0.5, seed=4)
        assert list(first.edges()) == list(again.edges())
        assert list(first.edges()) != list(other.edges())
        assert first.m == 60

    def test_weight_probability_extremes(self):
        """Test that p = 0 and p = 1 give uniform weights."""
        assert set(random_graph(10, 10, 30, 0.0, seed=1).weight) == {0}
        assert set(random_graph(10, 10, 30, 1.0, seed=1).weight) == {1}

    def test_complete_graph(self):
        """Test that m = n_a * n_b places every pair."""
        graph = random_graph(3, 4, 12, seed=2)
        assert {(a, b) for a, b, _ in graph.edges()} == {(a, b) for a in range(3) for b in range(4)}

    @pytest.mark.parametrize(
        "n_a,n_b,m,p",
        [(-1, 2, 0, 0.5), (2, 2, 5, 0.5), (2, 2, -1, 0.5), (2, 2, 1, 1.5)],
    )
    def test_random_graph_rejections(self, n_a, n_b, m, p):
        """Test that impossible parameters raise InputError."""
        with pytest.raises(InputError):
            random_graph(n_a, n_b, m, p)

    @pytest.mark.parametrize("distribution", list(Distribution))
    def test_random_points(self, distribution):
        """Test that point sets are seeded and balanced."""
        points = random_points(20, distribution, seed=5)
        again = random_points(20, distribution, seed=5)
        assert points.a.shape == points.b.shape == (20, 2)
        assert np.array_equal(points.a, again.a)
        assert np.array_equal(points.b, again.b)

    def test_negative_point_count(self):
        """Test that a negative n is rejected."""
        with pytest.raises(InputError):
            random_points(-1)
