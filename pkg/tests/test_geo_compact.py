"""Tests for the compact residual network and point-level augmentation."""

import pytest

from zomatch.analysis.verifier import compact_distance_mismatches
from zomatch.baseline.oracles import oracle_bottleneck
from zomatch.core.enums import Side, StageEvent
from zomatch.core.exceptions import InvariantViolation
from zomatch.data.generators import random_points
from zomatch.geo.compact import build_compact, compact_distances
from zomatch.geo.grid import build_grid
from zomatch.geo.matcher import GeoMatcher, PointPath, augment_points, project_path
from zomatch.geo.points import PointSet
from zomatch.geo.state import GeoState
from zomatch.matcher.invariants import state_violations


@pytest.fixture
def crowded() -> PointSet:
    """Four A-points and four B-points sharing one fine cell at a large guess."""
    return PointSet.from_points(
        [(0.0, 0.0), (0.001, 0.0), (0.0, 0.001), (0.001, 0.001)],
        [(0.002, 0.0), (0.0, 0.002), (0.002, 0.002), (0.001, 0.002)],
    )


def _matcher(seed: int, scale: float = 1.5, callback=None) -> GeoMatcher:
    points = random_points(18, seed=seed)
    delta = scale * oracle_bottleneck(points.a, points.b).distance
    return GeoMatcher(points, delta, 0.5, 9, stage_callback=callback)


class TestCompactResidual:
    """Test suite for clustering and compact edges."""

    def test_one_cluster_per_cell_side(self, crowded):
        """Test that equal duals in one cell collapse into one cluster per side."""
        grid = build_grid(crowded, 1.0, 0.5, 1)
        compact = build_compact(grid, GeoState.empty(4, 4))
        assert compact.vertex_count == 2
        assert compact.edge_count == 1
        assert compact.sources() == compact.keys(Side.B)
        key_b = compact.keys(Side.B)[0]
        assert sorted(compact.members[key_b]) == [0, 1, 2, 3]
        assert compact.free_count(key_b) == 4

    def test_cluster_edge_slack(self, crowded):
        """Test that the single compact edge has weight 0 and slack 0 at zero duals."""
        grid = build_grid(crowded, 1.0, 0.5, 1)
        compact = build_compact(grid, GeoState.empty(4, 4))
        key_b = compact.keys(Side.B)[0]
        [(head, edge)] = list(compact.out_edges(key_b))
        assert head[1] is Side.A
        assert edge.weight == 0
        assert edge.slack == 0
        assert not edge.matching
        assert compact_distances(compact)[head] == 0

    def test_spread_above_two_rejected(self, crowded):
        """Test that duals spreading by more than 2 inside a cell are an invariant failure."""
        grid = build_grid(crowded, 1.0, 0.5, 1)
        state = GeoState.empty(4, 4)
        state.dual_a[0] = 3
        with pytest.raises(InvariantViolation) as info:
            build_compact(grid, state)
        assert info.value.invariant == "dual spread"

    def test_spread_of_two_allowed(self, crowded):
        """Test that a spread of exactly 2 splits the side into two clusters."""
        grid = build_grid(crowded, 1.0, 0.5, 1)
        state = GeoState.empty(4, 4)
        state.dual_a = [2, 2, 2, 2]
        state.dual_b[1] = 2
        compact = build_compact(grid, state)
        assert compact.spread() == 2
        assert len(compact.keys(Side.B)) == 2

    @pytest.mark.parametrize("seed", range(4))
    def test_distances_match_point_level(self, seed):
        """Test compact distances against Dijkstra on the explicit point graph."""
        mismatches: list[str] = []

        def observe(event, m):
            if event is not StageEvent.TERMINATED:
                mismatches.extend(compact_distance_mismatches(m))

        _matcher(seed, callback=observe).run()
        assert mismatches == []

    @pytest.mark.parametrize("seed", range(4))
    def test_spread_stays_within_two(self, seed):
        """Test that every exposed state keeps the per-cell dual spread at most 2."""
        spreads: list[int] = []

        def observe(event, m):
            if event is not StageEvent.TERMINATED:
                spreads.append(m.compact().spread())

        _matcher(seed, scale=1.2, callback=observe).run()
        assert spreads
        assert max(spreads) <= 2

    @pytest.mark.parametrize("seed", range(3))
    def test_point_level_view_is_feasible(self, seed):
        """Test that the explicit point graph and duals pass the state checks."""
        matcher = _matcher(seed)
        matcher.run()
        graph, view = matcher.point_level_view()
        assert state_violations(graph, view) == []
        assert view.size == matcher.state.size


class TestPointAugmentation:
    """Test suite for projecting and applying augmenting paths."""

    def test_augment_rejects_loose_pair(self, unit_pair):
        """Test that a pair with positive slack cannot be augmented."""
        grid = build_grid(unit_pair, 5.0, 0.25, 1)
        state = GeoState.empty(1, 1)
        with pytest.raises(InvariantViolation) as info:
            augment_points(grid, state, PointPath(b_points=[0], a_points=[0]))
        assert info.value.invariant == "augment"
        assert state.size == 0

    def test_augment_tight_pair(self, unit_pair):
        """Test that a tight weight-1 pair is matched and y(b) drops by 2."""
        grid = build_grid(unit_pair, 5.0, 0.25, 1)
        state = GeoState.empty(1, 1)
        state.dual_b[0] = 1
        augment_points(grid, state, PointPath(b_points=[0], a_points=[0]))
        assert state.matching() == [(0, 0)]
        assert state.dual_b == [-1]

    def test_project_needs_free_root(self, unit_pair):
        """Test that a root cluster without free points cannot be projected."""
        grid = build_grid(unit_pair, 5.0, 0.25, 1)
        state = GeoState.empty(1, 1)
        state.dual_b[0] = 1
        compact = build_compact(grid, state)
        key_b, key_a = compact.keys(Side.B)[0], compact.keys(Side.A)[0]
        path = project_path(compact, [key_b, key_a])
        assert (path.b_points, path.a_points) == ([0], [0])

        state.match(0, 0)
        state.dual_b[0] = -1
        compact = build_compact(grid, state)
        with pytest.raises(InvariantViolation) as info:
            project_path(compact, [compact.keys(Side.B)[0], compact.keys(Side.A)[0]])
        assert info.value.invariant == "projection"
