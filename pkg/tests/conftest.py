"""Pytest fixtures for zomatch tests."""

import networkx as nx
import pytest
from hypothesis import HealthCheck
from hypothesis import settings as hypothesis_settings

from zomatch.config import GeoSettings, MatcherSettings, Settings, get_settings
from zomatch.core.graph import BipartiteGraph, build_graph, compute_pieces
from zomatch.geo.points import PointSet

hypothesis_settings.register_profile(
    "zomatch",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.function_scoped_fixture],
)
hypothesis_settings.load_profile("zomatch")


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch: pytest.MonkeyPatch):
    """Clear cached settings so environment changes in a test take effect."""
    monkeypatch.delenv("ZOM_SEED", raising=False)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def checked_settings() -> Settings:
    """Settings that run the invariant suite at every stage and raise on failures."""
    return Settings(
        strict_invariants=True,
        matcher=MatcherSettings(check_invariants=True),
        geo=GeoSettings(epsilon=0.25),
    )


@pytest.fixture
def lenient_settings() -> Settings:
    """Settings that record ledger failures instead of raising."""
    return Settings(strict_invariants=False)


@pytest.fixture
def single_weight_one() -> BipartiteGraph:
    """One A-vertex, one B-vertex, one weight-1 edge."""
    graph = build_graph(1, 1, [(0, 0, 1)])
    compute_pieces(graph)
    return graph


@pytest.fixture
def zero_path() -> BipartiteGraph:
    """The weight-0 path a0 - b0 - a1."""
    graph = build_graph(2, 1, [(0, 0, 0), (1, 0, 0)])
    compute_pieces(graph)
    return graph


@pytest.fixture
def mixed_graph() -> BipartiteGraph:
    """
    A 4x4 graph whose maximum matching needs weight-1 edges.

    The weight-0 edges form two pieces that each match one pair internally.
    """
    graph = build_graph(
        4,
        4,
        [
            (0, 0, 0),
            (1, 0, 0),
            (2, 2, 0),
            (3, 2, 0),
            (1, 1, 1),
            (3, 3, 1),
            (0, 3, 1),
            (2, 1, 1),
        ],
    )
    compute_pieces(graph)
    return graph


@pytest.fixture
def unit_pair() -> PointSet:
    """A at the origin, B at (3, 4): bottleneck exactly 5."""
    return PointSet.from_points([(0.0, 0.0)], [(3.0, 4.0)])


def _weight_zero_components(graph: BipartiteGraph) -> set[frozenset[int]]:
    reference = nx.Graph()
    reference.add_nodes_from(range(graph.vertex_count))
    for e in range(graph.m):
        if graph.weight[e] == 0:
            reference.add_edge(*graph.endpoints(e))
    return {frozenset(c) for c in nx.connected_components(reference)}


@pytest.fixture
def weight_zero_components():
    """Reference pieces: connected components of the weight-0 subgraph, via networkx."""
    return _weight_zero_components
