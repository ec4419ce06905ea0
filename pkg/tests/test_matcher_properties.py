"""Property tests: the matcher against Hopcroft-Karp on generated 0/1 graphs."""

import math

from hypothesis import given
from hypothesis import strategies as st

from zomatch.baseline.hopcroft_karp import hopcroft_karp
from zomatch.config import MatcherSettings, Settings
from zomatch.core.graph import build_graph, compute_pieces
from zomatch.core.state import MatchState, check_feasibility
from zomatch.matcher.engine import run_matcher

CHECKED = Settings(strict_invariants=True, matcher=MatcherSettings(check_invariants=True))


@st.composite
def zero_one_graphs(draw, max_side: int = 8):
    n_a = draw(st.integers(min_value=0, max_value=max_side))
    n_b = draw(st.integers(min_value=0, max_value=max_side))
    pairs = [(a, b) for a in range(n_a) for b in range(n_b)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    weights = draw(st.lists(st.integers(0, 1), min_size=len(chosen), max_size=len(chosen)))
    graph = build_graph(n_a, n_b, [(a, b, w) for (a, b), w in zip(chosen, weights, strict=True)])
    compute_pieces(graph)
    return graph


class TestMatcherProperties:
    """Property-based checks over small random graphs."""

    @given(zero_one_graphs())
    def test_maximum_cardinality(self, graph):
        """Test that the matcher finds a maximum matching on every graph."""
        result = run_matcher(graph, settings=CHECKED)
        assert result.size == len(hopcroft_karp(graph))

    @given(zero_one_graphs())
    def test_matching_is_valid_and_weighed(self, graph):
        """Test that the result is a matching of graph edges with the reported weight."""
        result = run_matcher(graph, settings=CHECKED)
        edges = [graph.find_edge(a, b) for a, b in result.matching]
        assert None not in edges
        assert len({a for a, _ in result.matching}) == result.size
        assert len({b for _, b in result.matching}) == result.size
        assert result.weight == sum(graph.weight[e] for e in edges if e is not None)

    @given(zero_one_graphs())
    def test_final_duals_are_feasible(self, graph):
        """Test that the returned duals certify the returned matching."""
        result = run_matcher(graph, settings=CHECKED)
        state = MatchState.empty(graph)
        for a, b in result.matching:
            e = graph.find_edge(a, b)
            assert e is not None
            state.match(graph, e)
        state.dual = list(result.duals)
        assert check_feasibility(graph, state) == []

    @given(zero_one_graphs())
    def test_phase_bounds(self, graph):
        """Test the phase count bound and the growth of path costs across phases."""
        result = run_matcher(graph, settings=CHECKED)
        assert result.total_phases <= 3 * math.ceil(math.sqrt(result.weight))
        assert result.total_affected <= result.sum_path_weights
        costs = [p.y_max for p in result.phases]
        assert all(later > earlier for earlier, later in zip(costs, costs[1:], strict=False))
        for phase in result.phases:
            assert phase.augmenting_paths >= 1
            assert all(cost == phase.y_max for cost in phase.path_weights)
