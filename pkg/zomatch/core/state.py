"""Matching and dual state, the residual view, and the slack calculus."""

from collections.abc import Iterator
from dataclasses import dataclass

from zomatch.core.exceptions import InvariantViolation
from zomatch.core.graph import BipartiteGraph, Matching
from zomatch.core.models import FeasibilityViolation

FREE = -1


@dataclass
class MatchState:
    """
    Matching plus integer duals over unified vertex ids.

    mate[v] is the partner of v or FREE; mate_edge[v] is the matching edge at v.
    deleted_epoch[e] equals the current phase while edge e is deleted.
    """

    mate: list[int]
    mate_edge: list[int]
    dual: list[int]
    deleted_epoch: list[int]
    phase: int = 0
    size: int = 0

    @classmethod
    def empty(cls, graph: BipartiteGraph) -> "MatchState":
        n = graph.vertex_count
        return cls(
            mate=[FREE] * n,
            mate_edge=[FREE] * n,
            dual=[0] * n,
            deleted_epoch=[-1] * graph.m,
        )

    def is_free(self, v: int) -> bool:
        return self.mate[v] == FREE

    def is_matching_edge(self, graph: BipartiteGraph, e: int) -> bool:
        return self.mate_edge[graph.edge_a[e]] == e

    def free_b(self, graph: BipartiteGraph) -> list[int]:
        return [v for v in range(graph.n_a, graph.vertex_count) if self.mate[v] == FREE]

    def free_a(self, graph: BipartiteGraph) -> list[int]:
        return [v for v in range(graph.n_a) if self.mate[v] == FREE]

    def y_max(self, graph: BipartiteGraph) -> int:
        """Largest B dual; equals every free-B dual while the run is consistent."""
        return max(self.dual[graph.n_a :], default=0)

    def is_perfect(self, graph: BipartiteGraph) -> bool:
        return self.size == min(graph.n_a, graph.n_b)

    def is_deleted(self, e: int) -> bool:
        return self.deleted_epoch[e] == self.phase

    def delete(self, e: int) -> None:
        self.deleted_epoch[e] = self.phase

    def match(self, graph: BipartiteGraph, e: int) -> None:
        a, b = graph.endpoints(e)
        self.mate[a], self.mate[b] = b, a
        self.mate_edge[a] = self.mate_edge[b] = e
        self.size += 1

    def unmatch(self, graph: BipartiteGraph, e: int) -> None:
        a, b = graph.endpoints(e)
        self.mate[a] = self.mate[b] = FREE
        self.mate_edge[a] = self.mate_edge[b] = FREE
        self.size -= 1

    def matching(self, graph: BipartiteGraph) -> Matching:
        """Matched pairs as (A-index, B-index), ordered by A-index."""
        return [(a, self.mate[a] - graph.n_a) for a in range(graph.n_a) if self.mate[a] != FREE]

    def matching_weight(self, graph: BipartiteGraph) -> int:
        return sum(graph.weight[e] for e in self.matching_edges(graph))

    def matching_edges(self, graph: BipartiteGraph) -> list[int]:
        return [self.mate_edge[a] for a in range(graph.n_a) if self.mate[a] != FREE]


def slack(graph: BipartiteGraph, state: MatchState, e: int) -> int:
    """
    Slack of edge e in the residual network.

    Raises:
        InvariantViolation: if the slack of a non-matching edge is negative
    """
    if state.is_matching_edge(graph, e):
        return 0
    a, b = graph.endpoints(e)
    value = graph.weight[e] + state.dual[a] - state.dual[b]
    if value < 0:
        raise InvariantViolation(
            "Negative slack on a non-matching edge",
            invariant="feasibility",
            context={"edge": e, "slack": value},
        )
    return value


def check_feasibility(graph: BipartiteGraph, state: MatchState) -> list[FeasibilityViolation]:
    """Every edge whose duals break y(b) - y(a) <= c (free) or y(a) - y(b) = c (matched)."""
    violations: list[FeasibilityViolation] = []
    for e in range(graph.m):
        a, b = graph.endpoints(e)
        c = graph.weight[e]
        ya, yb = state.dual[a], state.dual[b]
        matched = state.is_matching_edge(graph, e)
        if matched and ya - yb != c:
            condition = "matching edge requires y(a) - y(b) = c"
        elif not matched and yb - ya > c:
            condition = "non-matching edge requires y(b) - y(a) <= c"
        else:
            continue
        violations.append(
            FeasibilityViolation(
                edge=e,
                a=a,
                b=b - graph.n_a,
                weight=c,
                matched=matched,
                dual_a=ya,
                dual_b=yb,
                condition=condition,
            )
        )
    return violations


@dataclass
class ResidualView:
    """
    Directed view of a graph under a matching.

    Non-matching edges point b -> a and matching edges point a -> b. The source
    of the augmented network is implicit: it reaches every free B-vertex at cost 0.
    """

    graph: BipartiteGraph
    state: MatchState

    def sources(self) -> list[int]:
        return self.state.free_b(self.graph)

    def is_free_target(self, v: int) -> bool:
        return v < self.graph.n_a and self.state.mate[v] == FREE

    def out_edges(self, v: int) -> Iterator[tuple[int, int, int]]:
        """(edge, head, slack) for every residual edge leaving v."""
        graph, state = self.graph, self.state
        if v < self.graph.n_a:
            e = state.mate_edge[v]
            if e != FREE:
                yield e, state.mate[v], 0
            return
        own = state.mate_edge[v]
        y_b = state.dual[v]
        for e in graph.adj_b[v - self.graph.n_a]:
            if e == own:
                continue
            a = graph.edge_a[e]
            value = graph.weight[e] + state.dual[a] - y_b
            if value < 0:
                raise InvariantViolation(
                    "Negative slack on a non-matching edge",
                    invariant="feasibility",
                    context={"edge": e, "slack": value},
                )
            yield e, a, value

    def admissible(self, v: int) -> Iterator[tuple[int, int]]:
        """(edge, head) for every zero-slack residual edge leaving v."""
        for e, head, value in self.out_edges(v):
            if value == 0:
                yield e, head

    def edge_weight(self, e: int) -> int:
        return self.graph.weight[e]
