"""Primal-dual 0/1-weighted matcher: preprocessing, then Dijkstra and DFS stages per phase."""

import logging
from collections import defaultdict
from collections.abc import Callable, Sequence
from dataclasses import dataclass

from zomatch.baseline.hopcroft_karp import UNMATCHED, maximum_matching
from zomatch.config import Settings, get_settings
from zomatch.core.enums import StageEvent, Termination
from zomatch.core.exceptions import InvariantViolation
from zomatch.core.graph import BipartiteGraph, PieceDecomposition, compute_pieces
from zomatch.core.state import MatchState, ResidualView
from zomatch.matcher.dial import BucketQueue
from zomatch.matcher.invariants import (
    admissible_cycle_violations,
    has_admissible_augmenting_path,
    matched_distance_violations,
    phase_ledger,
    state_violations,
)
from zomatch.matcher.models import MatchResult, PhaseStats
from zomatch.matcher.search import AugmentingPathSearch

logger = logging.getLogger(__name__)

StageCallback = Callable[[StageEvent, MatchState], None]


def infinite_distance(graph: BipartiteGraph) -> int:
    """Sentinel above any reachable slack distance."""
    return 2 * graph.vertex_count + 1


@dataclass
class DijkstraOutcome:
    """Stage-1 result: the threshold, per-vertex distances, and any termination."""

    ell: int
    distances: list[int]
    infinite: int
    termination: Termination | None = None

    @property
    def terminated(self) -> bool:
        return self.termination is not None


@dataclass
class AugmentingPath:
    """Alternating path from a free B-vertex to a free A-vertex (unified ids)."""

    vertices: Sequence[int]
    edges: Sequence[int]


class _GraphNetwork(ResidualView):
    """Residual view with phase-scoped deletion, as the path search sees it."""

    def __init__(
        self, graph: BipartiteGraph, state: MatchState, pieces: PieceDecomposition
    ) -> None:
        super().__init__(graph, state)
        self._vertex_piece = pieces.vertex_of_piece

    def edge_piece(self, e: int) -> int | None:
        if self.graph.weight[e]:
            return None
        return self._vertex_piece[self.graph.edge_a[e]]

    def is_deleted(self, e: int) -> bool:
        return self.state.is_deleted(e)

    def delete(self, e: int) -> None:
        self.state.delete(e)

    def augment(self, vertices: Sequence[int], edges: Sequence[int]) -> None:
        augment(self.graph, self.state, AugmentingPath(vertices, edges))


def preprocess(graph: BipartiteGraph, pieces: PieceDecomposition) -> MatchState:
    """
    Maximum matching inside every piece over its weight-0 edges; all duals 0.

    Each piece is matched independently by Hopcroft-Karp on its own vertices.
    """
    state = MatchState.empty(graph)
    piece_a: dict[int, list[int]] = defaultdict(list)
    for a in range(graph.n_a):
        if any(graph.weight[e] == 0 for e in graph.adj_a[a]):
            piece_a[pieces.vertex_of_piece[a]].append(a)

    for piece in sorted(piece_a):
        left = piece_a[piece]
        right_index: dict[int, int] = {}
        local: list[list[int]] = []
        for a in left:
            row: list[int] = []
            for e in graph.adj_a[a]:
                if graph.weight[e] == 0:
                    row.append(right_index.setdefault(graph.edge_b[e], len(right_index)))
            local.append(row)

        mate_left, _ = maximum_matching(len(left), len(right_index), local.__getitem__)
        right = sorted(right_index, key=right_index.__getitem__)
        for i, j in enumerate(mate_left):
            if j == UNMATCHED:
                continue
            e = graph.find_edge(left[i], right[j])
            assert e is not None
            state.match(graph, e)

    return state


def shortest_slack_distances(graph: BipartiteGraph, state: MatchState) -> list[int]:
    """Slack-weighted distances from the implicit source over the residual network."""
    view = ResidualView(graph, state)
    inf = infinite_distance(graph)
    dist = [inf] * graph.vertex_count
    queue: BucketQueue[int] = BucketQueue()
    for b in view.sources():
        dist[b] = 0
        queue[b] = 0

    for v, d in queue:
        for _, head, value in view.out_edges(v):
            candidate = d + value
            if candidate < dist[head]:
                dist[head] = candidate
                queue[head] = candidate
    return dist


def stage1_dijkstra(graph: BipartiteGraph, state: MatchState) -> DijkstraOutcome:
    """
    Compute ell and raise the duals of every vertex closer than ell.

    Terminates (without touching duals) when the matching is perfect, checked
    first, or when no free A-vertex is reachable.
    """
    inf = infinite_distance(graph)
    if state.is_perfect(graph):
        return DijkstraOutcome(ell=inf, distances=[], infinite=inf, termination=Termination.PERFECT)

    dist = shortest_slack_distances(graph, state)
    ell = min((dist[a] for a in state.free_a(graph)), default=inf)
    if ell >= inf:
        return DijkstraOutcome(
            ell=inf, distances=dist, infinite=inf, termination=Termination.UNREACHABLE
        )

    for v, d in enumerate(dist):
        if d < ell:
            state.dual[v] += ell - d
    return DijkstraOutcome(ell=ell, distances=dist, infinite=inf)


def stage2_dfs(
    graph: BipartiteGraph,
    state: MatchState,
    pieces: PieceDecomposition,
    ell: int = 0,
) -> PhaseStats:
    """Run the path search once from every B-vertex that is free when the stage starts."""
    network = _GraphNetwork(graph, state, pieces)
    search: AugmentingPathSearch[int, int] = AugmentingPathSearch(network)
    stats = PhaseStats(phase_index=state.phase, ell=ell, y_max=state.y_max(graph))

    for root in state.free_b(graph):
        outcome = search.run_from(root)
        stats.visited_edges += outcome.visited
        stats.deleted_edges += outcome.deleted
        if outcome.augmented:
            stats.augmenting_paths += 1
            stats.affected_pieces += outcome.affected_pieces
            stats.affected_per_path.append(outcome.affected_pieces)
            stats.path_weights.append(outcome.path_weight)
    return stats


def augment(graph: BipartiteGraph, state: MatchState, path: AugmentingPath) -> None:
    """
    Lower y(b) by 2c(a, b) on every non-matching edge of the path, then flip it.

    Raises:
        InvariantViolation: if the path is not an admissible augmenting path
    """
    vertices, edges = list(path.vertices), list(path.edges)

    def reject(reason: str) -> InvariantViolation:
        return InvariantViolation(
            f"Not an admissible augmenting path: {reason}",
            invariant="augment",
            context={"vertices": vertices, "edges": edges},
        )

    if not edges or len(edges) % 2 == 0 or len(vertices) != len(edges) + 1:
        raise reject("wrong length")
    if graph.is_a(vertices[0]) or not state.is_free(vertices[0]):
        raise reject("does not start at a free B-vertex")
    if not graph.is_a(vertices[-1]) or not state.is_free(vertices[-1]):
        raise reject("does not end at a free A-vertex")

    for i, e in enumerate(edges):
        a, b = graph.endpoints(e)
        tail, head = vertices[i], vertices[i + 1]
        if i % 2 == 0:
            if (tail, head) != (b, a) or state.is_matching_edge(graph, e):
                raise reject(f"edge {e} is not a non-matching edge b->a at position {i}")
            if graph.weight[e] + state.dual[a] - state.dual[b] != 0:
                raise reject(f"edge {e} has positive slack")
        elif (tail, head) != (a, b) or not state.is_matching_edge(graph, e):
            raise reject(f"edge {e} is not a matching edge a->b at position {i}")

    for e in edges[0::2]:
        _, b = graph.endpoints(e)
        state.dual[b] -= 2 * graph.weight[e]
    for e in edges[1::2]:
        state.unmatch(graph, e)
    for e in edges[0::2]:
        state.match(graph, e)


class ZeroOneMatcher:
    """
    Maximum-cardinality matcher for graphs with 0/1 edge weights.

    Algorithm:
    1. Match every weight-0 piece internally (Hopcroft-Karp); duals start at 0
    2. Stage 1: Dijkstra over slacks from all free B-vertices; stop when the
       matching is perfect or no free A-vertex is reachable, else raise duals
    3. Stage 2: DFS from every free B-vertex over zero-slack edges, augmenting
       along each path found and deleting dead edges for the rest of the phase
    4. Repeat stages 1-2
    """

    def __init__(
        self,
        graph: BipartiteGraph,
        pieces: PieceDecomposition | None = None,
        settings: Settings | None = None,
        stage_callback: StageCallback | None = None,
    ) -> None:
        self._graph = graph
        self._pieces = pieces or compute_pieces(graph)
        self._settings = settings or get_settings()
        self._notify = stage_callback or (lambda event, state: None)

    def run(self) -> MatchResult:
        graph, pieces = self._graph, self._pieces
        checks = self._settings.matcher.check_invariants

        state = preprocess(graph, pieces)
        preprocess_size = state.size
        self._expose(StageEvent.PREPROCESSED, state, checks)
        logger.debug(
            "Preprocessing matched %d pairs across %d pieces", state.size, pieces.piece_count
        )

        phases: list[PhaseStats] = []
        limit = self._settings.matcher.phase_limit(graph.vertex_count)
        while True:
            outcome = stage1_dijkstra(graph, state)
            if outcome.termination is not None:
                termination = outcome.termination
                break

            if checks:
                self._check_stage_one(state, outcome)
            self._expose(StageEvent.STAGE_ONE, state, checks)

            state.phase += 1
            stats = stage2_dfs(graph, state, pieces, ell=outcome.ell)
            phases.append(stats)
            logger.debug(
                "Phase %d: ell=%d y_max=%d paths=%d deleted=%d",
                stats.phase_index,
                stats.ell,
                stats.y_max,
                stats.augmenting_paths,
                stats.deleted_edges,
            )
            if stats.augmenting_paths == 0:
                raise InvariantViolation(
                    "Phase ended without an augmenting path",
                    invariant="augmentations per phase",
                    context={"phase": stats.phase_index},
                )
            if checks and has_admissible_augmenting_path(graph, state):
                raise InvariantViolation(
                    "Admissible augmenting path survived stage two",
                    invariant="exhaustion",
                    context={"phase": stats.phase_index},
                )
            self._expose(StageEvent.STAGE_TWO, state, checks)
            if len(phases) > limit:
                raise InvariantViolation(
                    "Phase limit exceeded", invariant="phase limit", context={"limit": limit}
                )

        self._notify(StageEvent.TERMINATED, state)
        weight = state.matching_weight(graph)
        ledger = phase_ledger(phases, weight)
        self._settle(ledger.violations, ledger.warnings)

        result = MatchResult(
            n_a=graph.n_a,
            n_b=graph.n_b,
            m=graph.m,
            matching=state.matching(graph),
            weight=weight,
            preprocess_size=preprocess_size,
            total_phases=len(phases),
            total_affected=sum(p.affected_pieces for p in phases),
            sum_path_weights=sum(p.sum_path_weights for p in phases),
            termination=termination,
            duals=list(state.dual),
            phases=phases,
            ledger=ledger,
        )
        logger.info(
            "Matched %d pairs (w=%d) in %d phases after preprocessing %d",
            result.size,
            weight,
            result.total_phases,
            preprocess_size,
        )
        return result

    def _expose(self, event: StageEvent, state: MatchState, checks: bool) -> None:
        if checks:
            problems = state_violations(self._graph, state)
            if self._graph.vertex_count <= self._settings.matcher.cycle_check_max_vertices:
                problems += [
                    f"weight-1 edge {e} lies on an admissible cycle"
                    for e in admissible_cycle_violations(self._graph, state)
                ]
            if problems:
                raise InvariantViolation(
                    f"State check failed after {event}",
                    invariant="feasibility",
                    context={"event": str(event), "problems": problems[:10]},
                )
        self._notify(event, state)

    def _check_stage_one(self, state: MatchState, outcome: DijkstraOutcome) -> None:
        problems = matched_distance_violations(self._graph, state, outcome.distances)
        if not has_admissible_augmenting_path(self._graph, state):
            problems.append("no admissible augmenting path after the dual update")
        if problems:
            raise InvariantViolation(
                "Stage one check failed",
                invariant="stage one",
                context={"problems": problems[:10]},
            )

    def _settle(self, violations: list[str], warnings: list[str]) -> None:
        for warning in warnings:
            logger.warning("Ledger warning: %s", warning)
        if not violations:
            return
        if self._settings.strict_invariants:
            raise InvariantViolation(
                "Phase ledger violated", invariant="ledger", context={"violations": violations}
            )
        for violation in violations:
            logger.warning("Ledger violation: %s", violation)


def run_matcher(
    graph: BipartiteGraph,
    pieces: PieceDecomposition | None = None,
    settings: Settings | None = None,
    stage_callback: StageCallback | None = None,
) -> MatchResult:
    """Run the 0/1 matcher to completion and return its matching and statistics."""
    return ZeroOneMatcher(graph, pieces, settings, stage_callback).run()
