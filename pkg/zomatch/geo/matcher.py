"""Approximate bottleneck matching: one compact-network matcher run per distance guess."""

import logging
from collections import defaultdict
from collections.abc import Callable, Iterator, Sequence
from dataclasses import dataclass

from zomatch.baseline.hopcroft_karp import UNMATCHED, maximum_matching
from zomatch.baseline.oracles import oracle_bottleneck
from zomatch.config import Settings, get_settings
from zomatch.core.enums import RungOutcome, Side, StageEvent, Termination
from zomatch.core.exceptions import InputError, InvariantViolation
from zomatch.core.graph import BipartiteGraph, Matching, build_graph
from zomatch.core.state import FREE, MatchState
from zomatch.geo.compact import CompactResidual, EdgeKey, Key, build_compact, compact_distances
from zomatch.geo.grid import Cell, GridIndex, build_grid, implicit_weight
from zomatch.geo.ladder import default_r, delta_candidates
from zomatch.geo.models import BottleneckResult, GeoRunStats
from zomatch.geo.points import PointSet, coincident_matching
from zomatch.geo.state import GeoState
from zomatch.matcher.invariants import phase_ledger, state_violations
from zomatch.matcher.models import PhaseStats
from zomatch.matcher.search import AugmentingPathSearch

logger = logging.getLogger(__name__)

GeoCallback = Callable[[StageEvent, "GeoMatcher"], None]


@dataclass
class PointPath:
    """Point-level augmenting path b0, a0, b1, a1, ..., b_k, a_k."""

    b_points: list[int]
    a_points: list[int]


def geo_preprocess(grid: GridIndex) -> Matching:
    """
    Maximum matching inside every coarse box over its weight-0 edges.

    Each box is matched by Hopcroft-Karp over point pairs whose cells are
    neighbors within the box.
    """
    box_a: dict[Cell, list[int]] = defaultdict(list)
    box_b: dict[Cell, list[int]] = defaultdict(list)
    for a, cell in enumerate(grid.cell_a):
        box_a[grid.box_of(cell)].append(a)
    for b, cell in enumerate(grid.cell_b):
        box_b[grid.box_of(cell)].append(b)

    matching: Matching = []
    for box in sorted(box_a):
        left, right = box_a[box], box_b.get(box, [])
        if not right:
            continue
        right_index = {b: j for j, b in enumerate(right)}
        local = [
            [
                right_index[b]
                for other in grid.neighbors[grid.cell_a[a]]
                if grid.box_of(other) == box
                for b in grid.cells[other].b
            ]
            for a in left
        ]
        mate_left, _ = maximum_matching(len(left), len(right), local.__getitem__)
        matching += [(left[i], right[j]) for i, j in enumerate(mate_left) if j != UNMATCHED]
    return matching


def project_path(compact: CompactResidual, keys: Sequence[Key]) -> PointPath:
    """
    Pick points realizing a compact augmenting path.

    The first point is a free member of the root cluster and the last a free
    member of the final cluster; every A-cluster in between contributes a
    member whose mate lies in the next B-cluster.

    Raises:
        InvariantViolation: if some cluster has no suitable member
    """
    state = compact.state

    def missing(index: int) -> InvariantViolation:
        return InvariantViolation(
            "Compact path cannot be projected to points",
            invariant="projection",
            context={"position": index, "cluster": keys[index]},
        )

    free_roots = compact.free_members(keys[0])
    if not free_roots:
        raise missing(0)
    path = PointPath(b_points=[free_roots[0]], a_points=[])

    for index in range(1, len(keys), 2):
        if index == len(keys) - 1:
            free_ends = compact.free_members(keys[index])
            if not free_ends:
                raise missing(index)
            path.a_points.append(free_ends[0])
            break
        target = keys[index + 1]
        a = next(
            (
                a
                for a in compact.members[keys[index]]
                if state.mate_a[a] != FREE and compact.key_of_b(state.mate_a[a]) == target
            ),
            None,
        )
        if a is None:
            raise missing(index)
        path.a_points.append(a)
        path.b_points.append(state.mate_a[a])
    return path


def augment_points(grid: GridIndex, state: GeoState, path: PointPath) -> None:
    """
    Lower y(b) by 2c(a, b) on every non-matching pair of the path, then flip it.

    Raises:
        InvariantViolation: if a non-matching pair is not tight or the path
            does not alternate through the matching
    """
    pairs = list(zip(path.b_points, path.a_points, strict=True))
    for k, (b, a) in enumerate(pairs):
        weight = implicit_weight(grid, grid.cell_b[b], grid.cell_a[a])
        tight = (
            grid.are_neighbors(grid.cell_b[b], grid.cell_a[a])
            and state.mate_b[b] != a
            and weight + state.dual_a[a] - state.dual_b[b] == 0
        )
        last = k == len(pairs) - 1
        alternating = state.mate_a[a] == (FREE if last else path.b_points[k + 1])
        if not (tight and alternating):
            raise InvariantViolation(
                "Projected path is not an admissible augmenting path",
                invariant="augment",
                context={"position": k, "a": a, "b": b},
            )
    if state.mate_b[path.b_points[0]] != FREE:
        raise InvariantViolation(
            "Projected path does not start at a free B-point", invariant="augment"
        )

    for b, a in pairs:
        state.dual_b[b] -= 2 * implicit_weight(grid, grid.cell_b[b], grid.cell_a[a])
    for k, a in enumerate(path.a_points[:-1]):
        state.unmatch(a, path.b_points[k + 1])
    for b, a in pairs:
        state.match(a, b)


class _CompactNetwork:
    """Compact residual network as the path search sees it, with phase-scoped deletion."""

    def __init__(self, compact: CompactResidual) -> None:
        self.compact = compact
        self.deleted: set[EdgeKey] = set()

    def admissible(self, key: Key) -> Iterator[tuple[EdgeKey, Key]]:
        for head, edge in self.compact.out_edges(key):
            if edge.slack == 0:
                yield (key, head), head

    def is_free_target(self, key: Key) -> bool:
        return key[1] is Side.A and self.compact.free_count(key) > 0

    def edge_piece(self, e: EdgeKey) -> Cell | None:
        if self.edge_weight(e):
            return None
        return self.compact.piece_of(e[0])

    def edge_weight(self, e: EdgeKey) -> int:
        return implicit_weight(self.compact.grid, e[0][0], e[1][0])

    def is_deleted(self, e: EdgeKey) -> bool:
        return e in self.deleted

    def delete(self, e: EdgeKey) -> None:
        self.deleted.add(e)

    def augment(self, vertices: Sequence[Key], edges: Sequence[EdgeKey]) -> None:
        compact = self.compact
        path = project_path(compact, vertices)
        augment_points(compact.grid, compact.state, path)
        compact.refresh(
            [compact.grid.cell_b[b] for b in path.b_points]
            + [compact.grid.cell_a[a] for a in path.a_points]
        )


class GeoMatcher:
    """
    0/1 matcher on the graph a grid induces at one distance guess.

    Algorithm:
    1. Match every coarse box internally over its weight-0 edges; duals start at 0
    2. Stage 1: Dijkstra over the compact network from the free B-clusters; stop
       when the matching is perfect or no free A-cluster is reachable, else raise
       every point's dual by the distance of its cluster (matched B-points follow
       their mate's cluster)
    3. Stage 2: DFS from every free B-cluster once per free point in it, marking
       edges visited only on backtrack; each compact path found is projected to
       points and augmented there, then the touched cells are reclustered
    4. Repeat stages 1-2
    """

    def __init__(
        self,
        points: PointSet,
        delta: float,
        epsilon: float | None = None,
        r: int | None = None,
        settings: Settings | None = None,
        stage_callback: GeoCallback | None = None,
    ) -> None:
        self._settings = settings or get_settings()
        self.points = points
        self.epsilon = epsilon if epsilon is not None else self._settings.geo.epsilon
        self.r = r if r is not None else default_r(max(points.n_a, points.n_b))
        self.grid = build_grid(points, delta, self.epsilon, self.r)
        self.state = GeoState.empty(points.n_a, points.n_b)
        self.phases: list[PhaseStats] = []
        self.termination: Termination | None = None
        self.preprocess_size = 0
        self._compact: CompactResidual | None = None
        self._notify = stage_callback or (lambda event, matcher: None)

    def compact(self) -> CompactResidual:
        """Compact residual network of the current state."""
        if self._compact is None:
            self._compact = build_compact(self.grid, self.state)
        return self._compact

    def preprocess(self) -> int:
        for a, b in geo_preprocess(self.grid):
            self.state.match(a, b)
        self.preprocess_size = self.state.size
        self._compact = build_compact(self.grid, self.state)
        self._expose(StageEvent.PREPROCESSED)
        logger.debug(
            "Preprocessing matched %d pairs in %d boxes", self.state.size, len(self.grid.boxes())
        )
        return self.preprocess_size

    def run_phase(self) -> PhaseStats | None:
        """Run one phase; None once stage one ends the run."""
        ell = self._stage_one()
        if ell is None:
            return None
        self._expose(StageEvent.STAGE_ONE)

        self.state.phase += 1
        stats = self._stage_two(ell)
        self.phases.append(stats)
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
                context={"phase": stats.phase_index, "delta": self.grid.delta},
            )
        self._expose(StageEvent.STAGE_TWO)
        return stats

    def run(self) -> GeoRunStats:
        self.preprocess()
        limit = self._settings.matcher.phase_limit(self.points.n_a + self.points.n_b)
        while self.run_phase() is not None:
            if len(self.phases) > limit:
                raise InvariantViolation(
                    "Phase limit exceeded", invariant="phase limit", context={"limit": limit}
                )
        self._notify(StageEvent.TERMINATED, self)

        weight = self.realized_weight()
        ledger = phase_ledger(self.phases, weight)
        for warning in ledger.warnings:
            logger.warning("Ledger warning: %s", warning)
        if ledger.violations:
            if self._settings.strict_invariants:
                raise InvariantViolation(
                    "Phase ledger violated",
                    invariant="ledger",
                    context={"violations": ledger.violations, "delta": self.grid.delta},
                )
            for violation in ledger.violations:
                logger.warning("Ledger violation: %s", violation)

        matching = self.state.matching()
        compact = self.compact()
        grid = self.grid
        stats = GeoRunStats(
            delta=grid.delta,
            epsilon=self.epsilon,
            r=self.r,
            outcome=(
                RungOutcome.PERFECT
                if self.points.is_perfect(matching)
                else RungOutcome.NOT_PERFECT
            ),
            termination=self.termination,
            n_a=self.points.n_a,
            n_b=self.points.n_b,
            matching_size=len(matching),
            bottleneck=self.points.bottleneck(matching) if matching else None,
            edge_bound=(1 + self.epsilon / 3) * grid.delta,
            preprocess_size=self.preprocess_size,
            total_phases=len(self.phases),
            total_affected=sum(p.affected_pieces for p in self.phases),
            sum_path_weights=sum(p.sum_path_weights for p in self.phases),
            realized_weight=weight,
            boundary_points=grid.boundary_points(),
            active_cells=len(grid.cells),
            max_neighbors=grid.max_neighbors,
            compact_vertices=compact.vertex_count,
            compact_edges=compact.edge_count,
            shift=grid.shift,
            phases=self.phases,
            ledger=ledger,
            matching=matching,
        )
        logger.debug(
            "delta=%.6g: %s with %d pairs (w=%d, %d boundary points) in %d phases",
            grid.delta,
            stats.outcome,
            stats.matching_size,
            weight,
            stats.boundary_points,
            stats.total_phases,
        )
        return stats

    def realized_weight(self) -> int:
        grid = self.grid
        return sum(
            implicit_weight(grid, grid.cell_a[a], grid.cell_b[b]) for a, b in self.state.matching()
        )

    def point_level_view(self) -> tuple[BipartiteGraph, MatchState]:
        """
        The explicit point-level graph and the current state over it.

        A-point i is vertex i and B-point j is vertex n_a + j; edges join points
        in neighboring cells and carry the implicit weight.
        """
        grid, state = self.grid, self.state
        edges = [
            (a, b, implicit_weight(grid, cell, other))
            for a, cell in enumerate(grid.cell_a)
            for other in grid.neighbors[cell]
            for b in grid.cells[other].b
        ]
        graph = build_graph(self.points.n_a, self.points.n_b, edges)
        view = MatchState.empty(graph)
        view.dual = state.dual_a + state.dual_b
        view.phase = state.phase
        for a, b in state.matching():
            e = graph.find_edge(a, b)
            if e is None:
                raise InvariantViolation(
                    "Matched pair is not an edge of the grid graph",
                    invariant="matching",
                    context={"a": a, "b": b},
                )
            view.match(graph, e)
        return graph, view

    def _stage_one(self) -> int | None:
        state = self.state
        if state.is_perfect():
            self.termination = Termination.PERFECT
            return None

        compact = self.compact()
        dist = compact_distances(compact)
        ell = min(
            (dist[k] for k in compact.keys(Side.A) if k in dist and compact.free_count(k)),
            default=None,
        )
        if ell is None:
            self.termination = Termination.UNREACHABLE
            return None

        rise_a = [max(0, ell - dist.get(compact.key_of_a(a), ell)) for a in range(self.points.n_a)]
        rise_b = [
            ell if mate == FREE else max(0, ell - dist.get(compact.key_of_a(mate), ell))
            for mate in state.mate_b
        ]
        for a, rise in enumerate(rise_a):
            state.dual_a[a] += rise
        for b, rise in enumerate(rise_b):
            state.dual_b[b] += rise
        self._compact = build_compact(self.grid, state)
        return ell

    def _stage_two(self, ell: int) -> PhaseStats:
        state = self.state
        compact = self.compact()
        search: AugmentingPathSearch[Key, EdgeKey] = AugmentingPathSearch(
            _CompactNetwork(compact), mark_on_backtrack=True
        )
        stats = PhaseStats(phase_index=state.phase, ell=ell, y_max=state.y_max())

        for root, count in [(k, compact.free_count(k)) for k in compact.sources()]:
            for _ in range(count):
                if not compact.free_count(root):
                    break
                outcome = search.run_from(root)
                stats.visited_edges += outcome.visited
                stats.deleted_edges += outcome.deleted
                if not outcome.augmented:
                    # the failed search deleted every edge it saw from this root
                    break
                stats.augmenting_paths += 1
                stats.affected_pieces += outcome.affected_pieces
                stats.affected_per_path.append(outcome.affected_pieces)
                stats.path_weights.append(outcome.path_weight)
        return stats

    def _expose(self, event: StageEvent) -> None:
        if self._settings.matcher.check_invariants:
            graph, view = self.point_level_view()
            problems = state_violations(graph, view)
            if problems:
                raise InvariantViolation(
                    f"State check failed after {event}",
                    invariant="feasibility",
                    context={"event": str(event), "problems": problems[:10]},
                )
        self._notify(event, self)


def coincident_run(points: PointSet, epsilon: float, r: int) -> GeoRunStats:
    """The zero-distance guess: match only points at identical coordinates."""
    matching = coincident_matching(points)
    perfect = points.is_perfect(matching)
    return GeoRunStats(
        delta=0.0,
        epsilon=epsilon,
        r=r,
        outcome=RungOutcome.PERFECT if perfect else RungOutcome.NOT_PERFECT,
        termination=Termination.PERFECT if perfect else Termination.UNREACHABLE,
        n_a=points.n_a,
        n_b=points.n_b,
        matching_size=len(matching),
        bottleneck=0.0 if matching else None,
        edge_bound=0.0,
        preprocess_size=len(matching),
        matching=matching,
    )


def _check_epsilon(epsilon: float) -> None:
    if not 0 < epsilon <= 1:
        raise InputError("epsilon must lie in (0, 1]", reason=f"epsilon={epsilon}")


def geo_match(
    points: PointSet,
    delta: float,
    epsilon: float | None = None,
    r: int | None = None,
    settings: Settings | None = None,
    stage_callback: GeoCallback | None = None,
) -> GeoRunStats:
    """
    Maximum matching of the grid graph at one distance guess.

    The outcome is PERFECT when every point is matched, NOT_PERFECT otherwise.
    """
    settings = settings or get_settings()
    epsilon = epsilon if epsilon is not None else settings.geo.epsilon
    _check_epsilon(epsilon)
    r = r if r is not None else default_r(max(points.n_a, points.n_b))
    if delta == 0:
        return coincident_run(points, epsilon, r)
    return GeoMatcher(points, delta, epsilon, r, settings, stage_callback).run()


def bottleneck_match(
    points: PointSet,
    epsilon: float | None = None,
    r: int | None = None,
    settings: Settings | None = None,
    oracle: bool | None = None,
) -> BottleneckResult:
    """
    Approximate bottleneck matching by one grid run per ladder guess.

    Every guess is run unless early stopping is configured, in which case the
    ascending scan returns at the first perfect guess. The perfect matching
    with the smallest realized bottleneck is returned; it is within a factor
    (1 + epsilon) of the optimum.

    Args:
        points: Balanced point sets
        epsilon: Approximation parameter in (0, 1]; defaults to the configured one
        r: Coarse box parameter, a perfect square; defaults to about n^(2/3)
        settings: Optional settings (uses global if not provided)
        oracle: Also compute the exact bottleneck; defaults to on for small n

    Raises:
        SizeMismatchError: if |A| != |B|
    """
    settings = settings or get_settings()
    epsilon = epsilon if epsilon is not None else settings.geo.epsilon
    _check_epsilon(epsilon)
    n = points.require_balanced()
    r = r if r is not None else default_r(n)
    if n == 0:
        return BottleneckResult(
            n=0, epsilon=epsilon, r=r, distance=0.0, delta=0.0, oracle_distance=0.0
        )

    rungs: list[GeoRunStats] = []
    best: GeoRunStats | None = None
    for delta in delta_candidates(points, epsilon):
        run = geo_match(points, delta, epsilon, r, settings)
        rungs.append(run)
        if run.perfect and run.bottleneck is not None:
            if best is None or best.bottleneck is None or run.bottleneck < best.bottleneck:
                best = run
            if settings.geo.early_stop:
                break

    if best is None or best.bottleneck is None:
        raise InvariantViolation(
            "No distance guess produced a perfect matching",
            invariant="ladder",
            context={"rungs": len(rungs)},
        )

    use_oracle = oracle if oracle is not None else n <= settings.geo.oracle_max_points
    oracle_distance = oracle_bottleneck(points.a, points.b).distance if use_oracle else None
    result = BottleneckResult(
        n=n,
        epsilon=epsilon,
        r=r,
        distance=best.bottleneck,
        delta=best.delta,
        matching=best.matching,
        rungs=rungs,
        oracle_distance=oracle_distance,
    )
    logger.info(
        "Bottleneck %.6g from delta=%.6g over %d guesses (n=%d, eps=%g, r=%d)",
        result.distance,
        result.delta,
        len(rungs),
        n,
        epsilon,
        r,
    )
    return result
