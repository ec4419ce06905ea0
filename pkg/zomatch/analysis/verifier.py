"""Seeded cross-checks of the matchers against exact oracles and the invariant suite."""

import logging
from collections.abc import Callable

import numpy as np

from zomatch.analysis.models import VerifyCase, VerifyReport
from zomatch.baseline.oracles import brute_force_max_matching
from zomatch.config import Settings, get_settings
from zomatch.core.enums import Distribution, StageEvent
from zomatch.core.exceptions import InvariantViolation
from zomatch.core.graph import BipartiteGraph
from zomatch.core.state import FREE, MatchState
from zomatch.data.generators import random_graph, random_points
from zomatch.geo.compact import compact_distances
from zomatch.geo.matcher import GeoMatcher, bottleneck_match, geo_match
from zomatch.matcher.engine import infinite_distance, run_matcher, shortest_slack_distances
from zomatch.matcher.invariants import (
    admissible_cycle_violations,
    has_admissible_augmenting_path,
    state_violations,
)

logger = logging.getLogger(__name__)

WEIGHT_ONE_PROBABILITIES = (0.1, 0.5, 0.9)
MAX_SIDE = 60
MAX_EDGES = 400
MAX_POINTS = 40


def case_seed(seed: int, index: int) -> int:
    """Independent, reproducible seed for the index-th case of a run."""
    return int(np.random.SeedSequence([seed, index]).generate_state(1)[0])


def compact_distance_mismatches(matcher: GeoMatcher) -> list[str]:
    """
    Compare slack distances in the compact network with the point-level ones.

    Every A-point must sit at its cluster's distance. A matched B-point is
    reached only through its mate, so it is compared with the mate's cluster.
    """
    compact = matcher.compact()
    cluster = compact_distances(compact)
    graph, view = matcher.point_level_view()
    point = shortest_slack_distances(graph, view)
    inf = infinite_distance(graph)
    n_a = matcher.points.n_a

    problems: list[str] = []
    for a in range(n_a):
        expected = cluster.get(compact.key_of_a(a), inf)
        if point[a] != expected:
            problems.append(f"A-point {a}: point distance {point[a]}, cluster distance {expected}")
    for b, mate in enumerate(matcher.state.mate_b):
        key = compact.key_of_b(b) if mate == FREE else compact.key_of_a(mate)
        expected = cluster.get(key, inf)
        if point[n_a + b] != expected:
            problems.append(
                f"B-point {b}: point distance {point[n_a + b]}, cluster distance {expected}"
            )
    return problems


class Verifier:
    """Runs seeded instances and collects every oracle mismatch and invariant failure."""

    def __init__(
        self,
        settings: Settings | None = None,
        progress_callback: Callable[[str], None] | None = None,
    ) -> None:
        base = settings or get_settings()
        # checks are collected here, so the engines only record ledger failures
        self._settings = base.model_copy(
            update={
                "strict_invariants": False,
                "matcher": base.matcher.model_copy(update={"check_invariants": False}),
            }
        )
        self._progress = progress_callback or (lambda message: None)

    def run(self, count: int, seed: int, points: int = 0) -> VerifyReport:
        """
        Verify count random graphs, then points random point sets.

        Args:
            count: Number of graph instances
            seed: Base seed; case i uses a seed derived from (seed, i)
            points: Number of point-set instances

        Returns:
            VerifyReport with one case per instance
        """
        report = VerifyReport(seed=seed)
        for index in range(count):
            self._progress(f"graph {index + 1}/{count}")
            report.cases.append(self.graph_case(index, case_seed(seed, index)))
        for index in range(count, count + points):
            self._progress(f"points {index - count + 1}/{points}")
            report.cases.append(self.point_case(index, case_seed(seed, index)))

        logger.info("Verify: %s, %d violations", report.summary(), report.violation_count)
        return report

    def graph_case(self, index: int, seed: int) -> VerifyCase:
        rng = np.random.default_rng(seed)
        n_a = int(rng.integers(1, MAX_SIDE + 1))
        n_b = int(rng.integers(1, MAX_SIDE + 1))
        m = int(rng.integers(0, min(MAX_EDGES, n_a * n_b) + 1))
        p = WEIGHT_ONE_PROBABILITIES[index % len(WEIGHT_ONE_PROBABILITIES)]
        graph = random_graph(n_a, n_b, m, p, seed)

        violations: list[str] = []
        expected = brute_force_max_matching(graph, self._settings.brute_force_limit).matching_size
        try:
            result = run_matcher(
                graph,
                settings=self._settings,
                stage_callback=self._graph_observer(graph, violations),
            )
        except InvariantViolation as e:
            violations.append(str(e))
            return VerifyCase(
                index=index,
                kind="graph",
                seed=seed,
                n_a=n_a,
                n_b=n_b,
                m=m,
                weight_one_probability=p,
                expected=expected,
                observed=0,
                oracle_equal=False,
                violations=violations,
            )

        violations += result.ledger.violations
        return VerifyCase(
            index=index,
            kind="graph",
            seed=seed,
            n_a=n_a,
            n_b=n_b,
            m=m,
            weight_one_probability=p,
            expected=expected,
            observed=result.size,
            oracle_equal=result.size == expected,
            phases=result.total_phases,
            weight=result.weight,
            violations=violations,
        )

    def point_case(self, index: int, seed: int) -> VerifyCase:
        rng = np.random.default_rng(seed)
        n = int(rng.integers(2, MAX_POINTS + 1))
        distribution = list(Distribution)[index % len(Distribution)]
        points = random_points(n, distribution, seed)

        violations: list[str] = []
        observer = self._geo_observer(violations, self._settings.geo.verify_phases)
        try:
            result = bottleneck_match(points, settings=self._settings, oracle=True)
            # per-stage geometric checks rerun only the winning guess
            if result.delta > 0:
                geo_match(
                    points,
                    result.delta,
                    result.epsilon,
                    result.r,
                    settings=self._settings,
                    stage_callback=observer,
                )
        except InvariantViolation as e:
            violations.append(str(e))
            return VerifyCase(
                index=index,
                kind="points",
                seed=seed,
                n_a=n,
                n_b=n,
                expected=0.0,
                observed=0.0,
                oracle_equal=False,
                violations=violations,
            )

        for rung in result.rungs:
            violations += [f"delta={rung.delta:.6g}: {v}" for v in rung.ledger.violations]
            if not rung.weight_within_boundary:
                violations.append(
                    f"delta={rung.delta:.6g}: weight {rung.realized_weight}"
                    f" exceeds {rung.boundary_points} boundary points"
                )
        perfect = len(result.matching) == n and points.is_perfect(result.matching)
        return VerifyCase(
            index=index,
            kind="points",
            seed=seed,
            n_a=n,
            n_b=n,
            expected=result.oracle_distance or 0.0,
            observed=result.distance,
            oracle_equal=perfect and result.within_guarantee,
            phases=sum(rung.total_phases for rung in result.rungs),
            violations=violations,
        )

    def _graph_observer(
        self,
        graph: BipartiteGraph,
        violations: list[str],
    ) -> Callable[[StageEvent, MatchState], None]:
        check_cycles = graph.vertex_count <= self._settings.matcher.cycle_check_max_vertices

        def observe(event: StageEvent, state: MatchState) -> None:
            problems = state_violations(graph, state)
            if check_cycles:
                problems += [
                    f"weight-1 edge {e} lies on an admissible cycle"
                    for e in admissible_cycle_violations(graph, state)
                ]
            if event is StageEvent.STAGE_ONE and not has_admissible_augmenting_path(graph, state):
                problems.append("no admissible augmenting path after the dual update")
            if event is StageEvent.STAGE_TWO and has_admissible_augmenting_path(graph, state):
                problems.append("admissible augmenting path survived stage two")
            violations.extend(f"{event} phase {state.phase}: {p}" for p in problems)

        return observe

    @staticmethod
    def _geo_observer(
        violations: list[str],
        checked_phases: int,
    ) -> Callable[[StageEvent, GeoMatcher], None]:
        def observe(event: StageEvent, matcher: GeoMatcher) -> None:
            if event is StageEvent.TERMINATED or len(matcher.phases) > checked_phases:
                return
            graph, view = matcher.point_level_view()
            problems = state_violations(graph, view)
            problems += compact_distance_mismatches(matcher)
            spread = matcher.compact().spread()
            if spread > 2:
                problems.append(f"dual spread {spread} within a cell exceeds 2")
            violations.extend(f"{event} phase {matcher.state.phase}: {p}" for p in problems)

        return observe
