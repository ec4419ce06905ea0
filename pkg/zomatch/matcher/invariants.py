"""Executable checks for the matcher's invariants and phase-count bounds."""

import math
from collections import deque
from collections.abc import Sequence

import networkx as nx

from zomatch.core.graph import BipartiteGraph
from zomatch.core.state import MatchState, ResidualView, check_feasibility
from zomatch.matcher.models import LedgerEntry, LedgerReport, PhaseStats


def free_dual_violations(graph: BipartiteGraph, state: MatchState) -> list[str]:
    """Free B-vertices must all sit at y_max and free A-vertices at 0."""
    problems: list[str] = []
    y_max = state.y_max(graph)
    for v in range(graph.vertex_count):
        if not state.is_free(v):
            continue
        if graph.is_a(v) and state.dual[v] != 0:
            problems.append(f"free A-vertex {v} has dual {state.dual[v]}, expected 0")
        elif not graph.is_a(v) and state.dual[v] != y_max:
            problems.append(f"free B-vertex {v} has dual {state.dual[v]}, expected {y_max}")
    return problems


def integrality_violations(state: MatchState) -> list[str]:
    return [
        f"vertex {v} has non-integer dual {y!r}"
        for v, y in enumerate(state.dual)
        if not isinstance(y, int) or isinstance(y, bool)
    ]


def has_admissible_augmenting_path(graph: BipartiteGraph, state: MatchState) -> bool:
    """BFS from the free B-vertices over zero-slack residual edges, ignoring deletions."""
    view = ResidualView(graph, state)
    seen = [False] * graph.vertex_count
    queue = deque(view.sources())
    for v in queue:
        seen[v] = True
    while queue:
        v = queue.popleft()
        for _, head in view.admissible(v):
            if seen[head]:
                continue
            if view.is_free_target(head):
                return True
            seen[head] = True
            queue.append(head)
    return False


def admissible_cycle_violations(graph: BipartiteGraph, state: MatchState) -> list[int]:
    """Weight-1 admissible edges that close a directed cycle of zero-slack edges."""
    view = ResidualView(graph, state)
    digraph = nx.DiGraph()
    digraph.add_nodes_from(range(graph.vertex_count))
    weight_one: list[tuple[int, int, int]] = []
    for v in range(graph.vertex_count):
        for e, head in view.admissible(v):
            digraph.add_edge(v, head)
            if graph.weight[e]:
                weight_one.append((e, v, head))

    component: dict[int, int] = {}
    for index, members in enumerate(nx.strongly_connected_components(digraph)):
        for v in members:
            component[v] = index
    return [e for e, tail, head in weight_one if component[tail] == component[head]]


def matched_distance_violations(
    graph: BipartiteGraph,
    state: MatchState,
    distances: Sequence[int],
) -> list[str]:
    """Both ends of a matching edge must be at the same shortest-path distance."""
    return [
        f"matched pair ({a}, {state.mate[a]}) at distances"
        f" {distances[a]} and {distances[state.mate[a]]}"
        for a in range(graph.n_a)
        if not state.is_free(a) and distances[a] != distances[state.mate[a]]
    ]


def state_violations(graph: BipartiteGraph, state: MatchState) -> list[str]:
    """Feasibility, integrality, and free-vertex dual checks for an exposed state."""
    problems = [str(v) for v in check_feasibility(graph, state)]
    problems += integrality_violations(state)
    problems += free_dual_violations(graph, state)
    return problems


def phase_ledger(phases: Sequence[PhaseStats], weight: int) -> LedgerReport:
    """
    Check a run's phases against the phase-count bounds.

    Args:
        phases: Per-phase statistics in run order
        weight: Realized weight w of the final maximum matching

    Returns:
        LedgerReport with one entry per checked bound
    """
    report = LedgerReport()
    lam = len(phases)
    limit = 3 * math.ceil(math.sqrt(weight))
    report.entries.append(
        LedgerEntry(name="phase count", observed=lam, limit=limit, holds=lam <= limit)
    )

    path_weights = [w for p in phases for w in p.path_weights]
    affected = [k for p in phases for k in p.affected_per_path]
    t = len(path_weights)
    over = [
        f"path {index} of {t} costs {cost} > 2w/{t - index + 1}"
        for index, cost in enumerate(path_weights, start=1)
        if cost * (t - index + 1) > 2 * weight
    ]
    report.entries.append(
        LedgerEntry(
            name="path cost",
            observed=len(over),
            limit=0,
            holds=not over,
            detail="; ".join(over),
        )
    )

    total_affected, total_cost = sum(affected), sum(path_weights)
    report.entries.append(
        LedgerEntry(
            name="affected pieces",
            observed=total_affected,
            limit=total_cost,
            holds=total_affected <= total_cost,
        )
    )
    for index, (pieces, cost) in enumerate(zip(affected, path_weights, strict=True), start=1):
        if pieces > cost:
            report.warnings.append(f"path {index} touches {pieces} pieces but costs {cost}")

    for phase in phases:
        for cost in phase.path_weights:
            if cost != phase.y_max:
                report.entries.append(
                    LedgerEntry(
                        name="path cost equals y_max",
                        observed=cost,
                        limit=phase.y_max,
                        holds=False,
                        detail=f"phase {phase.phase_index} path costs {cost}, y_max {phase.y_max}",
                    )
                )
        if phase.augmenting_paths < 1:
            report.entries.append(
                LedgerEntry(
                    name="augmentations per phase",
                    observed=phase.augmenting_paths,
                    limit=1,
                    holds=False,
                    detail=f"phase {phase.phase_index} found no augmenting path",
                )
            )
    for previous, current in zip(phases, phases[1:], strict=False):
        if current.y_max < previous.y_max + 1:
            report.entries.append(
                LedgerEntry(
                    name="y_max growth",
                    observed=current.y_max - previous.y_max,
                    limit=1,
                    holds=False,
                    detail=f"y_max went {previous.y_max} -> {current.y_max}",
                )
            )
    return report
