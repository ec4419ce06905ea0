"""Recursive balanced separation into pieces, and the 0/1 weighting it induces."""

import logging
import math
from collections.abc import Callable, Sequence

from zomatch.config import Settings, get_settings
from zomatch.core.exceptions import InputError, SeparatorError
from zomatch.core.graph import BipartiteGraph, compute_pieces
from zomatch.matcher.engine import run_matcher
from zomatch.matcher.models import MatchResult
from zomatch.separator.lattice import grid_graph_separator
from zomatch.separator.models import SeparatorStep, WeightAssignment

logger = logging.getLogger(__name__)

SeparatorFn = Callable[[BipartiteGraph, Sequence[int]], SeparatorStep]


def default_piece_size(n: int) -> int:
    """Target piece size r = n^(2/3)."""
    return max(1, round(n ** (2 / 3)))


def inner_edge_count(graph: BipartiteGraph, vertices: Sequence[int]) -> int:
    """Edges with both endpoints in the subset."""
    inside = set(vertices)
    return sum(
        1
        for v in vertices
        if graph.is_a(v)
        for e in graph.incident(v)
        if graph.other(e, v) in inside
    )


def validate_step(graph: BipartiteGraph, step: SeparatorStep, alpha: float) -> None:
    """
    Reject a step that is not a balanced separation of its subset.

    Raises:
        SeparatorError: when the parts do not partition the subset, an edge
            joins the two sides, the separator is empty, or the larger side
            holds more than (1 - 1/alpha) of the subset
    """
    parts = step.separator + step.side_x + step.side_y
    context: dict[str, object] = {"depth": step.depth, "size": len(step.vertices)}

    if len(parts) != len(set(parts)) or set(parts) != set(step.vertices):
        raise SeparatorError(
            "Separator step does not partition its subset", invariant="partition", context=context
        )
    if step.vertices and not step.separator:
        raise SeparatorError(
            "Separator step has an empty separator", invariant="progress", context=context
        )

    side_y = set(step.side_y)
    crossing = [
        (x, graph.other(e, x))
        for x in step.side_x
        for e in graph.incident(x)
        if graph.other(e, x) in side_y
    ]
    if crossing:
        raise SeparatorError(
            "An edge joins the two sides of a separator",
            invariant="separation",
            context={**context, "crossing": crossing[:5]},
        )

    larger = max(len(step.side_x), len(step.side_y))
    if larger > (1 - 1 / alpha) * len(step.vertices):
        raise SeparatorError(
            "Separator step is unbalanced",
            invariant="balance",
            context={**context, "larger_side": larger, "alpha": alpha},
        )


def assign_weights_recursive(
    graph: BipartiteGraph,
    r: int,
    separator_fn: SeparatorFn = grid_graph_separator,
    settings: Settings | None = None,
) -> WeightAssignment:
    """
    Split the graph with balanced separators until every part is small.

    A part is split again while it has more than r vertices or more than
    m*r/n inner edges. Every edge incident on a separator vertex gets weight 1,
    every other edge weight 0. Separator vertices leave the recursion.

    Args:
        graph: Graph to weight; its own weights are ignored
        r: Target piece size
        separator_fn: Balanced separator for a vertex subset
        settings: Optional settings (uses global if not provided)

    Returns:
        WeightAssignment with weights, the step trace and piece statistics

    Raises:
        SeparatorError: on a rejected step, or (strict mode) pieces over bounds
    """
    if r < 1:
        raise InputError("Target piece size must be positive", reason=f"r={r}")
    settings = settings or get_settings()
    constants = settings.separator

    n, m = graph.vertex_count, graph.m
    edge_threshold = m * r / n if n else 0.0
    weights = [0] * m
    steps: list[SeparatorStep] = []

    stack: list[tuple[list[int], int]] = [(list(range(n)), 0)]
    while stack:
        vertices, depth = stack.pop()
        if len(vertices) <= r and inner_edge_count(graph, vertices) <= edge_threshold:
            continue

        step = separator_fn(graph, vertices).model_copy(update={"depth": depth})
        validate_step(graph, step, constants.balance_alpha)
        steps.append(step)
        for v in step.separator:
            for e in graph.incident(v):
                weights[e] = 1

        stack.append((step.side_y, depth + 1))
        stack.append((step.side_x, depth + 1))

    pieces = compute_pieces(graph.reweighted(weights))
    assignment = WeightAssignment(
        r=r,
        weights=weights,
        steps=steps,
        vertex_bound=constants.vertex_factor * r,
        edge_bound=constants.edge_factor * edge_threshold,
        piece_count=pieces.piece_count,
        max_piece_vertices=pieces.max_piece_vertices,
        max_piece_edges=pieces.max_piece_edges,
    )
    logger.debug(
        "Separated %d vertices with %d steps into %d pieces (largest %d vertices, %d edges)",
        n,
        len(steps),
        pieces.piece_count,
        assignment.max_piece_vertices,
        assignment.max_piece_edges,
    )

    if not assignment.within_bounds:
        message = "Pieces exceed the configured size bounds"
        context = {
            "max_piece_vertices": assignment.max_piece_vertices,
            "vertex_bound": assignment.vertex_bound,
            "max_piece_edges": assignment.max_piece_edges,
            "edge_bound": assignment.edge_bound,
        }
        if settings.strict_invariants:
            raise SeparatorError(message, invariant="piece size", context=context)
        logger.warning("%s: %s", message, context)
    return assignment


def measure_weight(
    graph: BipartiteGraph,
    assignment: WeightAssignment,
    settings: Settings | None = None,
) -> tuple[WeightAssignment, MatchResult]:
    """
    Run the matcher under an assignment and record w and c = w * sqrt(r) / n.

    n is the total vertex count.
    """
    result = run_matcher(assignment.apply(graph), settings=settings)
    n = graph.vertex_count
    constant = result.weight * math.sqrt(assignment.r) / n if n else 0.0
    measured = assignment.model_copy(
        update={
            "realized_weight": result.weight,
            "matching_size": result.size,
            "constant": constant,
        }
    )
    return measured, result
