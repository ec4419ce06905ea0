"""Grid-like bipartite lattices and their median-line separator."""

from collections.abc import Sequence

from zomatch.core.exceptions import InputError, UnsupportedFamilyError
from zomatch.core.graph import BipartiteGraph, build_graph
from zomatch.separator.models import SeparatorStep

_STEPS = ((1, 0), (0, 1), (-1, 0), (0, -1))


def lattice_graph(width: int, height: int) -> BipartiteGraph:
    """
    The width x height grid graph, 2-colored by parity, with all weights 0.

    Lattice point (x, y) is an A-vertex when x + y is even and a B-vertex
    otherwise. Vertices of each side are numbered in row-major order, and
    every vertex carries its lattice coordinates.
    """
    if width < 1 or height < 1:
        raise InputError("Lattice dimensions must be positive", reason=f"{width}x{height}")

    index: dict[tuple[int, int], int] = {}
    counts = [0, 0]
    for y in range(height):
        for x in range(width):
            side = (x + y) % 2
            index[(x, y)] = counts[side]
            counts[side] += 1
    n_a, n_b = counts

    edges: list[tuple[int, int, int]] = []
    for y in range(height):
        for x in range(width):
            if (x + y) % 2:
                continue
            for dx, dy in _STEPS:
                neighbor = (x + dx, y + dy)
                if neighbor in index:
                    edges.append((index[(x, y)], index[neighbor], 0))

    graph = build_graph(n_a, n_b, edges)
    graph.coordinates = {
        (index[(x, y)] if (x + y) % 2 == 0 else n_a + index[(x, y)]): (x, y)
        for (x, y) in index
    }
    return graph


def grid_graph_separator(graph: BipartiteGraph, vertices: Sequence[int]) -> SeparatorStep:
    """
    Split a vertex subset along the median line of its longer extent.

    The separator is every vertex on the median column (or row, when the rows
    span further); the sides are the vertices strictly before and after it.
    Columns win ties.

    Raises:
        UnsupportedFamilyError: if any vertex lacks lattice coordinates
    """
    coordinates = graph.coordinates
    if coordinates is None or any(v not in coordinates for v in vertices):
        raise UnsupportedFamilyError(
            "Grid separator needs lattice coordinates on every vertex",
            details={"vertices": len(vertices)},
        )
    if not vertices:
        return SeparatorStep()

    xs = [coordinates[v][0] for v in vertices]
    ys = [coordinates[v][1] for v in vertices]
    axis = 0 if max(xs) - min(xs) >= max(ys) - min(ys) else 1
    values = xs if axis == 0 else ys
    median = sorted(values)[len(values) // 2]

    separator: list[int] = []
    side_x: list[int] = []
    side_y: list[int] = []
    for v, value in zip(vertices, values, strict=True):
        if value < median:
            side_x.append(v)
        elif value > median:
            side_y.append(v)
        else:
            separator.append(v)

    return SeparatorStep(
        vertices=list(vertices),
        separator=separator,
        side_x=side_x,
        side_y=side_y,
    )
