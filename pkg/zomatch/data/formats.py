"""Plain-text instance files: bipartite graphs, point sets and weight lists."""

from pathlib import Path

from zomatch.core.enums import Side
from zomatch.core.exceptions import FormatError
from zomatch.core.graph import BipartiteGraph, build_graph, compute_pieces
from zomatch.geo.points import Point, PointSet


def _content_lines(text: str) -> list[tuple[int, str]]:
    """Non-blank lines with their 1-based numbers."""
    numbered = enumerate(text.splitlines(), start=1)
    return [(number, line.strip()) for number, line in numbered if line.strip()]


def _ints(fields: list[str], count: int, path: str | None, number: int) -> list[int]:
    if len(fields) != count:
        raise FormatError(
            f"Expected {count} fields, got {len(fields)}", path=path, line_number=number
        )
    try:
        return [int(f) for f in fields]
    except ValueError as e:
        raise FormatError(f"Non-integer field: {e}", path=path, line_number=number) from e


def parse_graph_text(text: str, path: str | None = None) -> BipartiteGraph:
    """
    Parse a graph: a header "n_a n_b m", then m lines "a b w".

    Lines starting with "#" are comments, except "# coord <a|b> <index> <x> <y>",
    which attaches lattice coordinates to a vertex.

    Raises:
        FormatError: on a malformed line, naming its number
    """
    header: tuple[int, int, int] | None = None
    edges: list[tuple[int, int, int]] = []
    seen: set[tuple[int, int]] = set()
    coordinates: dict[int, tuple[int, int]] = {}
    pending: list[tuple[int, str, int, int, int]] = []

    for number, line in _content_lines(text):
        if line.startswith("#"):
            fields = line[1:].split()
            if fields and fields[0] == "coord":
                if len(fields) != 5 or fields[1].lower() not in ("a", "b"):
                    raise FormatError(
                        "Expected '# coord <a|b> <index> <x> <y>'", path=path, line_number=number
                    )
                index, x, y = _ints(fields[2:], 3, path, number)
                pending.append((number, fields[1].lower(), index, x, y))
            continue

        fields = line.split()
        if header is None:
            n_a, n_b, m = _ints(fields, 3, path, number)
            if min(n_a, n_b, m) < 0:
                raise FormatError(
                    "Header values must be non-negative", path=path, line_number=number
                )
            header = (n_a, n_b, m)
            continue

        a, b, w = _ints(fields, 3, path, number)
        n_a, n_b, _ = header
        if w not in (0, 1):
            raise FormatError(f"Edge weight must be 0 or 1, got {w}", path=path, line_number=number)
        if not (0 <= a < n_a and 0 <= b < n_b):
            raise FormatError(f"Edge ({a}, {b}) is out of range", path=path, line_number=number)
        if (a, b) in seen:
            raise FormatError(f"Duplicate edge ({a}, {b})", path=path, line_number=number)
        seen.add((a, b))
        edges.append((a, b, w))

    if header is None:
        raise FormatError("Missing header line 'n_a n_b m'", path=path, line_number=None)
    n_a, n_b, m = header
    if len(edges) != m:
        raise FormatError(
            f"Header declares {m} edges, found {len(edges)}", path=path, line_number=None
        )

    for number, side, index, x, y in pending:
        limit = n_a if side == "a" else n_b
        if not 0 <= index < limit:
            raise FormatError(
                f"Coordinate index {index} is out of range", path=path, line_number=number
            )
        coordinates[index if side == "a" else n_a + index] = (x, y)

    graph = build_graph(n_a, n_b, edges)
    graph.coordinates = coordinates or None
    compute_pieces(graph)
    return graph


def parse_graph_file(path: str | Path) -> BipartiteGraph:
    """Read a graph file; see parse_graph_text for the format."""
    return parse_graph_text(Path(path).read_text(encoding="utf-8"), path=str(path))


def emit_graph(graph: BipartiteGraph) -> str:
    lines = [f"{graph.n_a} {graph.n_b} {graph.m}"]
    lines += [f"{a} {b} {w}" for a, b, w in graph.edges()]
    for v, (x, y) in sorted((graph.coordinates or {}).items()):
        side, index = ("a", v) if graph.is_a(v) else ("b", v - graph.n_a)
        lines.append(f"# coord {side} {index} {x} {y}")
    return "\n".join(lines) + "\n"


def write_graph_file(graph: BipartiteGraph, path: str | Path) -> None:
    Path(path).write_text(emit_graph(graph), encoding="utf-8")


def parse_points_text(text: str, path: str | None = None) -> PointSet:
    """
    Parse a point set: one "A x y" or "B x y" line per point.

    Blank lines and lines starting with "#" are skipped. Sizes are not checked
    here; bottleneck matching rejects unequal sides itself.

    Raises:
        FormatError: on a bad side label or a non-numeric coordinate
    """
    sides: dict[Side, list[Point]] = {Side.A: [], Side.B: []}
    for number, line in _content_lines(text):
        if line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 3 or fields[0].upper() not in ("A", "B"):
            raise FormatError("Expected '<A|B> <x> <y>'", path=path, line_number=number)
        try:
            x, y = float(fields[1]), float(fields[2])
        except ValueError as e:
            raise FormatError(f"Non-numeric coordinate: {e}", path=path, line_number=number) from e
        sides[Side(fields[0].upper())].append((x, y))
    return PointSet.from_points(sides[Side.A], sides[Side.B])


def parse_points_file(path: str | Path) -> PointSet:
    """Read a point file; see parse_points_text for the format."""
    return parse_points_text(Path(path).read_text(encoding="utf-8"), path=str(path))


def emit_points(points: PointSet) -> str:
    lines = [f"A {float(x)!r} {float(y)!r}" for x, y in points.a.tolist()]
    lines += [f"B {float(x)!r} {float(y)!r}" for x, y in points.b.tolist()]
    return "\n".join(lines) + "\n"


def write_points_file(points: PointSet, path: str | Path) -> None:
    Path(path).write_text(emit_points(points), encoding="utf-8")


def parse_weights_file(path: str | Path, m: int) -> list[int]:
    """
    Read m edge weights, whitespace separated, in edge order.

    Raises:
        FormatError: on a weight outside {0, 1} or a count other than m
    """
    weights: list[int] = []
    for number, line in _content_lines(Path(path).read_text(encoding="utf-8")):
        if line.startswith("#"):
            continue
        for field in line.split():
            if field not in ("0", "1"):
                raise FormatError(
                    f"Weight must be 0 or 1, got {field!r}", path=str(path), line_number=number
                )
            weights.append(int(field))
    if len(weights) != m:
        raise FormatError(
            f"Expected {m} weights, found {len(weights)}", path=str(path), line_number=None
        )
    return weights
