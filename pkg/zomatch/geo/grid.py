"""Fine grid cells, their neighborhoods, and the shifted coarse grid that cuts pieces."""

import bisect
import math
from collections import Counter
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field

import numpy as np
import numpy.typing as npt

from zomatch.core.exceptions import InputError
from zomatch.geo.models import ShiftChoice
from zomatch.geo.points import PointSet

Cell = tuple[int, int]

_TOLERANCE = 1e-9


def cell_side(delta: float, epsilon: float) -> float:
    return epsilon * delta / (6 * math.sqrt(2))


def neighbor_radius(epsilon: float) -> float:
    """The distance guess measured in fine cells."""
    return 6 * math.sqrt(2) / epsilon


def cell_gap_sq(dx: int, dy: int) -> int:
    """Squared minimum distance, in cell units, between cells offset by (dx, dy)."""
    return max(abs(dx) - 1, 0) ** 2 + max(abs(dy) - 1, 0) ** 2


def neighbor_offsets(epsilon: float) -> list[Cell]:
    """Every offset whose cell lies within the distance guess of the origin cell."""
    limit = 72 / epsilon**2 + _TOLERANCE
    reach = math.floor(neighbor_radius(epsilon)) + 1
    return [
        (dx, dy)
        for dx in range(-reach, reach + 1)
        for dy in range(-reach, reach + 1)
        if cell_gap_sq(dx, dy) <= limit
    ]


def window_neighbors(cells: Iterable[Cell], epsilon: float) -> dict[Cell, list[Cell]]:
    """Active neighbors of every active cell, by scanning the offset window."""
    active = set(cells)
    offsets = neighbor_offsets(epsilon)
    return {
        (x, y): sorted((x + dx, y + dy) for dx, dy in offsets if (x + dx, y + dy) in active)
        for x, y in sorted(active)
    }


def pairwise_neighbors(cells: Iterable[Cell], epsilon: float) -> dict[Cell, list[Cell]]:
    """Active neighbors of every active cell, by testing all pairs at once."""
    ordered = sorted(set(cells))
    if not ordered:
        return {}
    coords = np.asarray(ordered, dtype=np.int64)
    gap = np.maximum(np.abs(coords[:, None, :] - coords[None, :, :]) - 1, 0)
    close = (gap**2).sum(axis=2) <= 72 / epsilon**2 + _TOLERANCE
    return {cell: [ordered[j] for j in np.flatnonzero(close[i])] for i, cell in enumerate(ordered)}


def cell_neighbors(cells: Iterable[Cell], epsilon: float) -> dict[Cell, list[Cell]]:
    """N(cell) over active cells, by whichever scan touches fewer cell pairs."""
    active = list(cells)
    if len(active) <= len(neighbor_offsets(epsilon)):
        return pairwise_neighbors(active, epsilon)
    return window_neighbors(active, epsilon)


def shift_lines(shift: int, root: int, extent_cells: float) -> list[int]:
    """
    Positions of the coarse lines at one offset, over the bounding square.

    The nearest line below 0 and the nearest line above the extent are
    included, since cells at either edge can lie within delta of them.
    """
    position = shift - root
    if position >= 0:
        position -= root
    lines: list[int] = []
    while position <= extent_cells:
        lines.append(position)
        position += root
    lines.append(position)
    return lines


def near_line(index: int, lines: list[int], radius: float) -> bool:
    """Whether the unit interval [index, index + 1] is within radius of a line."""
    k = bisect.bisect_left(lines, index - radius)
    return k < len(lines) and lines[k] <= index + 1 + radius


def _shift_counts(
    counts: Mapping[int, int],
    root: int,
    extent_cells: float,
    radius: float,
) -> list[int]:
    result: list[int] = []
    for shift in range(1, root + 1):
        lines = shift_lines(shift, root, extent_cells)
        result.append(sum(c for index, c in counts.items() if near_line(index, lines, radius)))
    return result


@dataclass
class CellPoints:
    """Indices of the A and B points inside one cell."""

    a: list[int] = field(default_factory=list)
    b: list[int] = field(default_factory=list)

    @property
    def size(self) -> int:
        return len(self.a) + len(self.b)


@dataclass
class GridIndex:
    """
    Points bucketed into square cells of side eps*delta/(6*sqrt(2)).

    Cell (i, j) covers [i, i+1) x [j, j+1) in cell units from the lower-left
    corner of the bounding square. Two cells are neighbors when their minimum
    distance is at most delta. The coarse grid consists of every sqrt(r)-th
    line starting at the chosen offsets; its boxes are the pieces.
    """

    points: PointSet
    delta: float
    epsilon: float
    r: int
    side: float
    origin: tuple[float, float]
    extent_cells: float
    cell_a: list[Cell]
    cell_b: list[Cell]
    cells: dict[Cell, CellPoints]
    neighbors: dict[Cell, list[Cell]]
    shift: ShiftChoice | None = None
    lines_x: list[int] = field(default_factory=list)
    lines_y: list[int] = field(default_factory=list)
    _neighbor_sets: dict[Cell, frozenset[Cell]] = field(default_factory=dict, repr=False)

    @property
    def root(self) -> int:
        return math.isqrt(self.r)

    @property
    def radius(self) -> float:
        return neighbor_radius(self.epsilon)

    @property
    def max_neighbors(self) -> int:
        return max((len(n) for n in self.neighbors.values()), default=0)

    def apply_shift(self, shift: ShiftChoice) -> None:
        self.shift = shift
        self.lines_x = shift_lines(shift.kappa_x, self.root, self.extent_cells)
        self.lines_y = shift_lines(shift.kappa_y, self.root, self.extent_cells)

    def box_of(self, cell: Cell) -> Cell:
        """Coarse box containing a cell."""
        if self.shift is None:
            raise InputError("Grid has no shift chosen", reason="box lookup before choose_shift")
        root = self.root
        return (cell[0] - self.shift.kappa_x) // root, (cell[1] - self.shift.kappa_y) // root

    def are_neighbors(self, cell: Cell, other: Cell) -> bool:
        members = self._neighbor_sets.get(cell)
        if members is None:
            members = self._neighbor_sets[cell] = frozenset(self.neighbors.get(cell, ()))
        return other in members

    def is_boundary(self, cell: Cell) -> bool:
        """Whether the cell lies within delta of a chosen coarse line."""
        radius = self.radius
        return near_line(cell[0], self.lines_x, radius) or near_line(cell[1], self.lines_y, radius)

    def boundary_cells(self) -> list[Cell]:
        return [cell for cell in sorted(self.cells) if self.is_boundary(cell)]

    def boundary_points(self) -> int:
        return sum(self.cells[cell].size for cell in self.boundary_cells())

    def boxes(self) -> dict[Cell, list[Cell]]:
        """Active cells grouped by coarse box."""
        grouped: dict[Cell, list[Cell]] = {}
        for cell in sorted(self.cells):
            grouped.setdefault(self.box_of(cell), []).append(cell)
        return grouped


def choose_shift(grid: GridIndex) -> ShiftChoice:
    """
    Pick, per axis, the line offset in [1, sqrt(r)] with the fewest boundary points.

    A point counts against an offset when its cell column (or row) is within
    delta of one of that offset's lines. Ties go to the smallest offset, so
    the chosen count never exceeds the mean over all offsets.
    """
    columns: Counter[int] = Counter()
    rows: Counter[int] = Counter()
    for (x, y), members in grid.cells.items():
        columns[x] += members.size
        rows[y] += members.size

    root, radius = grid.root, grid.radius
    counts_x = _shift_counts(columns, root, grid.extent_cells, radius)
    counts_y = _shift_counts(rows, root, grid.extent_cells, radius)
    return ShiftChoice(
        root=root,
        kappa_x=counts_x.index(min(counts_x)) + 1,
        kappa_y=counts_y.index(min(counts_y)) + 1,
        counts_x=counts_x,
        counts_y=counts_y,
    )


def implicit_weight(grid: GridIndex, cell: Cell, other: Cell) -> int:
    """Weight of every edge between two neighboring cells: 1 across a coarse line, else 0."""
    return 0 if grid.box_of(cell) == grid.box_of(other) else 1


def _cells_of(
    coords: npt.NDArray[np.float64],
    low: npt.NDArray[np.float64],
    side: float,
) -> list[Cell]:
    return [(x, y) for x, y in np.floor((coords - low) / side).astype(np.int64).tolist()]


def build_grid(points: PointSet, delta: float, epsilon: float, r: int) -> GridIndex:
    """
    Bucket points into cells, enumerate neighborhoods and choose the coarse shift.

    Raises:
        InputError: if delta is not positive, epsilon is outside (0, 1] or r
            is not a positive perfect square
    """
    if delta <= 0:
        raise InputError("Grid needs a positive distance guess", reason=f"delta={delta}")
    if not 0 < epsilon <= 1:
        raise InputError("epsilon must lie in (0, 1]", reason=f"epsilon={epsilon}")
    if r < 1 or math.isqrt(r) ** 2 != r:
        raise InputError("r must be a positive perfect square", reason=f"r={r}")

    side = cell_side(delta, epsilon)
    everything = points.all_points()
    if len(everything):
        low = everything.min(axis=0)
        extent = float((everything.max(axis=0) - low).max())
    else:
        low, extent = np.zeros(2), 0.0

    cell_a = _cells_of(points.a, low, side)
    cell_b = _cells_of(points.b, low, side)
    cells: dict[Cell, CellPoints] = {}
    for i, cell in enumerate(cell_a):
        cells.setdefault(cell, CellPoints()).a.append(i)
    for j, cell in enumerate(cell_b):
        cells.setdefault(cell, CellPoints()).b.append(j)

    grid = GridIndex(
        points=points,
        delta=delta,
        epsilon=epsilon,
        r=r,
        side=side,
        origin=(float(low[0]), float(low[1])),
        extent_cells=extent / side,
        cell_a=cell_a,
        cell_b=cell_b,
        cells=cells,
        neighbors=cell_neighbors(cells, epsilon),
    )
    grid.apply_shift(choose_shift(grid))
    return grid
