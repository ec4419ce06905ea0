"""Cell-and-cluster quotient of the point-level residual network."""

from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field

from zomatch.core.enums import Side
from zomatch.core.exceptions import InvariantViolation
from zomatch.core.state import FREE
from zomatch.geo.grid import Cell, GridIndex, implicit_weight
from zomatch.geo.state import GeoState
from zomatch.matcher.dial import BucketQueue

# A cluster: the points of one side in one cell sharing one dual value.
Key = tuple[Cell, Side, int]
EdgeKey = tuple[Key, Key]


@dataclass(frozen=True)
class CompactEdge:
    weight: int
    slack: int
    matching: bool


@dataclass
class CompactResidual:
    """
    Clusters as vertices, with residual edges between clusters of neighboring cells.

    A matching edge runs from an A-cluster to a B-cluster when some matched
    pair links them. A non-matching edge runs from a B-cluster to an A-cluster
    when their cross product holds a pair outside the matching. All pairs a
    compact edge represents share its weight and slack.
    """

    grid: GridIndex
    state: GeoState
    members: dict[Key, list[int]] = field(default_factory=dict)
    cell_keys: dict[tuple[Cell, Side], list[Key]] = field(default_factory=dict)
    edges: dict[Key, dict[Key, CompactEdge]] = field(default_factory=dict)

    @property
    def vertex_count(self) -> int:
        return len(self.members)

    @property
    def edge_count(self) -> int:
        return sum(len(out) for out in self.edges.values())

    def key_of_a(self, a: int) -> Key:
        return self.grid.cell_a[a], Side.A, self.state.dual_a[a]

    def key_of_b(self, b: int) -> Key:
        return self.grid.cell_b[b], Side.B, self.state.dual_b[b]

    def keys(self, side: Side) -> list[Key]:
        return sorted(k for k in self.members if k[1] is side)

    def free_members(self, key: Key) -> list[int]:
        mates = self.state.mate_a if key[1] is Side.A else self.state.mate_b
        return [p for p in self.members[key] if mates[p] == FREE]

    def free_count(self, key: Key) -> int:
        if key not in self.members:
            return 0
        return len(self.free_members(key))

    def sources(self) -> list[Key]:
        """B-clusters holding at least one free point."""
        return [k for k in self.keys(Side.B) if self.free_count(k)]

    def piece_of(self, key: Key) -> Cell:
        return self.grid.box_of(key[0])

    def out_edges(self, key: Key) -> Iterator[tuple[Key, CompactEdge]]:
        yield from self.edges.get(key, {}).items()

    def refresh(self, cells: Iterable[Cell]) -> None:
        """Recluster the given cells and rebuild every edge touching them."""
        changed = sorted(set(cells))
        changed_set = set(changed)
        neighbors = self.grid.neighbors

        for cell in changed:
            old = [k for side in Side for k in self.cell_keys.pop((cell, side), [])]
            for k in old:
                del self.members[k]
                self.edges.pop(k, None)
            for other in neighbors[cell]:
                for side in Side:
                    for k in self.cell_keys.get((other, side), []):
                        out = self.edges.get(k)
                        if out:
                            for gone in old:
                                out.pop(gone, None)

        for cell in changed:
            self._cluster(cell)
        for cell in changed:
            for other in neighbors[cell]:
                self._connect(cell, other)
                if other not in changed_set:
                    self._connect(other, cell)

    def _cluster(self, cell: Cell) -> None:
        """
        Group a cell's points by dual value, largest dual first.

        Raises:
            InvariantViolation: if the duals of one side spread by more than 2
        """
        points = self.grid.cells[cell]
        state = self.state
        for side, indices, duals in (
            (Side.A, points.a, state.dual_a),
            (Side.B, points.b, state.dual_b),
        ):
            if not indices:
                continue
            groups: dict[int, list[int]] = {}
            for p in indices:
                groups.setdefault(duals[p], []).append(p)
            if max(groups) - min(groups) > 2:
                raise InvariantViolation(
                    "Dual spread inside a cell exceeds 2",
                    invariant="dual spread",
                    context={"cell": cell, "side": str(side), "duals": sorted(groups)},
                )
            keys: list[Key] = []
            for dual in sorted(groups, reverse=True):
                key = (cell, side, dual)
                self.members[key] = groups[dual]
                keys.append(key)
            self.cell_keys[(cell, side)] = keys

    def _connect(self, cell: Cell, other: Cell) -> None:
        """Add every compact edge from the clusters of one cell to those of a neighbor."""
        state = self.state
        weight = implicit_weight(self.grid, cell, other)

        for kb in self.cell_keys.get((cell, Side.B), []):
            members_b = self.members[kb]
            mate_keys = [
                self.key_of_a(state.mate_b[b]) for b in members_b if state.mate_b[b] != FREE
            ]
            for ka in self.cell_keys.get((other, Side.A), []):
                matched = mate_keys.count(ka)
                if len(members_b) * len(self.members[ka]) <= matched:
                    continue
                slack = weight + ka[2] - kb[2]
                if slack < 0:
                    raise InvariantViolation(
                        "Negative slack on a compact edge",
                        invariant="feasibility",
                        context={"from": kb, "to": ka, "slack": slack},
                    )
                self.edges.setdefault(kb, {})[ka] = CompactEdge(weight, slack, matching=False)

        for ka in self.cell_keys.get((cell, Side.A), []):
            for a in self.members[ka]:
                b = state.mate_a[a]
                if b == FREE or self.grid.cell_b[b] != other:
                    continue
                kb = self.key_of_b(b)
                if weight - ka[2] + kb[2] != 0:
                    raise InvariantViolation(
                        "Matching edge is not tight",
                        invariant="feasibility",
                        context={"a": a, "b": b, "dual_a": ka[2], "dual_b": kb[2]},
                    )
                self.edges.setdefault(ka, {})[kb] = CompactEdge(weight, 0, matching=True)

    def spread(self) -> int:
        """Largest dual spread of any cell side."""
        widest = 0
        for keys in self.cell_keys.values():
            widest = max(widest, keys[0][2] - keys[-1][2])
        return widest


def build_compact(grid: GridIndex, state: GeoState) -> CompactResidual:
    """
    Build the compact residual network of a feasible state.

    Raises:
        InvariantViolation: on a dual spread above 2 in a cell, a negative
            slack or a matching edge that is not tight
    """
    compact = CompactResidual(grid=grid, state=state)
    for cell in sorted(grid.cells):
        compact._cluster(cell)
    for cell in sorted(grid.cells):
        for other in grid.neighbors[cell]:
            compact._connect(cell, other)
    return compact


def compact_distances(compact: CompactResidual) -> dict[Key, int]:
    """Slack distances from the free B-clusters; unreachable clusters are absent."""
    dist: dict[Key, int] = {}
    queue: BucketQueue[Key] = BucketQueue()
    for key in compact.sources():
        dist[key] = 0
        queue[key] = 0

    for key, d in queue:
        for head, edge in compact.out_edges(key):
            candidate = d + edge.slack
            if candidate < dist.get(head, candidate + 1):
                dist[head] = candidate
                queue[head] = candidate
    return dist
