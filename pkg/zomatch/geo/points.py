"""Planar point sets for bottleneck matching."""

from collections import defaultdict
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from zomatch.core.exceptions import InputError, SizeMismatchError
from zomatch.core.graph import Matching

Point = tuple[float, float]


def _as_points(values: npt.ArrayLike, side: str) -> npt.NDArray[np.float64]:
    array = np.asarray(values, dtype=float)
    if array.size == 0:
        return np.zeros((0, 2))
    if array.ndim != 2 or array.shape[1] != 2:
        raise InputError(f"{side} points must be (x, y) pairs", reason=f"shape {array.shape}")
    if not np.isfinite(array).all():
        raise InputError(f"{side} points must have finite coordinates", reason="non-finite")
    return array


@dataclass(frozen=True, eq=False)
class PointSet:
    """Two labelled planar point sets A and B, as (k, 2) float arrays."""

    a: npt.NDArray[np.float64]
    b: npt.NDArray[np.float64]

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", _as_points(self.a, "A"))
        object.__setattr__(self, "b", _as_points(self.b, "B"))

    @classmethod
    def from_points(cls, a: Iterable[Point], b: Iterable[Point]) -> "PointSet":
        return cls(np.asarray(list(a), dtype=float), np.asarray(list(b), dtype=float))

    @property
    def n_a(self) -> int:
        return len(self.a)

    @property
    def n_b(self) -> int:
        return len(self.b)

    @property
    def is_balanced(self) -> bool:
        return self.n_a == self.n_b

    def require_balanced(self) -> int:
        """Common size n of A and B; raises SizeMismatchError otherwise."""
        if not self.is_balanced:
            raise SizeMismatchError(self.n_a, self.n_b)
        return self.n_a

    def all_points(self) -> npt.NDArray[np.float64]:
        return np.vstack([self.a, self.b])

    def edge_length(self, i: int, j: int) -> float:
        return float(np.hypot(*(self.a[i] - self.b[j])))

    def bottleneck(self, matching: Sequence[tuple[int, int]]) -> float:
        """Longest edge of a matching; 0 for the empty matching."""
        if not matching:
            return 0.0
        rows = np.asarray(matching, dtype=int)
        diff = self.a[rows[:, 0]] - self.b[rows[:, 1]]
        return float(np.sqrt(np.einsum("ij,ij->i", diff, diff).max()))

    def is_perfect(self, matching: Sequence[tuple[int, int]]) -> bool:
        if not self.is_balanced or len(matching) != self.n_a:
            return False
        return len({i for i, _ in matching}) == len({j for _, j in matching}) == self.n_a


def coincident_matching(points: PointSet) -> Matching:
    """Greedy matching of A and B points that sit at identical coordinates."""
    waiting: dict[Point, list[int]] = defaultdict(list)
    for j, (x, y) in enumerate(points.b.tolist()):
        waiting[(x, y)].append(j)
    for queue in waiting.values():
        queue.reverse()

    matching: Matching = []
    for i, (x, y) in enumerate(points.a.tolist()):
        queue = waiting.get((x, y))
        if queue:
            matching.append((i, queue.pop()))
    return matching
