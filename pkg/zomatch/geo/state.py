"""Point-level matching and dual state of a geometric run."""

from dataclasses import dataclass

from zomatch.core.graph import Matching
from zomatch.core.state import FREE


@dataclass
class GeoState:
    """
    Matching and integer duals over the A and B points.

    mate_a[i] is the B-index matched to A-point i or FREE, and symmetrically
    for mate_b.
    """

    mate_a: list[int]
    mate_b: list[int]
    dual_a: list[int]
    dual_b: list[int]
    phase: int = 0
    size: int = 0

    @classmethod
    def empty(cls, n_a: int, n_b: int) -> "GeoState":
        return cls(
            mate_a=[FREE] * n_a,
            mate_b=[FREE] * n_b,
            dual_a=[0] * n_a,
            dual_b=[0] * n_b,
        )

    def free_a(self) -> list[int]:
        return [i for i, mate in enumerate(self.mate_a) if mate == FREE]

    def free_b(self) -> list[int]:
        return [j for j, mate in enumerate(self.mate_b) if mate == FREE]

    def y_max(self) -> int:
        return max(self.dual_b, default=0)

    def is_perfect(self) -> bool:
        return self.size == min(len(self.mate_a), len(self.mate_b))

    def match(self, a: int, b: int) -> None:
        self.mate_a[a], self.mate_b[b] = b, a
        self.size += 1

    def unmatch(self, a: int, b: int) -> None:
        self.mate_a[a] = self.mate_b[b] = FREE
        self.size -= 1

    def matching(self) -> Matching:
        return [(a, b) for a, b in enumerate(self.mate_a) if b != FREE]
