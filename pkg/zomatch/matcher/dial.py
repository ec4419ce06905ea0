"""Bucket priority queue for small non-negative integer keys (Dial's scheme)."""

from collections.abc import Hashable, Iterator
from typing import Generic, TypeVar

V = TypeVar("V", bound=Hashable)


class BucketQueue(Generic[V]):
    """
    A priority queue for vertex+distance storage, backed by one bucket per key.

    Assigning `q[vertex] = cost` inserts a vertex or lowers its cost; raising a
    cost is ignored. Iteration pops the lowest cost first and yields
    (vertex, cost). Keys are non-negative integers; buckets are added as larger
    keys arrive, so no bound is needed up front. Vertices inserted while
    iterating are picked up as long as their cost is not below the cursor.
    """

    def __init__(self) -> None:
        self._buckets: list[dict[V, None]] = []
        self._cost: dict[V, int] = {}
        self._cursor = 0

    def __len__(self) -> int:
        return len(self._cost)

    def __contains__(self, vertex: object) -> bool:
        return vertex in self._cost

    def __setitem__(self, vertex: V, cost: int) -> None:
        if cost < 0:
            raise ValueError(f"Bucket keys must be non-negative, got {cost}")
        current = self._cost.get(vertex)
        if current is not None:
            if cost >= current:
                return
            del self._buckets[current][vertex]
        while len(self._buckets) <= cost:
            self._buckets.append({})
        self._buckets[cost][vertex] = None
        self._cost[vertex] = cost
        self._cursor = min(self._cursor, cost)

    def __iter__(self) -> Iterator[tuple[V, int]]:
        while self._cost:
            while not self._buckets[self._cursor]:
                self._cursor += 1
            bucket = self._buckets[self._cursor]
            # insertion order within a bucket keeps runs deterministic
            vertex = next(iter(bucket))
            del bucket[vertex]
            del self._cost[vertex]
            yield vertex, self._cursor
