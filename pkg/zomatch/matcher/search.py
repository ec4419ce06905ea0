"""Depth-first augmenting-path search over an admissible graph with phase-scoped deletion."""

from collections.abc import Hashable, Iterator, Sequence
from dataclasses import dataclass, field
from typing import Generic, Protocol, TypeVar

V = TypeVar("V", bound=Hashable)
E = TypeVar("E", bound=Hashable)


class AdmissibleNetwork(Protocol[V, E]):
    """What the search needs from a residual network."""

    def admissible(self, v: V) -> Iterator[tuple[E, V]]:
        """Zero-slack out-edges of v as (edge, head)."""
        ...

    def is_free_target(self, v: V) -> bool: ...

    def edge_piece(self, e: E) -> Hashable | None:
        """Piece of a weight-0 edge; None for weight-1 edges."""
        ...

    def edge_weight(self, e: E) -> int: ...

    def is_deleted(self, e: E) -> bool: ...

    def delete(self, e: E) -> None: ...

    def augment(self, vertices: Sequence[V], edges: Sequence[E]) -> None: ...


@dataclass
class SearchOutcome(Generic[V, E]):
    """Result of one rooted search."""

    vertices: list[V] = field(default_factory=list)
    edges: list[E] = field(default_factory=list)
    visited: int = 0
    deleted: int = 0
    affected_pieces: int = 0
    path_weight: int = 0

    @property
    def augmented(self) -> bool:
        return bool(self.edges)


class AugmentingPathSearch(Generic[V, E]):
    """
    Multi-root DFS that keeps a simple path P from the root.

    An edge is marked visited when it is traversed (or, with
    mark_on_backtrack, only when the search backtracks over it). An edge whose
    head already lies on P is skipped and marked visited. When the root runs out
    of edges every visited edge is deleted for the rest of the phase. When P
    reaches a free target the network augments along P, and every visited edge
    outside the pieces touched by P's weight-0 edges is deleted.
    """

    def __init__(self, network: AdmissibleNetwork[V, E], mark_on_backtrack: bool = False) -> None:
        self._network = network
        self._mark_on_backtrack = mark_on_backtrack

    def run_from(self, root: V) -> SearchOutcome[V, E]:
        network = self._network
        path: list[V] = [root]
        path_edges: list[E] = []
        on_path: set[V] = {root}
        cursors: list[Iterator[tuple[E, V]]] = [network.admissible(root)]
        visited: dict[E, None] = {}

        while True:
            advanced = False
            for e, head in cursors[-1]:
                if e in visited or network.is_deleted(e):
                    continue
                if head in on_path:
                    visited[e] = None
                    continue
                if not self._mark_on_backtrack:
                    visited[e] = None
                path.append(head)
                path_edges.append(e)
                on_path.add(head)
                if network.is_free_target(head):
                    return self._finish(path, path_edges, visited)
                cursors.append(network.admissible(head))
                advanced = True
                break

            if advanced:
                continue
            if len(path) == 1:
                for e in visited:
                    network.delete(e)
                return SearchOutcome(visited=len(visited), deleted=len(visited))

            on_path.discard(path.pop())
            cursors.pop()
            e = path_edges.pop()
            if self._mark_on_backtrack:
                visited[e] = None

    def _finish(
        self,
        path: list[V],
        path_edges: list[E],
        visited: dict[E, None],
    ) -> SearchOutcome[V, E]:
        network = self._network
        affected = {network.edge_piece(e) for e in path_edges} - {None}
        weight = sum(network.edge_weight(e) for e in path_edges)

        network.augment(path, path_edges)

        deleted = 0
        for e in visited:
            if network.edge_piece(e) not in affected:
                network.delete(e)
                deleted += 1

        return SearchOutcome(
            vertices=path,
            edges=path_edges,
            visited=len(visited),
            deleted=deleted,
            affected_pieces=len(affected),
            path_weight=weight,
        )
