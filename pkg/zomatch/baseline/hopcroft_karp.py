"""Hopcroft-Karp maximum-cardinality bipartite matching."""

from collections import deque
from collections.abc import Callable, Iterable

from zomatch.core.graph import BipartiteGraph, Matching

UNMATCHED = -1


def maximum_matching(
    n_left: int,
    n_right: int,
    neighbors: Callable[[int], Iterable[int]],
) -> tuple[list[int], list[int]]:
    """
    Maximum matching over an implicit bipartite graph.

    Each phase layers the graph by a BFS from all free left vertices, then
    extracts a maximal set of vertex-disjoint shortest augmenting paths with an
    iterative DFS. A vertex that leads nowhere gets an infinite layer so later
    searches in the same phase skip it.

    Args:
        n_left: Number of left vertices
        n_right: Number of right vertices
        neighbors: Right neighbors of a left vertex, evaluated once per vertex

    Returns:
        (mate_left, mate_right), UNMATCHED for free vertices
    """
    adjacency = [list(neighbors(u)) for u in range(n_left)]
    mate_left = [UNMATCHED] * n_left
    mate_right = [UNMATCHED] * n_right
    inf_dist = n_left + 1
    dist = [inf_dist] * n_left

    while _layer(adjacency, mate_left, mate_right, dist, inf_dist):
        cursor = [0] * n_left
        for root in range(n_left):
            if mate_left[root] == UNMATCHED:
                _augment_from(root, adjacency, mate_left, mate_right, dist, cursor, inf_dist)

    return mate_left, mate_right


def _layer(
    adjacency: list[list[int]],
    mate_left: list[int],
    mate_right: list[int],
    dist: list[int],
    inf_dist: int,
) -> bool:
    """BFS layering from free left vertices; True if a free right vertex is reachable."""
    queue: deque[int] = deque()
    for u, mate in enumerate(mate_left):
        if mate == UNMATCHED:
            dist[u] = 0
            queue.append(u)
        else:
            dist[u] = inf_dist

    limit = inf_dist
    while queue:
        u = queue.popleft()
        if dist[u] >= limit:
            continue
        for v in adjacency[u]:
            w = mate_right[v]
            if w == UNMATCHED:
                limit = min(limit, dist[u] + 1)
            elif dist[w] == inf_dist:
                dist[w] = dist[u] + 1
                queue.append(w)

    # only shortest augmenting paths: hide layers at or past the first free right vertex
    for u, d in enumerate(dist):
        if d >= limit:
            dist[u] = inf_dist
    return limit != inf_dist


def _augment_from(
    root: int,
    adjacency: list[list[int]],
    mate_left: list[int],
    mate_right: list[int],
    dist: list[int],
    cursor: list[int],
    inf_dist: int,
) -> bool:
    path = [root]
    via: list[int] = []

    while path:
        u = path[-1]
        advanced = False
        edges = adjacency[u]
        while cursor[u] < len(edges):
            v = edges[cursor[u]]
            cursor[u] += 1
            w = mate_right[v]
            if w == UNMATCHED:
                # flip the alternating path root -> ... -> u -> v
                via.append(v)
                for left, right in zip(path, via, strict=True):
                    mate_left[left] = right
                    mate_right[right] = left
                return True
            if dist[w] == dist[u] + 1:
                path.append(w)
                via.append(v)
                advanced = True
                break
        if not advanced:
            dist[u] = inf_dist
            path.pop()
            if via:
                via.pop()
    return False


def hopcroft_karp(
    graph: BipartiteGraph,
    edge_filter: Callable[[int], bool] | None = None,
) -> Matching:
    """
    Maximum-cardinality matching over the edges accepted by edge_filter.

    Args:
        graph: The bipartite graph
        edge_filter: Predicate on edge ids; all edges when omitted

    Returns:
        Matched (A-index, B-index) pairs ordered by A-index
    """
    accept = edge_filter or (lambda e: True)

    def neighbors(a: int) -> list[int]:
        return [graph.edge_b[e] for e in graph.adj_a[a] if accept(e)]

    mate_left, _ = maximum_matching(graph.n_a, graph.n_b, neighbors)
    return [(a, b) for a, b in enumerate(mate_left) if b != UNMATCHED]
