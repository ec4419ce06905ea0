"""Brute-force oracles: exact matching with a König certificate, exact bottleneck."""

import logging
from collections import deque

import numpy as np
import numpy.typing as npt

from zomatch.baseline.hopcroft_karp import UNMATCHED, maximum_matching
from zomatch.baseline.models import BottleneckOracleResult, OracleResult
from zomatch.core.exceptions import SizeMismatchError
from zomatch.core.graph import BipartiteGraph

logger = logging.getLogger(__name__)


def brute_force_max_matching(graph: BipartiteGraph, size_limit: int = 200) -> OracleResult:
    """
    Exact maximum matching by one augmenting-path search per A-vertex.

    The certificate is the König cover read off the alternating reachability
    set Z from free A-vertices: (A minus Z) together with (B within Z).
    """
    if graph.vertex_count > size_limit:
        logger.warning(
            "Brute-force oracle on %d vertices exceeds the intended limit of %d",
            graph.vertex_count,
            size_limit,
        )

    adjacency = [[graph.edge_b[e] for e in graph.adj_a[a]] for a in range(graph.n_a)]
    mate_a = [UNMATCHED] * graph.n_a
    mate_b = [UNMATCHED] * graph.n_b

    for root in range(graph.n_a):
        _augment(root, adjacency, mate_a, mate_b)

    reach_a = [False] * graph.n_a
    reach_b = [False] * graph.n_b
    queue = deque(a for a in range(graph.n_a) if mate_a[a] == UNMATCHED)
    for a in queue:
        reach_a[a] = True
    while queue:
        a = queue.popleft()
        for b in adjacency[a]:
            if reach_b[b] or mate_a[a] == b:
                continue
            reach_b[b] = True
            partner = mate_b[b]
            if partner != UNMATCHED and not reach_a[partner]:
                reach_a[partner] = True
                queue.append(partner)

    cover = [a for a in range(graph.n_a) if not reach_a[a]]
    cover += [graph.n_a + b for b in range(graph.n_b) if reach_b[b]]

    return OracleResult(
        matching=[(a, b) for a, b in enumerate(mate_a) if b != UNMATCHED],
        certificate=cover,
        n_a=graph.n_a,
        edges=[(graph.edge_a[e], graph.edge_b[e]) for e in range(graph.m)],
    )


def _augment(
    root: int,
    adjacency: list[list[int]],
    mate_a: list[int],
    mate_b: list[int],
) -> bool:
    """Search one augmenting path from a free A-vertex and flip it."""
    parent: dict[int, int] = {}
    stack = [root]
    while stack:
        a = stack.pop()
        for b in adjacency[a]:
            if b in parent:
                continue
            parent[b] = a
            if mate_b[b] == UNMATCHED:
                while True:
                    prev = parent[b]
                    next_b = mate_a[prev]
                    mate_a[prev] = b
                    mate_b[b] = prev
                    if prev == root:
                        return True
                    b = next_b
            stack.append(mate_b[b])
    return False


def oracle_bottleneck(
    points_a: npt.ArrayLike,
    points_b: npt.ArrayLike,
) -> BottleneckOracleResult:
    """
    Exact bottleneck distance between two equal-size planar point sets.

    Binary search over the sorted distinct squared pairwise distances; the
    feasibility test is a Hopcroft-Karp run restricted to pairs within the
    candidate. One square root is taken at the end.

    Raises:
        SizeMismatchError: if the sets differ in size
    """
    a = np.asarray(points_a, dtype=float).reshape(-1, 2)
    b = np.asarray(points_b, dtype=float).reshape(-1, 2)
    if len(a) != len(b):
        raise SizeMismatchError(len(a), len(b))

    n = len(a)
    if n == 0:
        return BottleneckOracleResult(distance=0.0, squared_distance=0.0, matching=[])

    d2 = squared_distances(a, b)
    candidates = np.unique(d2)

    lo, hi = 0, len(candidates) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if len(match_within(d2, float(candidates[mid]))) == n:
            hi = mid
        else:
            lo = mid + 1

    threshold = float(candidates[lo])
    return BottleneckOracleResult(
        distance=float(np.sqrt(threshold)),
        squared_distance=threshold,
        matching=match_within(d2, threshold),
    )


def squared_distances(
    a: npt.NDArray[np.float64],
    b: npt.NDArray[np.float64],
) -> npt.NDArray[np.float64]:
    """n_a x n_b matrix of squared Euclidean distances."""
    diff = a[:, None, :] - b[None, :, :]
    return np.einsum("ijk,ijk->ij", diff, diff)


def match_within(
    d2: npt.NDArray[np.float64],
    threshold: float,
    strict: bool = False,
) -> list[tuple[int, int]]:
    """Maximum matching over pairs whose squared distance is <= threshold (< when strict)."""
    allowed = d2 < threshold if strict else d2 <= threshold
    mate_left, _ = maximum_matching(
        d2.shape[0],
        d2.shape[1],
        lambda i: np.flatnonzero(allowed[i]).tolist(),
    )
    return [(i, j) for i, j in enumerate(mate_left) if j != UNMATCHED]
