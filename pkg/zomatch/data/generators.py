"""Seeded instance generators: random graphs, lattices and planar point sets."""

import numpy as np
import numpy.typing as npt

from zomatch.core.enums import Distribution
from zomatch.core.exceptions import InputError
from zomatch.core.graph import BipartiteGraph, build_graph, compute_pieces
from zomatch.geo.points import PointSet
from zomatch.separator.lattice import lattice_graph

CLUSTER_SPREAD = 0.03


def random_graph(
    n_a: int,
    n_b: int,
    m: int,
    weight_one_probability: float = 0.5,
    seed: int = 0,
) -> BipartiteGraph:
    """
    Random simple bipartite graph with m distinct edges.

    Each edge independently gets weight 1 with the given probability. Edge
    order is the sampling order, so the seed fixes adjacency and DFS order.
    """
    if n_a < 0 or n_b < 0:
        raise InputError("Vertex counts must be non-negative", reason=f"n_a={n_a}, n_b={n_b}")
    if not 0 <= m <= n_a * n_b:
        raise InputError(f"Cannot place {m} distinct edges in {n_a}x{n_b}", reason="edge count")
    if not 0.0 <= weight_one_probability <= 1.0:
        raise InputError("Weight-1 probability must lie in [0, 1]", reason="probability")

    rng = np.random.default_rng(seed)
    pairs = rng.choice(n_a * n_b, size=m, replace=False) if m else np.empty(0, dtype=np.int64)
    weights = (rng.random(m) < weight_one_probability).astype(int)
    edges = [
        (int(p) // n_b, int(p) % n_b, int(w)) for p, w in zip(pairs, weights, strict=True)
    ]
    graph = build_graph(n_a, n_b, edges)
    compute_pieces(graph)
    return graph


def lattice_instance(width: int, height: int) -> BipartiteGraph:
    """Lattice graph with coordinates; every edge starts at weight 0."""
    graph = lattice_graph(width, height)
    compute_pieces(graph)
    return graph


def random_points(
    n: int,
    distribution: Distribution = Distribution.UNIFORM,
    seed: int = 0,
) -> PointSet:
    """
    n A-points and n B-points in the unit square.

    Clustered sets draw both sides around roughly n/16 shared centers with
    Gaussian noise, so many A-B pairs sit close together.
    """
    if n < 0:
        raise InputError("Point count must be non-negative", reason=f"n={n}")

    rng = np.random.default_rng(seed)
    if distribution is Distribution.UNIFORM:
        return PointSet(a=rng.random((n, 2)), b=rng.random((n, 2)))

    centers = rng.random((max(1, n // 16), 2))

    def around() -> npt.NDArray[np.float64]:
        picks = rng.integers(0, len(centers), size=n)
        return np.asarray(centers[picks] + rng.normal(0.0, CLUSTER_SPREAD, size=(n, 2)))

    return PointSet(a=around(), b=around())
