"""Geometric ladder of distance guesses and the default box parameter."""

import math

import numpy as np

from zomatch.baseline.oracles import squared_distances
from zomatch.geo.points import PointSet


def default_r(n: int) -> int:
    """r = n^(2/3), rounded up and then to the nearest perfect square."""
    target = math.ceil(n ** (2 / 3)) if n > 0 else 1
    root = max(1, round(math.sqrt(target)))
    return root * root


def distance_bounds(points: PointSet) -> tuple[float, float]:
    """
    Bracket [L, U] around the optimal bottleneck distance.

    L is the larger of the two directed nearest-neighbor maxima between A and
    B; U is the diameter of A together with B.
    """
    d2 = squared_distances(points.a, points.b)
    lower = max(float(d2.min(axis=1).max()), float(d2.min(axis=0).max()))
    everything = points.all_points()
    upper = float(squared_distances(everything, everything).max())
    return math.sqrt(lower), math.sqrt(upper)


def delta_candidates(points: PointSet, epsilon: float) -> list[float]:
    """
    Ascending guesses for the bottleneck distance at ratio 1 + epsilon/3.

    Rungs run L, L(1+epsilon/3), ... up to and including the first rung >= U.
    When A and B coincide as multisets the only guess is 0. When L is 0 but
    they do not coincide, 0 is tried first and the ratio ladder starts from
    the smallest positive A-B distance.
    """
    if points.n_a == 0 or points.n_b == 0:
        return []
    if _same_multiset(points):
        return [0.0]

    lower, upper = distance_bounds(points)
    ladder: list[float] = []
    if lower == 0.0:
        ladder.append(0.0)
        d2 = squared_distances(points.a, points.b)
        if not (d2 > 0).any():
            return ladder
        lower = math.sqrt(float(d2[d2 > 0].min()))

    ratio = 1 + epsilon / 3
    step = 0
    while True:
        delta = lower * ratio**step
        ladder.append(delta)
        if delta >= upper:
            return ladder
        step += 1


def _same_multiset(points: PointSet) -> bool:
    if not points.is_balanced:
        return False
    a = points.a[np.lexsort(points.a.T[::-1])]
    b = points.b[np.lexsort(points.b.T[::-1])]
    return bool(np.array_equal(a, b))
