"""
zomatch - Zero-one weighted bipartite matching

Primal-dual maximum-cardinality matching over 0/1 edge weights, with a grid-based
instantiation for approximate bottleneck matching of planar point sets.
"""

__version__ = "0.1.0"

from zomatch.core.enums import Side, StageEvent
from zomatch.core.graph import BipartiteGraph, build_graph, compute_pieces
from zomatch.geo.matcher import bottleneck_match, geo_match
from zomatch.geo.points import PointSet
from zomatch.matcher.engine import run_matcher

__all__ = [
    "__version__",
    "Side",
    "StageEvent",
    "BipartiteGraph",
    "build_graph",
    "compute_pieces",
    "bottleneck_match",
    "geo_match",
    "PointSet",
    "run_matcher",
]
