"""Approximate planar bottleneck matching through grid-induced 0/1 weights."""

from zomatch.geo.compact import CompactEdge, CompactResidual, build_compact, compact_distances
from zomatch.geo.grid import (
    CellPoints,
    GridIndex,
    build_grid,
    choose_shift,
    implicit_weight,
    neighbor_offsets,
    pairwise_neighbors,
    window_neighbors,
)
from zomatch.geo.ladder import default_r, delta_candidates, distance_bounds
from zomatch.geo.matcher import (
    GeoMatcher,
    augment_points,
    bottleneck_match,
    geo_match,
    geo_preprocess,
    project_path,
)
from zomatch.geo.models import BottleneckResult, GeoRunStats, ShiftChoice
from zomatch.geo.points import PointSet, coincident_matching
from zomatch.geo.state import GeoState

__all__ = [
    "CompactEdge",
    "CompactResidual",
    "build_compact",
    "compact_distances",
    "CellPoints",
    "GridIndex",
    "build_grid",
    "choose_shift",
    "implicit_weight",
    "neighbor_offsets",
    "pairwise_neighbors",
    "window_neighbors",
    "default_r",
    "delta_candidates",
    "distance_bounds",
    "GeoMatcher",
    "augment_points",
    "bottleneck_match",
    "geo_match",
    "geo_preprocess",
    "project_path",
    "BottleneckResult",
    "GeoRunStats",
    "ShiftChoice",
    "PointSet",
    "coincident_matching",
    "GeoState",
]
