"""Balanced-separator weighting for graph families with small separators."""

from zomatch.separator.lattice import grid_graph_separator, lattice_graph
from zomatch.separator.models import SeparatorStep, WeightAssignment
from zomatch.separator.recursive import (
    SeparatorFn,
    assign_weights_recursive,
    default_piece_size,
    inner_edge_count,
    measure_weight,
    validate_step,
)

__all__ = [
    "grid_graph_separator",
    "lattice_graph",
    "SeparatorStep",
    "WeightAssignment",
    "SeparatorFn",
    "assign_weights_recursive",
    "default_piece_size",
    "inner_edge_count",
    "measure_weight",
    "validate_step",
]
