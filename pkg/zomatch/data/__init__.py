"""Instance files and seeded generators."""

from zomatch.data.formats import (
    emit_graph,
    emit_points,
    parse_graph_file,
    parse_graph_text,
    parse_points_file,
    parse_points_text,
    parse_weights_file,
    write_graph_file,
    write_points_file,
)
from zomatch.data.generators import lattice_instance, random_graph, random_points

__all__ = [
    "emit_graph",
    "emit_points",
    "parse_graph_file",
    "parse_graph_text",
    "parse_points_file",
    "parse_points_text",
    "parse_weights_file",
    "write_graph_file",
    "write_points_file",
    "lattice_instance",
    "random_graph",
    "random_points",
]
