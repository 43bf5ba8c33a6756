from .graph import (
    Graph,
    bipartition,
    check_bipartition,
    degree_sequence,
    is_connected,
    is_cut_vertex,
    iter_bits,
    popcount,
)
from .graph6 import encode_graph6, parse_graph6, read_graph6_lines, upper_triangle_code, write_graph6
from .schema import Bipartition

__all__ = [
    "Bipartition",
    "Graph",
    "bipartition",
    "check_bipartition",
    "degree_sequence",
    "encode_graph6",
    "is_connected",
    "is_cut_vertex",
    "iter_bits",
    "parse_graph6",
    "popcount",
    "read_graph6_lines",
    "upper_triangle_code",
    "write_graph6",
]
