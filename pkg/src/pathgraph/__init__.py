from .gadgets import find_diamonds, find_thorns
from .paths import build_path_graph, enumerate_paths, isolated_paths, normalize_path, path_graph_adjacent
from .schema import Diamond, PathGraphResult, PathK, SwapKind, SwapPermutation, Thorn
from .swaps import apply_swap, build_swap

__all__ = [
    "Diamond",
    "PathGraphResult",
    "PathK",
    "SwapKind",
    "SwapPermutation",
    "Thorn",
    "apply_swap",
    "build_path_graph",
    "build_swap",
    "enumerate_paths",
    "find_diamonds",
    "find_thorns",
    "isolated_paths",
    "normalize_path",
    "path_graph_adjacent",
]
