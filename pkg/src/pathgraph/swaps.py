"""
B-, S- and D-swaps: involutions of pi_3(G) that exchange two P_3's and
are automorphisms of P_3(G).
"""

import logging
from typing import Sequence

from src.graph_core.graph import Graph
from src.utils.errors import GraphRangeError, StructuralError
from .gadgets import find_diamonds
from .paths import enumerate_paths, normalize_path
from .schema import PathGraphResult, SwapKind, SwapPermutation

logger = logging.getLogger(__name__)


def _check_ids(g: Graph, params: Sequence[int], names: str) -> None:
    for name, v in zip(names, params):
        if not 0 <= v < g.n:
            raise GraphRangeError(f"vertex {name}={v} is outside 0..{g.n - 1}")
    if len(set(params)) != len(params):
        raise StructuralError(f"vertices {names} must be distinct, got {tuple(params)}")


def _require_edge(g: Graph, u: int, v: int, names: str) -> None:
    if not g.adjacent(u, v):
        raise StructuralError(f"{names[0]}={u} is not adjacent to {names[1]}={v}")


def _require_degree(g: Graph, v: int, name: str, wanted: int, at_least: bool = False) -> None:
    d = g.degree(v)
    if (d < wanted) if at_least else (d != wanted):
        relation = ">=" if at_least else "=="
        raise StructuralError(f"deg({name}={v}) = {d}, need {relation} {wanted}")


def _b_support(g: Graph, params: Sequence[int]):
    if len(params) != 4:
        raise StructuralError(f"B-swap takes (a, b, c, d), got {len(params)} values")
    a, b, c, d = params
    _check_ids(g, params, "abcd")
    _require_edge(g, b, a, "ba")
    _require_edge(g, b, c, "bc")
    _require_edge(g, b, d, "bd")
    _require_degree(g, a, "a", 2, at_least=True)
    _require_degree(g, c, "c", 1)
    _require_degree(g, d, "d", 1)
    return normalize_path((a, b, c)), normalize_path((a, b, d))


def _s_support(g: Graph, params: Sequence[int]):
    if len(params) != 5:
        raise StructuralError(f"S-swap takes a P_5 (a, b, c, d, e), got {len(params)} values")
    a, b, c, d, e = params
    _check_ids(g, params, "abcde")
    _require_edge(g, a, b, "ab")
    _require_edge(g, b, c, "bc")
    _require_edge(g, c, d, "cd")
    _require_edge(g, d, e, "de")
    _require_degree(g, a, "a", 1)
    _require_degree(g, e, "e", 1)
    _require_degree(g, c, "c", 2)
    return normalize_path((a, b, c)), normalize_path((c, d, e))


def _d_support(g: Graph, params: Sequence[int]):
    if len(params) != 4:
        raise StructuralError(f"D-swap takes (a, b, i, j), got {len(params)} values")
    a, b, i, j = params
    _check_ids(g, (a, b), "ab")
    lo, hi = min(a, b), max(a, b)
    diamond = next((dm for dm in find_diamonds(g) if (dm.end_a, dm.end_b) == (lo, hi)), None)
    if diamond is None:
        raise StructuralError(f"no diamond with ends {lo} and {hi}")
    if not 0 <= i < j < diamond.width:
        raise StructuralError(
            f"middle indices must satisfy 0 <= i < j < width={diamond.width}, got i={i}, j={j}"
        )
    ci, cj = diamond.middles[i], diamond.middles[j]
    return normalize_path((ci, a, cj)), normalize_path((ci, b, cj))


_SUPPORT = {
    SwapKind.B: _b_support,
    SwapKind.S: _s_support,
    SwapKind.D: _d_support,
}


def build_swap(g: Graph, kind: SwapKind, params: Sequence[int]) -> SwapPermutation:
    """
    Build a B-, S- or D-swap on pi_3(g).

    Args:
        g: Host graph
        kind: SwapKind.B with (a, b, c, d); SwapKind.S with the P_5 (a, b, c, d, e);
            SwapKind.D with (a, b, i, j), i < j indexing the diamond's sorted middles
        params: Vertex ids (and middle indices for D)

    Returns:
        SwapPermutation over enumerate_paths(g, 3) indices

    Raises:
        StructuralError: naming the degree or adjacency condition that failed
    """
    kind = SwapKind(kind)
    first, second = _SUPPORT[kind](g, list(params))
    labels = enumerate_paths(g, 3)
    index = {path: i for i, path in enumerate(labels)}
    mapping = list(range(len(labels)))
    i, j = index[first], index[second]
    mapping[i], mapping[j] = j, i
    logger.debug("%s-swap %s <-> %s", kind.value, first, second)
    return SwapPermutation(kind=kind, support=(first, second), mapping=mapping)


def apply_swap(result: PathGraphResult, swap: SwapPermutation) -> Graph:
    """P_3(G) with its vertices renamed by the swap; equal to pgraph iff it is an automorphism."""
    if result.k != 3 or len(swap.mapping) != result.pgraph.n:
        raise StructuralError("swap does not act on this P_3-graph")
    return result.pgraph.relabel(swap.mapping)

