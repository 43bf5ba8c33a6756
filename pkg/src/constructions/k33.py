"""
Generalized K_{3,3} cases that are fully determined.

Case i: G is the double star with edges ab, ac, ad, be, bf (a..f = 0..5);
H is the 4-cycle u1 v1 u2 v2 (0..3) plus two disjoint P_3's (4-5-6, 7-8-9).
Case vii: G = H = K_{3,3}. Cases ii-vi leave auxiliary attachments open
and are not built.
"""

from typing import Dict, Tuple

from src.graph_core.graph import Graph
from src.iso.schema import PkIsomorphism
from src.pathgraph.paths import normalize_path
from src.utils.errors import UnsupportedCaseError
from .named import named_graph
from .schema import K33Pair

SUPPORTED_CASES = ("i", "vii")
KNOWN_CASES = ("i", "ii", "iii", "iv", "v", "vi", "vii")

_U1, _V1, _U2, _V2 = 0, 1, 2, 3

# cab, dab, abe, abf on the 4-cycle; cad and ebf on the two P_3 components
_CASE_I_TAU: Tuple[Tuple[Tuple[int, ...], Tuple[int, ...]], ...] = (
    ((2, 0, 1), (_V2, _U1, _V1)),
    ((3, 0, 1), (_V1, _U2, _V2)),
    ((0, 1, 4), (_U1, _V1, _U2)),
    ((0, 1, 5), (_U2, _V2, _U1)),
    ((2, 0, 3), (4, 5, 6)),
    ((4, 1, 5), (7, 8, 9)),
)


def _case_i() -> K33Pair:
    g = Graph.from_edges(6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)])
    h = Graph.from_edges(10, [(_U1, _V1), (_V1, _U2), (_U2, _V2), (_V2, _U1), (4, 5), (5, 6), (7, 8), (8, 9)])
    mapping: Dict[Tuple[int, ...], Tuple[int, ...]] = {
        normalize_path(src): normalize_path(dst) for src, dst in _CASE_I_TAU
    }
    return K33Pair(case="i", g=g, h=h, tau=PkIsomorphism(k=3, mapping=mapping))


def k33_case(case: str) -> K33Pair:
    """
    Build a generalized K_{3,3} case by its roman numeral.

    Raises:
        UnsupportedCaseError: cases ii-vi, or an unknown id
    """
    key = case.strip().lower()
    if key == "i":
        return _case_i()
    if key == "vii":
        k33 = named_graph("complete_bipartite", 3, 3)
        return K33Pair(case="vii", g=k33, h=k33)
    if key in KNOWN_CASES:
        raise UnsupportedCaseError(
            f"generalized K_{{3,3}} case ({key}) is not constructed; supported cases: {', '.join(SUPPORTED_CASES)}"
        )
    raise UnsupportedCaseError(f"unknown generalized K_{{3,3}} case '{case}'")
