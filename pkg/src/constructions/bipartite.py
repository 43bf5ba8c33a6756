"""
Bipartite-type pairs: same widths on F, thorns shifted by -k on A and +k on B.
"""

import logging
from typing import Dict, Optional, Sequence

from src.graph_core.graph import Graph, bipartition, check_bipartition
from src.graph_core.schema import Bipartition
from src.utils.errors import GraphRangeError, InfeasibleThornsError, StructuralError
from .inflation import identity_edge_map, inflate_edge_isomorphism
from .schema import BipartitePairSpec, InflatedPair

logger = logging.getLogger(__name__)


def _side(parts: Bipartition, v: int) -> str:
    return "A" if v in parts.side_a else "B"


def shifted_thorns(spec: BipartitePairSpec, parts: Bipartition) -> Dict[int, int]:
    return {
        v: t - spec.k if v in parts.side_a else t + spec.k
        for v, t in sorted(spec.thorns.items())
    }


def bipartite_pair(spec: BipartitePairSpec) -> InflatedPair:
    """
    Inflate F twice with equal widths; thorns t and t' = t -/+ k.

    With spec.special the only accepted input is k = 1, t = 1 on A and
    t = 0 on B; any other 0/1 choice pushes some t' to -1 or 2.

    Raises:
        StructuralError: F is not bipartite or the given parts are not a bipartition
        InfeasibleThornsError: some t' is out of range, naming the vertex
    """
    parts = spec.parts
    if parts is None:
        parts = bipartition(spec.base)
        if parts is None:
            raise StructuralError("base graph is not bipartite")
    else:
        check_bipartition(spec.base, parts)

    if spec.special:
        if spec.k != 1:
            raise GraphRangeError(f"the special bipartite type needs k = 1, got k = {spec.k}")
        for v, t in sorted(spec.thorns.items()):
            if t not in (0, 1):
                raise InfeasibleThornsError(f"t_{v} = {t} on side {_side(parts, v)} (must be 0 or 1)")
    else:
        for v in sorted(parts.side_a):
            if spec.thorns[v] < spec.k:
                raise InfeasibleThornsError(f"t_{v} = {spec.thorns[v]} on side A is below k = {spec.k}")

    shifted = shifted_thorns(spec, parts)
    if spec.special:
        for v, t in shifted.items():
            if t not in (0, 1):
                raise InfeasibleThornsError(f"t'_{v} = {t} on side {_side(parts, v)} (must be 0 or 1)")

    n = spec.base.n
    label = f"bipartite k={spec.k} A={sorted(parts.side_a)} B={sorted(parts.side_b)}"
    return inflate_edge_isomorphism(
        spec.base,
        spec.base,
        identity_edge_map(spec.base),
        spec.widths,
        [spec.thorns[v] for v in range(n)],
        [shifted[v] for v in range(n)],
        label=label,
    )


def special_bipartite_spec(
    base: Graph,
    widths: Optional[Sequence[int]] = None,
    parts: Optional[Bipartition] = None,
) -> BipartitePairSpec:
    """The special type on F: k = 1, one thorn on every vertex of A, none on B."""
    if parts is None:
        parts = bipartition(base)
        if parts is None:
            raise StructuralError("base graph is not bipartite")
    edges = base.edges()
    widths = list(widths) if widths is not None else [1] * len(edges)
    if len(widths) != len(edges):
        raise GraphRangeError(f"expected {len(edges)} widths, got {len(widths)}")
    thorns = {v: 1 if v in parts.side_a else 0 for v in range(base.n)}
    return BipartitePairSpec(base=base, widths=dict(zip(edges, widths)), k=1, thorns=thorns, parts=parts)
