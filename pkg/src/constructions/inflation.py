"""
Diamond inflation and the P_3-isomorphism setting it induces.
"""

import logging
from typing import Dict, List, Mapping, Optional, Sequence

from src.graph_core.graph import Graph
from src.pathgraph.gadgets import find_thorns
from src.utils.errors import InflationConditionError, StructuralError
from .schema import Edge, InflatedPair, InflationResult, InflationSpec, VertexOrigin, VertexRole

logger = logging.getLogger(__name__)


def diamond_inflate(spec: InflationSpec) -> InflationResult:
    """
    Replace every base edge ab by an unbraced s_ab-diamond and hang t_v leaves on v.

    Vertex order: base vertices, then middles by (edge index, middle index),
    then leaves by (vertex index, leaf index). The base edge itself is removed.

    Args:
        spec: Validated inflation spec

    Returns:
        InflationResult whose provenance lists every vertex in id order
    """
    base = spec.base
    provenance = [VertexOrigin(vertex=v, role=VertexRole.BASE, origin=(v,)) for v in range(base.n)]
    edges: List[Edge] = []
    nxt = base.n
    for a, b in base.edges():
        for index in range(spec.widths[(a, b)]):
            edges += [(a, nxt), (b, nxt)]
            provenance.append(VertexOrigin(vertex=nxt, role=VertexRole.MIDDLE, origin=(a, b), index=index))
            nxt += 1
    for v in range(base.n):
        for index in range(spec.thorns[v]):
            edges.append((v, nxt))
            provenance.append(VertexOrigin(vertex=nxt, role=VertexRole.LEAF, origin=(v,), index=index))
            nxt += 1
    return InflationResult(graph=Graph.from_edges(nxt, edges), provenance=provenance)


def _with_stars(result: InflationResult, count: int) -> InflationResult:
    """Append count disjoint K_{1,2} components, each adding one 2-thorn."""
    if count == 0:
        return result
    graph = result.graph
    provenance = list(result.provenance)
    for index in range(count):
        start = graph.n
        graph = graph.disjoint_union(Graph.from_edges(3, [(0, 1), (0, 2)]))
        for offset in range(3):
            provenance.append(
                VertexOrigin(vertex=start + offset, role=VertexRole.STAR, origin=(start,), index=index)
            )
    return InflationResult(graph=graph, provenance=provenance)


def _check_edge_bijection(base: Graph, image: Graph, phi: Mapping[Edge, Edge]) -> None:
    if set(phi) != set(base.edges()):
        raise StructuralError("edge map must be defined on exactly the edges of the first base")
    if sorted(phi.values()) != image.edges():
        raise StructuralError("edge map is not a bijection onto the edges of the second base")


def inflate_edge_isomorphism(
    base: Graph,
    image: Graph,
    phi: Mapping[Edge, Edge],
    widths: Mapping[Edge, int],
    thorns: Sequence[int],
    image_thorns: Sequence[int],
    image_widths: Optional[Mapping[Edge, int]] = None,
    label: str = "diamond inflation",
) -> InflatedPair:
    """
    Inflate an edge-isomorphism phi: E(base) -> E(image) into a graph pair.

    Widths on the image default to widths o phi^-1. For every edge ab with
    phi(ab) = uv the pair must satisfy s_uv = s_ab and t_u + t_v = t_a + t_b.
    Star components are added to whichever side has fewer 2-thorns.

    Raises:
        StructuralError: phi is not an edge bijection
        InflationConditionError: a width or thorn-sum condition fails
    """
    _check_edge_bijection(base, image, phi)
    if image_widths is None:
        image_widths = {phi[e]: s for e, s in widths.items()}
    for (a, b), (u, v) in sorted(phi.items()):
        if image_widths[(u, v)] != widths[(a, b)]:
            raise InflationConditionError(
                f"width of {u}-{v} is {image_widths[(u, v)]}, width of {a}-{b} is {widths[(a, b)]}"
            )
        if image_thorns[u] + image_thorns[v] != thorns[a] + thorns[b]:
            raise InflationConditionError(
                f"thorn sums differ on {a}-{b} -> {u}-{v}: "
                f"{thorns[a]}+{thorns[b]} vs {image_thorns[u]}+{image_thorns[v]}"
            )

    first = diamond_inflate(InflationSpec(base=base, widths=dict(widths), thorns=dict(enumerate(thorns))))
    second = diamond_inflate(
        InflationSpec(base=image, widths=dict(image_widths), thorns=dict(enumerate(image_thorns)))
    )
    lacking = len(find_thorns(first.graph)[1]) - len(find_thorns(second.graph)[1])
    if lacking:
        logger.debug("padding %s with %d star component(s)", "second" if lacking > 0 else "first", abs(lacking))
    first = _with_stars(first, max(0, -lacking))
    second = _with_stars(second, max(0, lacking))
    return InflatedPair(label=label, first=first, second=second)


def identity_edge_map(base: Graph) -> Dict[Edge, Edge]:
    return {e: e for e in base.edges()}
