"""
Isomorph-free generation of connected graphs by canonical augmentation.

A child of a canonical (n-1)-vertex parent adds vertex n-1 joined to a
nonempty neighbour subset. The child is kept iff the new vertex lies in
the automorphism orbit of its canonical deletion vertex: the non-cut
vertex with the largest canonical position. Children of one parent are
deduplicated by canonical token.
"""

import logging
from typing import Dict, Iterator, List, Optional

from src.graph_core.graph import Graph, is_cut_vertex
from src.iso.canonical import canonical_form, refine_colors
from src.utils.config import Settings
from src.utils.errors import GraphRangeError, ResourceLimitError

logger = logging.getLogger(__name__)


def _deletion_vertex(child: Graph, relabeling: List[int]) -> int:
    at_position = [0] * child.n
    for v, position in enumerate(relabeling):
        at_position[position] = v
    for position in range(child.n - 1, -1, -1):
        v = at_position[position]
        if not is_cut_vertex(child, v):
            return v
    raise AssertionError("a connected graph always has a non-cut vertex")


def _same_orbit(g: Graph, v: int, w: int, node_budget: Optional[int]) -> bool:
    if v == w:
        return True
    if g.degree(v) != g.degree(w):
        return False
    adj = [g.neighbors(u) for u in range(g.n)]
    colors = refine_colors(adj, [0] * g.n)
    if colors[v] != colors[w]:
        return False
    mark_v = [1 if u == v else 0 for u in range(g.n)]
    mark_w = [1 if u == w else 0 for u in range(g.n)]
    return (canonical_form(g, coloring=mark_v, node_budget=node_budget).canon_g6
            == canonical_form(g, coloring=mark_w, node_budget=node_budget).canon_g6)


def _children(parent: Graph, node_budget: Optional[int]) -> Dict[str, Graph]:
    accepted: Dict[str, Graph] = {}
    new = parent.n
    for mask in range(1, 1 << parent.n):
        child = parent.with_vertex(u for u in range(parent.n) if (mask >> u) & 1)
        cf = canonical_form(child, node_budget=node_budget)
        if cf.canon_g6 in accepted:
            continue
        if _same_orbit(child, new, _deletion_vertex(child, cf.relabeling), node_budget):
            accepted[cf.canon_g6] = child.relabel(cf.relabeling)
    return accepted


def connected_graphs_by_level(max_n: int, node_budget: Optional[int] = None) -> Iterator[List[Graph]]:
    """Yield the canonical connected graphs on 1, 2, ..., max_n vertices, one sorted list per n."""
    level = [Graph(1)]
    yield level
    for n in range(2, max_n + 1):
        found: Dict[str, Graph] = {}
        for parent in level:
            found.update(_children(parent, node_budget))
        level = [found[key] for key in sorted(found)]
        logger.debug("n=%d: %d connected graphs", n, len(level))
        yield level


def enumerate_connected(
    n: int,
    limit: Optional[int] = None,
    node_budget: Optional[int] = None,
) -> Iterator[Graph]:
    """
    One canonical representative per isomorphism class of connected graphs on n vertices.

    Args:
        n: Number of vertices, at least 1
        limit: Largest n accepted (PK_MAX_N or 9 when omitted)
        node_budget: Canonical search budget

    Returns:
        Iterator over graphs in canonical relabeling, ordered by canonical graph6

    Raises:
        GraphRangeError: n < 1
        ResourceLimitError: n above the limit
    """
    if n < 1:
        raise GraphRangeError(f"n must be >= 1, got {n}")
    limit = limit if limit is not None else Settings.from_env().max_n
    if n > limit:
        raise ResourceLimitError(f"n = {n} exceeds the enumeration limit {limit} (raise PK_MAX_N to allow it)")
    for level in connected_graphs_by_level(n, node_budget):
        if level[0].n == n:
            yield from level


def connected_population(
    min_n: int,
    max_n: int,
    limit: Optional[int] = None,
    node_budget: Optional[int] = None,
) -> Iterator[Graph]:
    """All connected graphs with min_n <= n <= max_n, smallest n first."""
    if min_n < 1 or min_n > max_n:
        raise GraphRangeError(f"need 1 <= min_n <= max_n, got {min_n}..{max_n}")
    limit = limit if limit is not None else Settings.from_env().max_n
    if max_n > limit:
        raise ResourceLimitError(f"n = {max_n} exceeds the enumeration limit {limit} (raise PK_MAX_N to allow it)")
    for level in connected_graphs_by_level(max_n, node_budget):
        if level[0].n >= min_n:
            yield from level
