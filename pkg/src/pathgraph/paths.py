"""
k-vertex paths of a host graph and the path graph P_k(G).

Two paths are adjacent in P_k(G) when their union is a path on k+1
vertices or a cycle on k vertices; the union is built and classified
literally.
"""

import logging
from itertools import combinations
from typing import Dict, List, Sequence, Set, Tuple

from src.graph_core.graph import Graph
from src.utils.errors import GraphRangeError
from .schema import PathGraphResult, PathK

logger = logging.getLogger(__name__)


def normalize_path(vertices: Sequence[int]) -> PathK:
    """Orient a vertex sequence so it is lexicographically <= its reverse."""
    forward = tuple(vertices)
    backward = forward[::-1]
    return forward if forward <= backward else backward


def enumerate_paths(g: Graph, k: int) -> List[PathK]:
    """
    All k-vertex paths of g, one normalized tuple each, sorted.

    Args:
        g: Host graph
        k: Vertices per path (k >= 2)

    Returns:
        Sorted list of normalized paths; empty when g has none
    """
    if k < 2:
        raise GraphRangeError(f"path length k must be >= 2, got {k}")
    adj = [g.neighbors(v) for v in range(g.n)]
    found = []
    for start in range(g.n):
        stack = [(start,)]
        while stack:
            path = stack.pop()
            if len(path) == k:
                # Each path is reached from both ends; keep the orientation starting lower.
                if path[0] < path[-1]:
                    found.append(path)
                continue
            for u in adj[path[-1]]:
                if u not in path:
                    stack.append(path + (u,))
    found.sort()
    return found


def _edge_set(path: PathK) -> Set[Tuple[int, int]]:
    return {(min(a, b), max(a, b)) for a, b in zip(path, path[1:])}


def path_graph_adjacent(p: PathK, q: PathK, k: int) -> bool:
    """True iff the union of paths p and q is a P_{k+1} or a C_k."""
    if p == q:
        return False
    edges = _edge_set(p) | _edge_set(q)
    vertices = set(p) | set(q)
    if len(vertices) == k + 1 and len(edges) == k:
        wanted_cycle = False
    elif k >= 3 and len(vertices) == k and len(edges) == k:
        wanted_cycle = True
    else:
        return False

    adj: Dict[int, List[int]] = {v: [] for v in vertices}
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    degrees = [len(nbrs) for nbrs in adj.values()]
    if wanted_cycle:
        if any(d != 2 for d in degrees):
            return False
    elif max(degrees) > 2:
        return False

    start = next(iter(vertices))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for u in adj[v]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == len(vertices)


def build_path_graph(g: Graph, k: int) -> PathGraphResult:
    """
    Construct P_k(g) with its index -> path back-labeling.

    Only pairs sharing at least k-1 vertices are classified: any other
    union has more than k+1 vertices.
    """
    labels = enumerate_paths(g, k)
    buckets: Dict[Tuple[int, ...], List[int]] = {}
    for idx, path in enumerate(labels):
        for key in combinations(sorted(path), k - 1):
            buckets.setdefault(key, []).append(idx)

    rows = [0] * len(labels)
    checked: Set[Tuple[int, int]] = set()
    for members in buckets.values():
        for i, j in combinations(members, 2):
            if (i, j) in checked:
                continue
            checked.add((i, j))
            if path_graph_adjacent(labels[i], labels[j], k):
                rows[i] |= 1 << j
                rows[j] |= 1 << i

    logger.debug("P_%d graph: %d paths, %d candidate pairs", k, len(labels), len(checked))
    return PathGraphResult(k=k, pgraph=Graph._trusted(len(labels), tuple(rows)), labels=labels)


def isolated_paths(result: PathGraphResult) -> List[int]:
    """Indices of P_k(G) vertices without neighbours."""
    return [i for i, row in enumerate(result.pgraph.rows) if row == 0]
