"""
Exact canonical labeling by colour refinement plus individualization.

Initial colours are vertex degrees (optionally split by a caller-supplied
colouring); refinement replaces each colour by (colour, sorted neighbour
colours) until the number of cells stops growing. The search individualizes
vertices of the first non-singleton cell, lowest id first, and keeps the
leaf whose graph6 bit string is least. Leaves that reproduce the first
leaf's graph yield automorphisms, which prune equivalent subtrees.
"""

import logging
from typing import List, Optional, Sequence, Tuple

from src.graph_core.graph import Graph
from src.graph_core.graph6 import encode_graph6, upper_triangle_code
from src.utils.config import resolve_node_budget
from src.utils.errors import CanonicalizationBudgetError
from .schema import CanonicalForm

logger = logging.getLogger(__name__)

_NO_JUMP = 1 << 30


def _rank(signatures: Sequence) -> List[int]:
    ranks = {s: r for r, s in enumerate(sorted(set(signatures)))}
    return [ranks[s] for s in signatures]


def refine_colors(adj: Sequence[Sequence[int]], colors: List[int]) -> List[int]:
    """
    Refine dense colour ranks to the coarsest equitable partition below them.

    Cell order is preserved: a cell only ever splits in place.
    """
    n = len(colors)
    num = len(set(colors))
    while num < n:
        sigs = [(colors[v], tuple(sorted([colors[u] for u in adj[v]]))) for v in range(n)]
        new = _rank(sigs)
        new_num = max(new) + 1
        if new_num == num:
            break
        colors, num = new, new_num
    return colors


def _individualize(colors: List[int], v: int) -> List[int]:
    c = colors[v]
    return [x + 1 if x > c or (x == c and u != v) else x for u, x in enumerate(colors)]


class _CanonicalSearch:
    """One canonical-labeling search over a fixed graph."""

    def __init__(self, g: Graph, budget: int):
        self.g = g
        self.n = g.n
        self.adj = [tuple(g.neighbors(v)) for v in range(g.n)]
        self.budget = budget
        self.nodes = 0
        self.first: Optional[Tuple[int, List[int], List[int]]] = None
        self.best: Optional[Tuple[int, List[int]]] = None
        self.generators: List[List[int]] = []

    def run(self, coloring: Optional[Sequence[int]]) -> Tuple[int, List[int]]:
        base = coloring if coloring is not None else [0] * self.n
        colors = _rank([(base[v], len(self.adj[v])) for v in range(self.n)])
        self._visit(refine_colors(self.adj, colors), [])
        code, order = self.best
        return code, order

    def _visit(self, colors: List[int], path: List[int]) -> int:
        self.nodes += 1
        if self.nodes > self.budget:
            raise CanonicalizationBudgetError(self.budget, self.n)

        counts = [0] * self.n
        for x in colors:
            counts[x] += 1
        target = next((c for c in range(self.n) if counts[c] > 1), None)
        if target is None:
            return self._leaf(colors, path)

        depth = len(path)
        cell = [v for v in range(self.n) if colors[v] == target]
        explored: List[int] = []
        orbit_of: Optional[List[int]] = None
        seen_generators = -1
        for v in cell:
            if explored:
                if seen_generators != len(self.generators):
                    orbit_of = self._orbits(path)
                    seen_generators = len(self.generators)
                if orbit_of[v] in {orbit_of[u] for u in explored}:
                    continue
            explored.append(v)
            resume = self._visit(refine_colors(self.adj, _individualize(colors, v)), path + [v])
            if resume < depth:
                return resume
        return _NO_JUMP

    def _leaf(self, colors: List[int], path: List[int]) -> int:
        order = [0] * self.n
        for v, position in enumerate(colors):
            order[position] = v
        code = upper_triangle_code(self.g, order)

        if self.first is None:
            self.first = (code, order, list(path))
            self.best = (code, order)
            return _NO_JUMP

        first_code, first_order, first_path = self.first
        if code == first_code:
            gamma = self._automorphism(first_order, order)
            self.generators.append(gamma)
            limit = min(len(path), len(first_path))
            d = next((i for i in range(limit) if path[i] != first_path[i]), limit)
            if d < limit and all(gamma[first_path[i]] == path[i] for i in range(d + 1)):
                return d
            return _NO_JUMP

        best_code, best_order = self.best
        if code == best_code:
            self.generators.append(self._automorphism(best_order, order))
        elif code < best_code:
            self.best = (code, order)
        return _NO_JUMP

    def _automorphism(self, source_order: List[int], target_order: List[int]) -> List[int]:
        # Both orders give the same relabeled graph, so matching positions is an automorphism.
        gamma = [0] * self.n
        for position, v in enumerate(source_order):
            gamma[v] = target_order[position]
        return gamma

    def _orbits(self, path: List[int]) -> List[int]:
        """Orbit representative per vertex under the found automorphisms fixing path."""
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for gamma in self.generators:
            if any(gamma[p] != p for p in path):
                continue
            for x in range(self.n):
                rx, ry = find(x), find(gamma[x])
                if rx != ry:
                    parent[max(rx, ry)] = min(rx, ry)
        return [find(x) for x in range(self.n)]


def canonical_form(
    g: Graph,
    coloring: Optional[Sequence[int]] = None,
    node_budget: Optional[int] = None,
) -> CanonicalForm:
    """
    Canonical graph6 token and relabeling of g.

    Args:
        g: Graph to canonicalize
        coloring: Optional vertex colours; canonical positions respect colour order,
            so two coloured graphs with the same colour multiset compare by canon_g6
        node_budget: Search-node cap (PK_NODE_BUDGET or 10^7 when omitted)

    Returns:
        CanonicalForm; isomorphic inputs give byte-equal canon_g6

    Raises:
        CanonicalizationBudgetError: when the search exceeds the node budget
    """
    if g.n == 0:
        return CanonicalForm(canon_g6=encode_graph6(0, 0), relabeling=[], search_nodes=0)
    search = _CanonicalSearch(g, resolve_node_budget(node_budget))
    code, order = search.run(coloring)
    relabeling = [0] * g.n
    for position, v in enumerate(order):
        relabeling[v] = position
    logger.debug("canonical form of %d-vertex graph: %d nodes, %d automorphisms",
                 g.n, search.nodes, len(search.generators))
    return CanonicalForm(
        canon_g6=encode_graph6(g.n, code, allow_extended=True),
        relabeling=relabeling,
        search_nodes=search.nodes,
    )


def canonical_graph(g: Graph, node_budget: Optional[int] = None) -> Graph:
    """g relabeled into canonical order."""
    return g.relabel(canonical_form(g, node_budget=node_budget).relabeling)
