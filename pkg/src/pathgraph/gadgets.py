"""
Thorns and diamonds: the local structures behind non-induced
P_3-isomorphisms.
"""

from typing import Dict, List, Tuple

from src.graph_core.graph import Graph
from .paths import enumerate_paths
from .schema import Diamond, Thorn


def find_thorns(g: Graph) -> Tuple[List[Thorn], List[Thorn]]:
    """
    Split the P_3's of g by how many ends have host degree 1.

    Returns:
        (T1, T2) in enumerate_paths order
    """
    t1: List[Thorn] = []
    t2: List[Thorn] = []
    for path in enumerate_paths(g, 3):
        grade = (g.degree(path[0]) == 1) + (g.degree(path[-1]) == 1)
        if grade == 1:
            t1.append(Thorn(path=path, grade=1))
        elif grade == 2:
            t2.append(Thorn(path=path, grade=2))
    return t1, t2


def find_diamonds(g: Graph) -> List[Diamond]:
    """
    Every nonempty D_{a,b}, sorted by (end_a, end_b).

    A degree-2 vertex belongs to exactly one diamond: the one named by its
    two neighbours.
    """
    middles: Dict[Tuple[int, int], List[int]] = {}
    for c in range(g.n):
        if g.degree(c) == 2:
            a, b = g.neighbors(c)
            middles.setdefault((a, b), []).append(c)
    return [
        Diamond(end_a=a, end_b=b, middles=tuple(cs), braced=g.adjacent(a, b))
        for (a, b), cs in sorted(middles.items())
    ]
