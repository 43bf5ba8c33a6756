"""
Named graph families with documented vertex numbering.

    sw                       centre 0, midpoints 1-3, leaves 4-6 (midpoint i+1 carries leaf i+4)
    cycle N                  0-1-...-(N-1)-0
    path N                   0-1-...-(N-1)
    star N                   K_{1,N}: centre 0, leaves 1..N
    complete N               K_N
    complete_bipartite M N   sides 0..M-1 and M..M+N-1
    book P                   spine 0-1, page apexes 2..P+1 joined to both spine ends
    spider L1 L2 ...         centre 0, each leg numbered outward after the previous leg
    petersen                 outer cycle 0-4, spokes i-(i+5), inner pentagram (i+5)-((i+2)%5+5)
    whitney I                W_I on a, b, c, d = 0..3
    whitney_prime I          W_I' on u, v, w, x = 0..3 (three vertices for I = 3)
"""

from typing import Callable, Dict, List, Tuple

from src.graph_core.graph import Graph
from src.utils.errors import GraphRangeError
from .whitney import whitney_model


def _need(name: str, params: Tuple[int, ...], count: int) -> None:
    if len(params) != count:
        raise GraphRangeError(f"{name} takes {count} parameter(s), got {len(params)}")


def _at_least(name: str, value: int, low: int) -> None:
    if value < low:
        raise GraphRangeError(f"{name} needs a parameter >= {low}, got {value}")


def _sw(*params: int) -> Graph:
    _need("sw", params, 0)
    return Graph.from_edges(7, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)])


def _cycle(*params: int) -> Graph:
    _need("cycle", params, 1)
    (n,) = params
    _at_least("cycle", n, 3)
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def _path(*params: int) -> Graph:
    _need("path", params, 1)
    (n,) = params
    _at_least("path", n, 1)
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def _star(*params: int) -> Graph:
    _need("star", params, 1)
    (n,) = params
    _at_least("star", n, 1)
    return Graph.from_edges(n + 1, [(0, i) for i in range(1, n + 1)])


def _complete(*params: int) -> Graph:
    _need("complete", params, 1)
    (n,) = params
    _at_least("complete", n, 1)
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def _complete_bipartite(*params: int) -> Graph:
    _need("complete_bipartite", params, 2)
    m, n = params
    _at_least("complete_bipartite", min(m, n), 1)
    return Graph.from_edges(m + n, [(u, m + v) for u in range(m) for v in range(n)])


def _book(*params: int) -> Graph:
    _need("book", params, 1)
    (pages,) = params
    _at_least("book", pages, 1)
    edges = [(0, 1)]
    for p in range(pages):
        edges += [(0, 2 + p), (1, 2 + p)]
    return Graph.from_edges(pages + 2, edges)


def _spider(*legs: int) -> Graph:
    if not legs:
        raise GraphRangeError("spider needs at least one leg length")
    edges: List[Tuple[int, int]] = []
    nxt = 1
    for length in legs:
        _at_least("spider", length, 1)
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph.from_edges(nxt, edges)


def _petersen(*params: int) -> Graph:
    _need("petersen", params, 0)
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(i + 5, (i + 2) % 5 + 5) for i in range(5)]
    return Graph.from_edges(10, edges)


def _whitney(*params: int) -> Graph:
    _need("whitney", params, 1)
    return whitney_model(params[0]).w


def _whitney_prime(*params: int) -> Graph:
    _need("whitney_prime", params, 1)
    return whitney_model(params[0]).wp


FAMILIES: Dict[str, Callable[..., Graph]] = {
    "sw": _sw,
    "cycle": _cycle,
    "path": _path,
    "star": _star,
    "complete": _complete,
    "complete_bipartite": _complete_bipartite,
    "book": _book,
    "spider": _spider,
    "petersen": _petersen,
    "whitney": _whitney,
    "whitney_prime": _whitney_prime,
}


def named_graph(name: str, *params: int) -> Graph:
    """
    Build a member of a named family.

    Args:
        name: Family name (case-insensitive; '-' and '_' are interchangeable)
        params: Integer parameters of the family

    Returns:
        Graph with the numbering documented in this module

    Raises:
        GraphRangeError: unknown family or invalid parameters
    """
    key = name.strip().lower().replace("-", "_")
    if key not in FAMILIES:
        raise GraphRangeError(f"unknown graph family '{name}'; known: {', '.join(sorted(FAMILIES))}")
    return FAMILIES[key](*params)
