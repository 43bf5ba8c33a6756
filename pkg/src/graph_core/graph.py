"""
Simple undirected graphs over vertices 0..n-1, stored as one adjacency
bitmask per vertex.
"""

import logging
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from src.utils.errors import GraphRangeError, StructuralError
from .schema import Bipartition

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


class Graph:
    """
    Immutable simple graph.

    Row v is an int whose bit u is set iff u ~ v. Rows are validated on
    construction: symmetric, loop-free, and confined to 0..n-1.
    """

    __slots__ = ("_n", "_rows", "_hash")

    def __init__(self, n: int, rows: Optional[Sequence[int]] = None):
        if n < 0:
            raise GraphRangeError(f"vertex count must be non-negative, got {n}")
        rows = tuple(rows) if rows is not None else (0,) * n
        if len(rows) != n:
            raise StructuralError(f"expected {n} adjacency rows, got {len(rows)}")
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise GraphRangeError(f"vertex {v} has a neighbour outside 0..{n - 1}")
            if (row >> v) & 1:
                raise StructuralError(f"loop at vertex {v}")
            for u in iter_bits(row):
                if not (rows[u] >> v) & 1:
                    raise StructuralError(f"adjacency is not symmetric for {v}-{u}")
        self._n = n
        self._rows = rows
        self._hash = None

    @classmethod
    def _trusted(cls, n: int, rows: Tuple[int, ...]) -> "Graph":
        # Internal fast path for rows produced by this module.
        g = cls.__new__(cls)
        g._n = n
        g._rows = rows
        g._hash = None
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> "Graph":
        """
        Build a graph from an edge list.

        Args:
            n: Number of vertices
            edges: Pairs (u, v) with u != v; duplicates are merged

        Returns:
            Graph instance
        """
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphRangeError(f"edge {u}-{v} is outside 0..{n - 1}")
            if u == v:
                raise StructuralError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls._trusted(n, tuple(rows))

    @classmethod
    def from_numpy(cls, matrix: np.ndarray) -> "Graph":
        """Build a graph from a square 0/1 adjacency matrix."""
        matrix = np.asarray(matrix)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise StructuralError(f"adjacency matrix must be square, got shape {matrix.shape}")
        n = matrix.shape[0]
        rows = []
        for v in range(n):
            row = 0
            for u in np.flatnonzero(matrix[v]):
                row |= 1 << int(u)
            rows.append(row)
        return cls(n, rows)

    @property
    def n(self) -> int:
        return self._n

    @property
    def rows(self) -> Tuple[int, ...]:
        return self._rows

    @property
    def edge_count(self) -> int:
        return sum(popcount(row) for row in self._rows) // 2

    def adjacent(self, u: int, v: int) -> bool:
        return bool((self._rows[u] >> v) & 1)

    def neighbors(self, v: int) -> List[int]:
        return list(iter_bits(self._rows[v]))

    def degree(self, v: int) -> int:
        return popcount(self._rows[v])

    def edges(self) -> List[Edge]:
        """Edges (u, v) with u < v, sorted lexicographically."""
        out = []
        for u, row in enumerate(self._rows):
            for v in iter_bits(row >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph in which vertex v is renamed perm[v]."""
        if sorted(perm) != list(range(self._n)):
            raise StructuralError("relabeling is not a permutation of the vertex set")
        rows = [0] * self._n
        for v, row in enumerate(self._rows):
            mask = 0
            for u in iter_bits(row):
                mask |= 1 << perm[u]
            rows[perm[v]] = mask
        return Graph._trusted(self._n, tuple(rows))

    def without_vertex(self, v: int) -> "Graph":
        """Delete v; vertices above v shift down by one."""
        if not 0 <= v < self._n:
            raise GraphRangeError(f"vertex {v} is outside 0..{self._n - 1}")
        low = (1 << v) - 1
        rows = []
        for u, row in enumerate(self._rows):
            if u == v:
                continue
            rows.append((row & low) | ((row >> (v + 1)) << v))
        return Graph._trusted(self._n - 1, tuple(rows))

    def with_vertex(self, neighbors: Iterable[int]) -> "Graph":
        """Append vertex n joined to the given neighbours."""
        n = self._n
        mask = 0
        for u in neighbors:
            if not 0 <= u < n:
                raise GraphRangeError(f"vertex {u} is outside 0..{n - 1}")
            mask |= 1 << u
        rows = [row | (1 << n) if (mask >> u) & 1 else row for u, row in enumerate(self._rows)]
        rows.append(mask)
        return Graph._trusted(n + 1, tuple(rows))

    def disjoint_union(self, other: "Graph") -> "Graph":
        shift = self._n
        rows = list(self._rows) + [row << shift for row in other.rows]
        return Graph._trusted(self._n + other.n, tuple(rows))

    def to_numpy(self) -> np.ndarray:
        """Dense 0/1 adjacency matrix."""
        matrix = np.zeros((self._n, self._n), dtype=np.int8)
        for u, v in self.edges():
            matrix[u, v] = 1
            matrix[v, u] = 1
        return matrix

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._rows == other._rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._n, self._rows))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={self.edges()})"


def is_connected(g: Graph) -> bool:
    """
    True iff every pair of vertices is joined by a path.

    The empty graph is not connected; the one-vertex graph is.
    """
    if g.n == 0:
        return False
    rows = g.rows
    seen = 1
    frontier = 1
    while frontier:
        reach = 0
        for v in iter_bits(frontier):
            reach |= rows[v]
        frontier = reach & ~seen
        seen |= frontier
    return seen == (1 << g.n) - 1


def is_cut_vertex(g: Graph, v: int) -> bool:
    """True iff deleting v disconnects a connected graph with n >= 3."""
    if g.n <= 2:
        return False
    return not is_connected(g.without_vertex(v))


def degree_sequence(g: Graph) -> List[int]:
    """Vertex degrees in non-increasing order."""
    degrees = np.fromiter((popcount(row) for row in g.rows), dtype=np.int64, count=g.n)
    return np.sort(degrees)[::-1].tolist()


def bipartition(g: Graph) -> Optional[Bipartition]:
    """
    Two-colour g, or return None if it has an odd cycle.

    Each component's smallest vertex goes to side A, so vertex 0 is always
    on side A.
    """
    side = [-1] * g.n
    for start in range(g.n):
        if side[start] != -1:
            continue
        side[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for u in iter_bits(g.rows[v]):
                if side[u] == -1:
                    side[u] = 1 - side[v]
                    stack.append(u)
                elif side[u] == side[v]:
                    logger.debug("odd cycle through edge %d-%d", v, u)
                    return None
    return Bipartition(
        side_a=frozenset(v for v in range(g.n) if side[v] == 0),
        side_b=frozenset(v for v in range(g.n) if side[v] == 1),
    )


def check_bipartition(g: Graph, parts: Bipartition) -> None:
    """Raise StructuralError unless parts is a valid bipartition of g."""
    if parts.side_a & parts.side_b:
        raise StructuralError("bipartition sides overlap")
    if parts.side_a | parts.side_b != frozenset(range(g.n)):
        raise StructuralError("bipartition does not cover every vertex")
    for u, v in g.edges():
        if (u in parts.side_a) == (v in parts.side_a):
            raise StructuralError(f"edge {u}-{v} lies inside one side of the bipartition")
