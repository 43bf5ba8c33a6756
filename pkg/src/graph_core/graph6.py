"""
graph6 serialization.

The payload is the upper triangle of the adjacency matrix read column by
column (bit (i, j) for j = 1..n-1, i = 0..j-1), packed 6 bits per byte with
each byte offset by 63. The public reader/writer handle n <= 62; canonical
keys of large P_k-graphs use the standard 4-byte header via
encode_graph6(..., allow_extended=True).
"""

from typing import List, Optional, Sequence

from src.utils.errors import Graph6Error, UnsupportedSizeError
from .graph import Graph, iter_bits

SMALL_LIMIT = 62
EXTENDED_LIMIT = 258047


def upper_triangle_code(g: Graph, order: Optional[Sequence[int]] = None) -> int:
    """
    The graph6 bit string of g as one integer (first bit most significant).

    Args:
        g: Graph to encode
        order: order[j] is the vertex placed at position j; identity if omitted

    Returns:
        Integer holding C(n, 2) bits
    """
    n = g.n
    if order is None:
        order = range(n)
    pos = [0] * n
    for j, v in enumerate(order):
        pos[v] = j
    rows = g.rows
    code = 0
    for j in range(1, n):
        mask = 0
        for u in iter_bits(rows[order[j]]):
            i = pos[u]
            if i < j:
                mask |= 1 << (j - 1 - i)
        code = (code << j) | mask
    return code


def encode_graph6(n: int, code: int, allow_extended: bool = False) -> str:
    """Serialize a vertex count and an upper-triangle code."""
    if n <= SMALL_LIMIT:
        header = chr(63 + n)
    elif allow_extended and n <= EXTENDED_LIMIT:
        header = "~" + "".join(chr(63 + ((n >> shift) & 63)) for shift in (12, 6, 0))
    else:
        raise UnsupportedSizeError(f"graph6 output supports n <= {SMALL_LIMIT}, got n = {n}")
    nbits = n * (n - 1) // 2
    nbytes = -(-nbits // 6)
    value = code << (6 * nbytes - nbits)
    payload = "".join(chr(63 + ((value >> (6 * (nbytes - 1 - idx))) & 63)) for idx in range(nbytes))
    return header + payload


def write_graph6(g: Graph) -> str:
    """graph6 token for g (n <= 62); padding bits are zero."""
    if g.n > SMALL_LIMIT:
        raise UnsupportedSizeError(f"graph6 output supports n <= {SMALL_LIMIT}, got n = {g.n}")
    return encode_graph6(g.n, upper_triangle_code(g))


def parse_graph6(text: str, allow_extended: bool = False) -> Graph:
    """
    Decode one graph6 token.

    Args:
        text: The token; surrounding whitespace is ignored
        allow_extended: Accept the 4-byte header used for n > 62

    Returns:
        Decoded graph

    Raises:
        Graph6Error: naming the offending byte offset
    """
    token = text.strip()
    if not token:
        raise Graph6Error("empty token", 0)
    for offset, ch in enumerate(token):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"byte {ord(ch)} is outside 63..126", offset)

    if token[0] == "~":
        if not allow_extended:
            raise Graph6Error(f"extended header (n > {SMALL_LIMIT}) is not supported", 0)
        if len(token) < 4 or token[1] == "~":
            raise Graph6Error("truncated or unsupported extended header", min(len(token), 1))
        n = 0
        for ch in token[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        start = 4
    else:
        n = ord(token[0]) - 63
        start = 1

    nbits = n * (n - 1) // 2
    nbytes = -(-nbits // 6)
    if len(token) != start + nbytes:
        raise Graph6Error(
            f"expected {start + nbytes} bytes for n = {n}, got {len(token)}",
            min(len(token), start + nbytes),
        )

    value = 0
    for ch in token[start:]:
        value = (value << 6) | (ord(ch) - 63)
    pad = 6 * nbytes - nbits
    if value & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits", len(token) - 1)
    value >>= pad

    rows = [0] * n
    bit = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if (value >> bit) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            bit -= 1
    return Graph._trusted(n, tuple(rows))


def read_graph6_lines(text: str, allow_extended: bool = False) -> List[Graph]:
    """Decode a newline-separated list of graph6 tokens; blank lines are skipped."""
    graphs = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            graphs.append(parse_graph6(line, allow_extended=allow_extended))
        except Graph6Error as e:
            raise Graph6Error(f"{e.reason} (line {line_no})", e.offset) from e
    return graphs
