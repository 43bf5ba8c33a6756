"""
Whitney models W_i / W_i', the thorn equation and special Whitney pairs.

Vertices a, b, c, d of W_i and u, v, w, x of W_i' are numbered 0..3.
"""

import itertools
import logging
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from src.graph_core.graph import Graph, is_connected
from src.iso.canonical import canonical_form
from src.iso.isomorphism import are_isomorphic
from src.pathgraph.paths import build_path_graph
from src.utils.errors import GraphRangeError, InfeasibleThornsError, TypeExclusionError
from .inflation import inflate_edge_isomorphism
from .schema import Edge, InflatedPair, ThornAssignment, WhitneyModel

logger = logging.getLogger(__name__)

WHITNEY_TYPES = (3, 4, 5, 6)
TARGET_NAMES = ("t_u", "t_v", "t_w", "t_x")

# ab->uv, ac->uw, ad->vw, bc->ux, bd->vx, cd->wx
PHI_6: Dict[Edge, Edge] = {
    (0, 1): (0, 1),
    (0, 2): (0, 2),
    (0, 3): (1, 2),
    (1, 2): (0, 3),
    (1, 3): (1, 3),
    (2, 3): (2, 3),
}

_REMOVED: Dict[int, Tuple[Edge, ...]] = {
    6: (),
    5: ((2, 3),),
    4: ((1, 3), (2, 3)),
    3: ((1, 2), (1, 3), (2, 3)),
}

# (name, input, output, excluded types)
CASE_TABLE: Tuple[Tuple[str, Tuple[int, ...], Tuple[int, ...], Tuple[int, ...]], ...] = (
    ("i", (0, 0, 0, 0), (0, 0, 0, 0), ()),
    ("ii", (1, 1, 1, 1), (1, 1, 1, 1), (3,)),
    ("iii", (1, 1, 0, 0), (1, 1, 0, 0), ()),
    ("iv", (1, 0, 1, 0), (1, 0, 1, 0), ()),
    ("v", (1, 0, 0, 1), (0, 1, 1, 0), ()),
    ("vi", (0, 1, 1, 0), (1, 0, 0, 1), (3,)),
    ("vii", (0, 1, 0, 1), (0, 1, 0, 1), (3, 4)),
    ("viii", (0, 0, 1, 1), (0, 0, 1, 1), (3, 4, 5)),
)


def _check_type(i: int) -> None:
    if i not in WHITNEY_TYPES:
        raise GraphRangeError(f"Whitney type must be one of 3, 4, 5, 6, got {i}")


def whitney_model(i: int) -> WhitneyModel:
    """
    W_i, W_i' and phi_i, the restriction of phi_6 to E(W_i).

    W_6 = W_6' = K_4; W_5 and W_5' drop cd and wx; W_4 and W_4' drop
    {bd, cd} and {vx, wx}; W_3 is the star at a and W_3' the triangle uvw.
    """
    _check_type(i)
    removed = set(_REMOVED[i])
    phi = {e: f for e, f in PHI_6.items() if e not in removed}
    w = Graph.from_edges(4, phi.keys())
    wp = Graph.from_edges(3 if i == 3 else 4, phi.values())
    return WhitneyModel(i=i, w=w, wp=wp, phi=phi)


def thorn_case(t: ThornAssignment) -> Optional[str]:
    """Roman numeral of the case-table row with this input, if any."""
    return next((name for name, source, _, _ in CASE_TABLE if source == t.values), None)


def solve_thorn_equation(i: int, t: ThornAssignment) -> Tuple[int, ...]:
    """
    Solve t_u + t_v = t_a + t_b (and the other five edge equations) for W_i'.

    t_u = (a+b+c-d)/2, t_v = (a+b-c+d)/2, t_w = (a-b+c+d)/2, t_x = (-a+b+c+d)/2.

    Returns:
        (t_u, t_v, t_w, t_x), or (t_u, t_v, t_w) for type 3

    Raises:
        GraphRangeError: i is not a Whitney type
        InfeasibleThornsError: some output is not 0 or 1
        TypeExclusionError: the case is excluded for type i
    """
    _check_type(i)
    a, b, c, d = t.values
    numerators = (a + b + c - d, a + b - c + d, a - b + c + d, -a + b + c + d)
    if i == 3:
        numerators = numerators[:3]
    for name, num in zip(TARGET_NAMES, numerators):
        value = Fraction(num, 2)
        if value not in (0, 1):
            raise InfeasibleThornsError(f"thorns {t.values} are infeasible: {name} = {value}")
    solved = tuple(num // 2 for num in numerators)

    case = thorn_case(t)
    row = next(r for r in CASE_TABLE if r[0] == case)
    if i in row[3]:
        raise TypeExclusionError(f"case ({case}) {row[1]} -> {row[2]} is excluded for Whitney type {i}")
    return solved


def whitney_pair(i: int, t: ThornAssignment, widths: Sequence[int]) -> InflatedPair:
    """
    Special Whitney pair: inflate W_i with (widths, t) and W_i' with
    (widths o phi_i^-1, solved thorns).

    Args:
        i: Whitney type
        t: Thorns on a, b, c, d
        widths: One width per edge of W_i, in sorted edge order (ab, ac, ad, bc, bd, cd)
    """
    model = whitney_model(i)
    solved = solve_thorn_equation(i, t)
    edges = model.w.edges()
    if len(widths) != len(edges):
        raise GraphRangeError(f"type {i} needs {len(edges)} widths, got {len(widths)}")
    if any(s < 1 for s in widths):
        raise GraphRangeError(f"diamond widths must be >= 1, got {tuple(widths)}")
    label = f"whitney type {i} thorns {','.join(map(str, t.values))} widths {','.join(map(str, widths))}"
    return inflate_edge_isomorphism(
        model.w, model.wp, model.phi, dict(zip(edges, widths)), list(t.values), list(solved), label=label
    )


def is_witness(pair: InflatedPair, node_budget: Optional[int] = None) -> bool:
    """True iff the two graphs are connected, nonisomorphic, and have isomorphic connected P_3-graphs."""
    g, h = pair.first.graph, pair.second.graph
    if not (is_connected(g) and is_connected(h)):
        return False
    if are_isomorphic(g, h, node_budget=node_budget) is not None:
        return False
    pg = build_path_graph(g, 3).pgraph
    ph = build_path_graph(h, 3).pgraph
    if not (is_connected(pg) and is_connected(ph)):
        return False
    return (canonical_form(pg, node_budget=node_budget).canon_g6
            == canonical_form(ph, node_budget=node_budget).canon_g6)


def search_whitney_widths(
    i: int,
    t: ThornAssignment,
    max_width: int,
    node_budget: Optional[int] = None,
) -> List[Tuple[int, ...]]:
    """
    All width vectors up to max_width whose Whitney pair is a witness.

    Exhaustive over [1, max_width]^|E(W_i)|, in lexicographic order.
    """
    if max_width < 1:
        raise GraphRangeError(f"max width must be >= 1, got {max_width}")
    solve_thorn_equation(i, t)
    count = whitney_model(i).w.edge_count
    found = []
    for widths in itertools.product(range(1, max_width + 1), repeat=count):
        if is_witness(whitney_pair(i, t, widths), node_budget=node_budget):
            found.append(widths)
    logger.info("type %d thorns %s: %d witness width vector(s) up to %d", i, t.values, len(found), max_width)
    return found
