"""
Graph isomorphism certificates and P_k-isomorphisms.
"""

import logging
from typing import List, Optional, Sequence

from src.graph_core.graph import Graph, degree_sequence
from src.pathgraph.paths import build_path_graph, enumerate_paths, normalize_path
from src.pathgraph.schema import SwapPermutation
from src.utils.errors import CertificateError, StructuralError
from .canonical import canonical_form
from .schema import IsoCertificate, PkIsomorphism, PkVerification

logger = logging.getLogger(__name__)


def check_certificate(g: Graph, h: Graph, mapping: Sequence[int]) -> None:
    """
    Raise CertificateError unless mapping is an isomorphism g -> h.

    Args:
        g: Source graph
        h: Target graph
        mapping: mapping[v] is the image of vertex v
    """
    if g.n != h.n or len(mapping) != g.n:
        raise CertificateError(f"certificate covers {len(mapping)} vertices, graphs have {g.n} and {h.n}")
    if sorted(mapping) != list(range(h.n)):
        raise CertificateError("certificate is not a bijection")
    if g.edge_count != h.edge_count:
        raise CertificateError(f"edge counts differ: {g.edge_count} vs {h.edge_count}")
    for u, v in g.edges():
        if not h.adjacent(mapping[u], mapping[v]):
            raise CertificateError(f"edge {u}-{v} maps to non-edge {mapping[u]}-{mapping[v]}")


def are_isomorphic(g: Graph, h: Graph, node_budget: Optional[int] = None) -> Optional[IsoCertificate]:
    """
    Decide isomorphism by comparing canonical forms.

    Cheap invariants (order, size, degree sequence) reject most pairs before
    canonical labeling runs.

    Returns:
        IsoCertificate mapping g onto h, or None
    """
    if g.n != h.n or g.edge_count != h.edge_count or degree_sequence(g) != degree_sequence(h):
        return None
    cf_g = canonical_form(g, node_budget=node_budget)
    cf_h = canonical_form(h, node_budget=node_budget)
    if cf_g.canon_g6 != cf_h.canon_g6:
        return None
    at_position = [0] * h.n
    for v, position in enumerate(cf_h.relabeling):
        at_position[position] = v
    mapping = [at_position[cf_g.relabeling[v]] for v in range(g.n)]
    check_certificate(g, h, mapping)
    return IsoCertificate(mapping=mapping)


def invert_certificate(sigma: IsoCertificate) -> IsoCertificate:
    inverse = [0] * len(sigma.mapping)
    for v, image in enumerate(sigma.mapping):
        inverse[image] = v
    return IsoCertificate(mapping=inverse)


def induce_pk_isomorphism(sigma: IsoCertificate, g: Graph, h: Graph, k: int) -> PkIsomorphism:
    """
    The P_k-isomorphism sigma* sending a_1...a_k to sigma(a_1)...sigma(a_k).

    Raises:
        CertificateError: if sigma is not an isomorphism g -> h
    """
    check_certificate(g, h, sigma.mapping)
    mapping = {
        path: normalize_path([sigma.mapping[v] for v in path])
        for path in enumerate_paths(g, k)
    }
    return PkIsomorphism(k=k, mapping=mapping)


def swap_to_pk_isomorphism(g: Graph, swap: SwapPermutation) -> PkIsomorphism:
    """View a swap on pi_3(g) as a P_3-isomorphism g -> g."""
    labels = enumerate_paths(g, 3)
    if len(labels) != len(swap.mapping):
        raise StructuralError("swap does not act on the P_3's of this graph")
    return PkIsomorphism(k=3, mapping={labels[i]: labels[j] for i, j in enumerate(swap.mapping)})


def invert_pk_isomorphism(tau: PkIsomorphism) -> PkIsomorphism:
    return PkIsomorphism(k=tau.k, mapping={image: path for path, image in tau.mapping.items()})


def compose_pk_isomorphisms(outer: PkIsomorphism, inner: PkIsomorphism) -> PkIsomorphism:
    """outer after inner."""
    if outer.k != inner.k:
        raise StructuralError(f"cannot compose P_{outer.k}- and P_{inner.k}-isomorphisms")
    try:
        mapping = {path: outer.mapping[image] for path, image in inner.mapping.items()}
    except KeyError as e:
        raise StructuralError(f"path {e.args[0]} has no image under the outer map") from e
    return PkIsomorphism(k=inner.k, mapping=mapping)


def verify_pk_isomorphism(tau: PkIsomorphism, g: Graph, h: Graph) -> PkVerification:
    """
    Check that tau is an isomorphism P_k(g) -> P_k(h).

    Edges of P_k(g) are checked first, in enumeration order, then non-edges,
    so the reported violation is the first failing pair of that sweep.

    Raises:
        StructuralError: if tau is not a bijection pi_k(g) -> pi_k(h)
    """
    pg = build_path_graph(g, tau.k)
    ph = build_path_graph(h, tau.k)
    if len(pg.labels) != len(ph.labels):
        raise StructuralError(f"|pi_{tau.k}| differs: {len(pg.labels)} vs {len(ph.labels)}")
    if set(tau.mapping) != set(pg.labels):
        raise StructuralError("map is not defined on exactly the paths of G")
    h_index = ph.index()
    images: List[int] = []
    for path in pg.labels:
        image = tau.mapping[path]
        if image not in h_index:
            raise StructuralError(f"image {image} of {path} is not a path of H")
        images.append(h_index[image])
    if len(set(images)) != len(images):
        raise StructuralError("map is not injective")

    g_rows, h_rows = pg.pgraph.rows, ph.pgraph.rows
    count = len(images)
    for i in range(count):
        for j in range(i + 1, count):
            if (g_rows[i] >> j) & 1 and not (h_rows[images[i]] >> images[j]) & 1:
                return PkVerification(
                    ok=False,
                    violation=(pg.labels[i], pg.labels[j]),
                    detail="adjacent pair maps to a non-adjacent pair",
                )
    for i in range(count):
        for j in range(i + 1, count):
            if not (g_rows[i] >> j) & 1 and (h_rows[images[i]] >> images[j]) & 1:
                return PkVerification(
                    ok=False,
                    violation=(pg.labels[i], pg.labels[j]),
                    detail="non-adjacent pair maps to an adjacent pair",
                )
    return PkVerification(ok=True)
