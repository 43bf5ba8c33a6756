from .canonical import canonical_form, canonical_graph, refine_colors
from .isomorphism import (
    are_isomorphic,
    check_certificate,
    compose_pk_isomorphisms,
    induce_pk_isomorphism,
    invert_certificate,
    invert_pk_isomorphism,
    swap_to_pk_isomorphism,
    verify_pk_isomorphism,
)
from .schema import CanonicalForm, IsoCertificate, PkIsomorphism, PkVerification

__all__ = [
    "CanonicalForm",
    "IsoCertificate",
    "PkIsomorphism",
    "PkVerification",
    "are_isomorphic",
    "canonical_form",
    "canonical_graph",
    "check_certificate",
    "compose_pk_isomorphisms",
    "induce_pk_isomorphism",
    "invert_certificate",
    "invert_pk_isomorphism",
    "refine_colors",
    "swap_to_pk_isomorphism",
    "verify_pk_isomorphism",
]
