from .bipartite import bipartite_pair, shifted_thorns, special_bipartite_spec
from .catalog import FixtureCatalog, FixtureRecipe, build_fixture
from .inflation import diamond_inflate, inflate_edge_isomorphism
from .k33 import k33_case
from .named import FAMILIES, named_graph
from .schema import (
    BipartitePairSpec,
    InflatedPair,
    InflationResult,
    InflationSpec,
    K33Pair,
    ThornAssignment,
    VertexOrigin,
    VertexRole,
    WhitneyModel,
)
from .whitney import CASE_TABLE, is_witness, search_whitney_widths, solve_thorn_equation, thorn_case, whitney_model, whitney_pair

__all__ = [
    "BipartitePairSpec",
    "CASE_TABLE",
    "FAMILIES",
    "FixtureCatalog",
    "FixtureRecipe",
    "InflatedPair",
    "InflationResult",
    "InflationSpec",
    "K33Pair",
    "ThornAssignment",
    "VertexOrigin",
    "VertexRole",
    "WhitneyModel",
    "bipartite_pair",
    "build_fixture",
    "diamond_inflate",
    "inflate_edge_isomorphism",
    "is_witness",
    "k33_case",
    "named_graph",
    "search_whitney_widths",
    "shifted_thorns",
    "solve_thorn_equation",
    "special_bipartite_spec",
    "thorn_case",
    "whitney_model",
    "whitney_pair",
]
