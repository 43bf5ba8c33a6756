from enum import Enum
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from src.graph_core.graph import Graph
from src.graph_core.schema import Bipartition
from src.iso.schema import PkIsomorphism
from src.utils.errors import GraphRangeError

Edge = Tuple[int, int]


class VertexRole(str, Enum):
    """Where a vertex of an inflated graph came from."""
    BASE = "base"
    MIDDLE = "middle"
    LEAF = "leaf"
    STAR = "star"


class VertexOrigin(BaseModel):
    """Provenance of one vertex of a generated graph."""
    vertex: int
    role: VertexRole
    origin: Tuple[int, ...] = Field(..., description="Base vertex (v,) or base edge (a, b)")
    index: int = Field(default=0, description="Middle / leaf / star ordinal within its origin")


class InflationSpec(BaseModel):
    """Base graph F with diamond widths s_e on E(F) and thorn counts t_v on V(F)."""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    base: Graph
    widths: Dict[Edge, int] = Field(..., description="Edge (a, b), a < b -> width >= 1")
    thorns: Dict[int, int] = Field(..., description="Vertex -> number of pendant leaves >= 0")

    @model_validator(mode="after")
    def _check_domains(self) -> "InflationSpec":
        edges = set(self.base.edges())
        if set(self.widths) != edges:
            raise ValueError(f"widths must be given on exactly the edges {sorted(edges)}")
        if any(s < 1 for s in self.widths.values()):
            raise ValueError("every diamond width must be >= 1")
        if set(self.thorns) != set(range(self.base.n)):
            raise ValueError(f"thorn counts must be given on exactly the vertices 0..{self.base.n - 1}")
        if any(t < 0 for t in self.thorns.values()):
            raise ValueError("thorn counts must be >= 0")
        return self

    @classmethod
    def from_lists(cls, base: Graph, widths: List[int], thorns: List[int]) -> "InflationSpec":
        """Widths in base.edges() order, thorns in vertex order."""
        edges = base.edges()
        if len(widths) != len(edges):
            raise GraphRangeError(f"expected {len(edges)} widths, got {len(widths)}")
        if len(thorns) != base.n:
            raise GraphRangeError(f"expected {base.n} thorn counts, got {len(thorns)}")
        return cls(base=base, widths=dict(zip(edges, widths)), thorns=dict(enumerate(thorns)))

    @classmethod
    def uniform(cls, base: Graph, width: int = 1, thorns: int = 0) -> "InflationSpec":
        return cls.from_lists(base, [width] * base.edge_count, [thorns] * base.n)


class InflationResult(BaseModel):
    """A generated graph with per-vertex provenance."""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    graph: Graph
    provenance: List[VertexOrigin] = Field(default_factory=list)


class InflatedPair(BaseModel):
    """Two inflations related by an edge-isomorphism of their bases."""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    label: str = Field(..., description="Human-readable recipe, e.g. 'whitney type 3 (0,0,0,0)'")
    first: InflationResult
    second: InflationResult


class ThornAssignment(BaseModel):
    """(t_a, t_b, t_c, t_d) on the Whitney graph W_i, each 0 or 1."""
    model_config = ConfigDict(frozen=True)

    values: Tuple[int, int, int, int]

    @field_validator("values")
    @classmethod
    def _zero_or_one(cls, values: Tuple[int, int, int, int]) -> Tuple[int, int, int, int]:
        if any(t not in (0, 1) for t in values):
            raise ValueError(f"thorn counts must be 0 or 1, got {values}")
        return values


class WhitneyModel(BaseModel):
    """W_i, W_i' and the non-induced edge bijection phi_i."""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    i: int = Field(..., ge=3, le=6)
    w: Graph = Field(..., description="W_i on a, b, c, d = 0..3")
    wp: Graph = Field(..., description="W_i' on u, v, w, x = 0..3 (x absent for i = 3)")
    phi: Dict[Edge, Edge] = Field(..., description="E(W_i) -> E(W_i')")


class BipartitePairSpec(BaseModel):
    """Input of the bipartite-type construction t'_v = t_v -/+ k."""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    base: Graph
    widths: Dict[Edge, int]
    k: int = Field(default=1, ge=0)
    thorns: Dict[int, int] = Field(..., description="t_v used for the first inflation")
    parts: Optional[Bipartition] = Field(None, description="Explicit (A, B); computed when omitted")
    special: bool = Field(default=True, description="Require the special type: every t, t' in {0, 1}")

    @model_validator(mode="after")
    def _check_domains(self) -> "BipartitePairSpec":
        if self.base.edge_count == 0:
            raise ValueError("the base graph needs at least one edge")
        if set(self.widths) != set(self.base.edges()):
            raise ValueError("widths must be given on exactly the base edges")
        if any(s < 1 for s in self.widths.values()):
            raise ValueError("every diamond width must be >= 1")
        if set(self.thorns) != set(range(self.base.n)):
            raise ValueError("thorn counts must be given on exactly the base vertices")
        return self


class K33Pair(BaseModel):
    """A generalized K_{3,3} case with its P_3-isomorphism when known."""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    case: str
    g: Graph
    h: Graph
    tau: Optional[PkIsomorphism] = None
