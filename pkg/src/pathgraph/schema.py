from enum import Enum
from typing import Dict, List, Tuple

from pydantic import BaseModel, ConfigDict, Field, computed_field

from src.graph_core.graph import Graph

# A k-vertex path of a host graph, stored in normalized orientation
# (the tuple is lexicographically smaller than its reverse).
PathK = Tuple[int, ...]


class PathGraphResult(BaseModel):
    """P_k(G) together with the path behind each of its vertices."""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    k: int = Field(..., ge=2, description="Number of vertices per path")
    pgraph: Graph = Field(..., description="The path graph over indices 0..|pi_k|-1")
    labels: List[PathK] = Field(default_factory=list, description="Index -> normalized host path")

    def index(self) -> Dict[PathK, int]:
        """Normalized path -> vertex index of pgraph."""
        return {path: i for i, path in enumerate(self.labels)}


class Thorn(BaseModel):
    """A P_3 with one or two ends of host degree 1."""
    model_config = ConfigDict(frozen=True)

    path: PathK = Field(..., description="Normalized P_3")
    grade: int = Field(..., ge=1, le=2, description="Number of terminal ends")


class Diamond(BaseModel):
    """D_{a,b}: the degree-2 vertices whose neighbourhood is exactly {a, b}."""
    model_config = ConfigDict(frozen=True)

    end_a: int = Field(..., description="Smaller end vertex")
    end_b: int = Field(..., description="Larger end vertex")
    middles: Tuple[int, ...] = Field(..., min_length=1, description="Middle vertices, sorted")
    braced: bool = Field(default=False, description="Whether end_a ~ end_b in the host")

    @computed_field
    @property
    def width(self) -> int:
        return len(self.middles)


class SwapKind(str, Enum):
    """The three elementary P_3-automorphism swaps."""
    B = "B"
    S = "S"
    D = "D"


class SwapPermutation(BaseModel):
    """An involution of pi_3(G) exchanging two paths and fixing the rest."""
    model_config = ConfigDict(frozen=True)

    kind: SwapKind
    support: Tuple[PathK, PathK] = Field(..., description="The two exchanged paths")
    mapping: List[int] = Field(..., description="Index i of enumerate_paths(G, 3) -> image index")
