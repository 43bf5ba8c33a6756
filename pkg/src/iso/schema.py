from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from src.pathgraph.schema import PathK


class CanonicalForm(BaseModel):
    """Relabeling-invariant representative of a graph."""
    model_config = ConfigDict(frozen=True)

    canon_g6: str = Field(..., description="graph6 token of the canonically relabeled graph")
    relabeling: List[int] = Field(..., description="Original vertex -> canonical position")
    search_nodes: int = Field(default=0, description="Search-tree nodes visited")


class IsoCertificate(BaseModel):
    """A vertex bijection G -> H preserving adjacency both ways."""
    model_config = ConfigDict(frozen=True)

    mapping: List[int] = Field(..., description="Vertex v of G -> mapping[v] in H")


class PkIsomorphism(BaseModel):
    """A bijection pi_k(G) -> pi_k(H), keyed by normalized path."""
    model_config = ConfigDict(frozen=True)

    k: int = Field(..., ge=2)
    mapping: Dict[PathK, PathK] = Field(..., description="Normalized path of G -> normalized path of H")

    def pairs(self) -> List[Tuple[PathK, PathK]]:
        """Sorted (source, image) pairs for JSON output."""
        return sorted(self.mapping.items())


class PkVerification(BaseModel):
    """Outcome of checking a P_k-isomorphism against both path graphs."""
    ok: bool
    violation: Optional[Tuple[PathK, PathK]] = Field(None, description="First failing pair of G's paths")
    detail: Optional[str] = Field(None, description="Which direction of adjacency failed")
