from typing import FrozenSet

from pydantic import BaseModel, ConfigDict, Field


class Bipartition(BaseModel):
    """Two-colouring of a bipartite graph; side_a holds vertex 0."""
    model_config = ConfigDict(frozen=True)

    side_a: FrozenSet[int] = Field(..., description="Side containing the smallest vertex of each component")
    side_b: FrozenSet[int] = Field(..., description="The other colour class")
