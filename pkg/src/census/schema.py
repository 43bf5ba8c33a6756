from enum import Enum
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field


def drop_reasons(k: int) -> Tuple[str, ...]:
    """Report keys for dropped originals, in output order."""
    return (f"empty π_{k}", f"disconnected P_{k}-graph", "disconnected original", "duplicate original")


class VerdictStatus(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    INFO = "INFO"


class ClassEntry(BaseModel):
    """Originals sharing one canonical P_k-graph."""
    pk_canon: str = Field(..., description="Canonical graph6 of the P_k-graph")
    members: List[str] = Field(..., description="Sorted canonical graph6 of the originals")
    size: int


class Verdict(BaseModel):
    """Audit outcome; PASS/FAIL only for k = 3."""
    status: VerdictStatus
    multi_member_classes: List[str] = Field(default_factory=list, description="Keys of classes with >= 2 members")
    violations: List[str] = Field(default_factory=list, description="Keys of classes with >= 3 members")
    reason: str = ""


class CensusStats(BaseModel):
    """Counts reported next to the main filter."""
    population_size: int = 0
    no_isolated_pk: int = Field(0, description="Graphs whose P_k-graph has no isolated vertex")
    class_size_histogram: Dict[str, int] = Field(default_factory=dict)


class CensusReport(BaseModel):
    """Field order is the JSON output order."""
    k: int
    population: str
    classes: List[ClassEntry] = Field(default_factory=list)
    dropped: Dict[str, int] = Field(default_factory=dict, description="Drop reason -> count")
    skipped: List[str] = Field(default_factory=list, description="Inputs whose canonicalization hit the node budget")
    verdict: Optional[Verdict] = None
    stats: CensusStats = Field(default_factory=CensusStats)

    def to_json(self) -> str:
        return self.model_dump_json(indent=2) + "\n"


class ItemOutcome(BaseModel):
    """Per-graph result produced by a census worker."""
    token: str
    status: str = Field(..., description="'kept', 'skipped' or a drop reason")
    original_canon: Optional[str] = None
    pk_canon: Optional[str] = None
    no_isolated: bool = False
