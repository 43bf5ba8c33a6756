"""
Exception hierarchy shared by every path-graph module.

The CLI catches PathGraphError and prints the message verbatim, so messages
are written for a human reading a terminal.
"""


class PathGraphError(Exception):
    """Base class for all domain errors raised by the toolkit."""


class Graph6Error(PathGraphError, ValueError):
    """A graph6 token could not be decoded."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"graph6 byte {offset}: {message}")
        self.reason = message
        self.offset = offset


class UnsupportedSizeError(PathGraphError):
    """The graph is too large for the requested serialization."""


class GraphRangeError(PathGraphError, ValueError):
    """A generator parameter or vertex id is out of range."""


class StructuralError(PathGraphError):
    """A structural precondition (degree, adjacency, bijectivity) failed."""


class CertificateError(PathGraphError):
    """A claimed isomorphism is not an isomorphism."""


class InfeasibleThornsError(PathGraphError):
    """A thorn equation produced a value outside {0, 1}."""


class TypeExclusionError(PathGraphError):
    """A thorn case is excluded for the requested Whitney type."""


class UnsupportedCaseError(PathGraphError):
    """A generalized K_{3,3} case that is not constructed."""


class InflationConditionError(PathGraphError):
    """Diamond-inflation conditions on widths or thorn sums are violated."""


class ResourceLimitError(PathGraphError):
    """A request exceeds a configured size limit."""


class CanonicalizationBudgetError(PathGraphError):
    """The canonical-labeling search visited more nodes than allowed."""

    def __init__(self, budget: int, n: int):
        super().__init__(
            f"canonical labeling of a {n}-vertex graph exceeded the node budget of {budget}"
        )
        self.budget = budget
        self.n = n
