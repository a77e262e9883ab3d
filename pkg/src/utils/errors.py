"""Exception hierarchy shared by every analysis package."""

from typing import Optional


class RingAnalysisError(Exception):
    """Base class for all errors raised by the ring analysis library."""


class UnstableNode(RingAnalysisError):
    """Arrival rate reaches or exceeds the service rate of a node."""


class InvalidHopCount(RingAnalysisError):
    """A hop count outside [1, h_f] was requested for a flow."""


class NotAnInterferer(RingAnalysisError):
    """The flow does not share any node with the subpath of the flow of interest."""


class NotFeedforward(RingAnalysisError):
    """A tandem-only computation met an interferer entering through the source of the flow of interest."""


class DimensionMismatch(RingAnalysisError):
    """Matrix shapes are incompatible for the requested operation."""


class DegenerateRing(RingAnalysisError):
    """The ring has fewer nodes than the operation needs."""


class Infeasible(RingAnalysisError):
    """No finite bound exists for the analysed network."""


class UnstableSubpath(Infeasible):
    """Residual rate along a subpath is not positive."""


class SingularMatrix(Infeasible):
    """The linear system has no unique solution."""


class NegativeSolution(Infeasible):
    """The linear system solved to negative bursts or latencies."""


class Diverged(Infeasible):
    """The fixed-point iteration did not converge."""


class NetworkParseError(RingAnalysisError):
    """The network description could not be parsed."""


class NetworkValidationError(RingAnalysisError):
    """The network description is well formed but violates a model constraint."""

    def __init__(self, message: str, field: Optional[str] = None):
        super().__init__(message)
        self.field = field


class ReportWriteError(RingAnalysisError):
    """A report could not be written."""
