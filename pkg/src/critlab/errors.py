"""Exception hierarchy shared by all critlab modules."""


class CritlabError(Exception):
    """Base class for all critlab errors."""


class InvalidDimensionError(CritlabError):
    """Matrix or sample dimension violates a precondition (e.g. n = 0, odd symplectic size)."""


class ContractViolationError(CritlabError):
    """Input fails a documented contract (non-Hermitian input, membership residual too large, ...)."""


class NumericFailureError(CritlabError):
    """A numerical kernel failed to converge or produced invalid output."""

    def __init__(self, message, dim=None):
        super().__init__(message)
        self.dim = dim


class DegenerateResultError(CritlabError):
    """The requested result is degenerate (degree-1 polynomial has no critical points, ...)."""


class PoleProximityError(CritlabError):
    """Evaluation point is too close to a pole for a meaningful floating-point result."""
