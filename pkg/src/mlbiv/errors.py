"""Exception hierarchy.

The CLI maps these onto exit codes: domain/precondition violations
(including branch-cut and grid problems) exit with 2, convergence
failures with 3.
"""


class MlbivError(Exception):
    """Base class for all library errors."""


class DomainError(MlbivError, ValueError):
    """A parameter or argument violates an operation's precondition."""


class PoleError(DomainError):
    """log-gamma requested at a non-positive integer."""


class BranchError(DomainError):
    """A fractional power would be evaluated on or across its branch cut."""


class GridError(DomainError):
    """Sampled-function grids are malformed, mismatched, or too coarse."""


class TailError(DomainError):
    """Truncating an infinite integral would discard a non-negligible tail."""


class NonConvergenceError(MlbivError, RuntimeError):
    """An adaptive summation or quadrature failed to meet its tolerance."""

    def __init__(self, message, value=None, err_estimate=None, steps=None):
        super().__init__(message)
        self.value = value
        self.err_estimate = err_estimate
        self.steps = steps
