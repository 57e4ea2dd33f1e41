"""Exception hierarchy shared by all hermsc modules."""


class HermscError(Exception):
    """Base class for every error raised by this package."""


class CapabilityError(HermscError, ValueError):
    """Degree or derivative order beyond the configured maximum."""


class InputError(HermscError, ValueError):
    """Malformed user input (non-finite samples, unknown ids, bad ranges)."""


class NumericalError(HermscError, ArithmeticError):
    """An iterative kernel failed to converge or a check on its output failed."""


class SingularMatrixError(NumericalError):
    """Exact pivot breakdown in a dense factorization."""


class SolvabilityError(NumericalError):
    """Collocation system is singular or too ill-conditioned to trust.

    ``cond`` carries the one-norm condition estimate (``inf`` for exact
    breakdown).
    """

    def __init__(self, message, cond=float("inf")):
        super().__init__(message)
        self.cond = cond


class ConditioningError(NumericalError):
    """Least-squares design matrix is numerically rank deficient."""

    def __init__(self, message, rank, columns):
        super().__init__(message)
        self.rank = rank
        self.columns = columns
