"""Exception types shared across the package."""


class DiracBoundError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(DiracBoundError):
    """An input is outside the domain where the requested quantity is defined."""


class SingularEnergy(DiracBoundError):
    """The energy sits exactly on a branch point (|E| = mc^2) where the
    decay scale vanishes and the series ansatz breaks down."""


class RecursionInconsistent(DiracBoundError):
    """The two coupled recurrence relations disagree on a coefficient pair
    beyond tolerance. Signals a bookkeeping bug, not a physics result."""


class NoRoot(DiracBoundError):
    """The quantization residual has no sign change in the search bracket."""


class QuadratureFailure(DiracBoundError):
    """Adaptive quadrature did not reach the requested accuracy, or the
    normalization integral came out non-positive."""


class FitFailure(DiracBoundError):
    """A small-parameter fit left a residual incompatible with the assumed
    expansion order."""
