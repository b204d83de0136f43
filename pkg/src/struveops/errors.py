"""Exception types shared across the package.

Every failure the library signals deliberately derives from NumericsError and
carries a short ``kind`` tag so front ends (the CLI in particular) can report
the category without parsing messages.
"""


class NumericsError(Exception):
    """Base class for failures raised deliberately by this package."""

    kind = "numerics"


class PoleError(NumericsError):
    """Evaluation at a pole of the gamma function."""

    kind = "pole"


class ConvergenceError(NumericsError):
    """A series or quadrature failed to reach the requested accuracy."""

    kind = "convergence"


class DomainError(NumericsError):
    """Argument outside the region where an evaluation is defined."""

    kind = "domain"


class ParameterError(NumericsError, ValueError):
    """Rejected parameter combination (violated precondition)."""

    kind = "parameter"
