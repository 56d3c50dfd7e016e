class ApproximationError(Exception):
    """Base class for errors raised by the fitting and benchmark services"""


class InvalidInputError(ApproximationError, ValueError):
    """Input violates an operation's preconditions"""


class DegenerateFitError(ApproximationError):
    """Fit cannot be formed, e.g. a pole sits on a support point"""


class NonResolvableError(ApproximationError):
    """Chebyshev conversion did not converge within the point budget"""


class ExportError(ApproximationError):
    """Result file could not be written"""
