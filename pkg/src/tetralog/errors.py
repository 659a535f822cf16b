"""Exception types shared across the package."""


class TetralogError(Exception):
    """Base class for all package-specific errors."""


class DomainError(TetralogError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ConvergenceError(TetralogError, ArithmeticError):
    """An iterative evaluation failed to reach the requested tolerance."""


class QuadratureError(ConvergenceError):
    """A quadrature run could not certify the requested error bound."""


class PrecisionError(TetralogError, ArithmeticError):
    """Digit extraction aborted: a carry could not be resolved safely."""


class UnknownCheckError(TetralogError, KeyError):
    """A verification check id is not present in the ledger."""
