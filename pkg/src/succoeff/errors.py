"""Exception types shared across the package."""


class SuccoeffError(Exception):
    """Base class for all package errors."""


class OrderMismatchError(SuccoeffError, ValueError):
    """Two truncated series with different truncation orders were combined."""


class DomainError(SuccoeffError, ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class DegenerateError(SuccoeffError, ValueError):
    """The requested representation collapses to fewer atoms than asked for."""


class InfeasibleError(SuccoeffError, RuntimeError):
    """No representation satisfies the moment conditions within tolerance."""


class EvaluationError(SuccoeffError, ArithmeticError):
    """A sampled evaluation hit a zero of f or f' and cannot be trusted."""
