"""Exception hierarchy shared by all modules.

``UsageError`` signals a malformed request (CLI exit status 2); every other
``LneLabError`` is an analysis failure (exit status 1).
"""


class LneLabError(Exception):
    """Base class for all library errors."""


class UsageError(LneLabError, ValueError):
    """Malformed input or arguments: unknown variable, bad flag, bad shape."""


class ParseError(UsageError):
    """Syntax error in a curve expression."""

    def __init__(self, message: str, line: int, column: int, expected: tuple[str, ...] = ()):
        self.line = line
        self.column = column
        self.expected = tuple(expected)
        detail = f"{message} at line {line}, column {column}"
        if expected:
            detail += f"; expected one of: {', '.join(expected)}"
        super().__init__(detail)


class DegenerateInputError(LneLabError, ValueError):
    """An operation received a zero or constant polynomial where it needs more."""


class PreconditionError(LneLabError):
    """A documented precondition of an operation does not hold."""


class NonIsolatedSolutionsError(LneLabError):
    """A polynomial system has a positive-dimensional solution set."""


class RetryExhaustedError(LneLabError):
    """No admissible random shear was found within the attempt budget."""

    def __init__(self, message: str, attempts: int):
        self.attempts = attempts
        super().__init__(f"{message} (after {attempts} attempts)")


class ComponentAtInfinityError(LneLabError):
    """The chosen line is a component of the projective curve."""


class InconsistencyError(LneLabError):
    """Two computations that must agree do not (e.g. negative genus)."""


class TrackingError(LneLabError):
    """Numerical path tracking failed to separate fiber roots."""

    def __init__(self, message: str, x: complex | None = None):
        self.x = x
        if x is not None:
            message = f"{message} near x = {x:.6g}"
        super().__init__(message)


class ConsistencyError(LneLabError):
    """Monodromy permutations violate the product relation or Riemann-Hurwitz parity."""


class SamplingError(LneLabError):
    """Sampling produced no point of the curve inside the requested ball."""


class ResolutionError(LneLabError):
    """The sample graph is too coarse to represent a connected curve."""


class DomainError(LneLabError, ValueError):
    """Numerical input outside the domain of a fit (non-positive scales, ...)."""
