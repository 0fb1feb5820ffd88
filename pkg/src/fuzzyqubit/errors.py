"""Exception types raised across the package."""


class FuzzyQubitError(Exception):
    """Base class for all package errors."""


class ShapeError(FuzzyQubitError, ValueError):
    """Matrix or vector dimensions are incompatible."""


class DomainError(FuzzyQubitError, ValueError):
    """An argument lies outside the domain of the operation."""


class SizeLimitError(DomainError):
    """Requested dimension exceeds the supported maximum."""


class DegenerateStateError(DomainError):
    """The zero vector cannot be normalized into a state."""


class ConsistencyError(FuzzyQubitError, RuntimeError):
    """A numerical self-check failed after a computation."""
