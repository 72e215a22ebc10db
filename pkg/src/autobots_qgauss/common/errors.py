# ABOUTME: Exception hierarchy for every domain of the package.
# ABOUTME: All errors are ValueErrors so callers catching ValueError keep working.

from typing import Any


class QgError(ValueError):
    """Base class for all package errors."""


class ShapeError(QgError):
    """Matrix or tensor shapes do not fit together."""


class NotHermitianError(QgError):
    """A matrix expected to be hermitian is not, beyond tolerance."""

    def __init__(self, message: str, residual: float) -> None:
        super().__init__(message)
        self.residual = residual


class NotPositiveError(QgError):
    """A quadratic form expected to be positive semidefinite is not."""

    def __init__(self, message: str, min_eig: float) -> None:
        super().__init__(message)
        self.min_eig = min_eig


class AntiHermitianError(QgError):
    """A drift matrix is not anti-hermitian."""

    def __init__(self, message: str, residual: float) -> None:
        super().__init__(message)
        self.residual = residual


class BalanceError(QgError):
    """The balance condition sum L*L = sum LL* (equivalently M(W) = M(flip W)) fails."""

    def __init__(self, message: str, residual: float) -> None:
        super().__init__(message)
        self.residual = residual


class ExpansionLimitError(QgError):
    """An expansion would exceed the configured number of terms."""

    def __init__(self, size: int, guard: int) -> None:
        super().__init__(f"expansion of {size} terms exceeds the guard of {guard}")
        self.size = size
        self.guard = guard


class WordSyntaxError(QgError):
    """A word expression could not be parsed."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} at position {position}")
        self.position = position


class IndexRangeError(WordSyntaxError):
    """A letter index lies outside 1..N."""


class LetterKindError(WordSyntaxError):
    """A letter kind is not allowed for the target."""


class NotCenteredError(QgError):
    """An element expected to lie in the kernel of the counit does not."""

    def __init__(self, index: int, value: complex) -> None:
        super().__init__(f"element {index} has counit {value}, expected 0")
        self.index = index
        self.value = value


class TargetConditionError(QgError):
    """A spec does not satisfy the matrix conditions of a target."""

    def __init__(self, message: str, report: Any = None) -> None:
        super().__init__(message)
        self.report = report


class InvalidParameterError(QgError):
    """A scalar parameter is outside its admissible range."""


class DocumentError(QgError):
    """An input file could not be read or does not match its document schema."""


class UsageError(QgError):
    """A command was invoked without the inputs it needs."""
