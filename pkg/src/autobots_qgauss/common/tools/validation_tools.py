# ABOUTME: Common validation tools - shared residual checks for matrices across all domains.
# ABOUTME: Each check returns a ConditionResult so reports can list name, verdict and residual.

from collections.abc import Iterable
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

ComplexArray = npt.NDArray[np.complex128]


@dataclass(frozen=True)
class ConditionResult:
    """Outcome of one numerical check."""

    name: str
    passed: bool
    residual: float

    def as_dict(self) -> dict[str, object]:
        return {"name": self.name, "passed": self.passed, "residual": self.residual}


def max_abs(array: npt.ArrayLike) -> float:
    """Largest entry modulus; 0 for empty input."""
    arr = np.asarray(array)
    if arr.size == 0:
        return 0.0
    return float(np.max(np.abs(arr)))


def check(name: str, residual: float, tol: float) -> ConditionResult:
    return ConditionResult(name=name, passed=residual <= tol, residual=residual)


def hermitian_residual(matrix: ComplexArray) -> float:
    """max |A - A*|"""
    return max_abs(matrix - matrix.conj().T)


def anti_hermitian_residual(matrix: ComplexArray) -> float:
    """max |A + A*|"""
    return max_abs(matrix + matrix.conj().T)


def imaginary_residual(matrix: npt.ArrayLike) -> float:
    """max |Im A|, used for real-valuedness checks."""
    return max_abs(np.imag(np.asarray(matrix)))


def scalar_residual(matrix: ComplexArray) -> float:
    """Distance of a square matrix from the multiples of the identity."""
    n = matrix.shape[0]
    if n == 0:
        return 0.0
    return max_abs(matrix - (np.trace(matrix) / n) * np.eye(n))


def diagonal_residual(matrix: ComplexArray) -> float:
    """Largest off-diagonal entry modulus."""
    return max_abs(matrix - np.diag(np.diag(matrix)))


def worst(residuals: Iterable[float]) -> float:
    """Largest residual of a family; 0 for an empty family."""
    return max(residuals, default=0.0)
