# ABOUTME: Matrix conditions on (L_1..L_d, H) under which a Gaussian functional descends to a target.
# ABOUTME: Pure matrix arithmetic; every condition is reported with its residual.

from collections.abc import Sequence

import numpy as np

from autobots_qgauss.common.errors import ShapeError
from autobots_qgauss.common.tools.validation_tools import (
    ConditionResult,
    check,
    diagonal_residual,
    imaginary_residual,
    max_abs,
    scalar_residual,
    worst,
)
from autobots_qgauss.domains.kernel.services import ComplexMatrix, TensorOperator, flip
from autobots_qgauss.domains.targets.groups import GroupTarget, TargetKind


def _orthogonal(kraus: Sequence[ComplexMatrix], h: ComplexMatrix, tol: float) -> list[ConditionResult]:
    n = h.shape[0]
    conj_sum = sum((k.conj() @ k for k in kraus), np.zeros((n, n), dtype=np.complex128))
    return [
        check("l_antisymmetric", worst(max_abs(k + k.T) for k in kraus), tol),
        check("sum_conj_l_l_real", imaginary_residual(conj_sum), tol),
        check("h_real", imaginary_residual(h), tol),
        check("h_antisymmetric", max_abs(h + h.T), tol),
    ]


def _symplectic(
    kraus: Sequence[ComplexMatrix], h: ComplexMatrix, target: GroupTarget, tol: float
) -> list[ConditionResult]:
    j = target.j
    dim = target.dim
    m = sum((k @ k.conj().T for k in kraus), np.zeros((dim, dim), dtype=np.complex128))
    return [
        check("l_symplectic", worst(max_abs(k.T - j @ k @ j) for k in kraus), tol),
        check("m_symplectic", max_abs(j @ m @ j + m.T), tol),
        check("h_symplectic", max_abs(j @ h @ j - h.T), tol),
    ]


def _classical(kraus: Sequence[ComplexMatrix], n: int, tol: float) -> list[ConditionResult]:
    w = TensorOperator.from_kraus(kraus, n)
    return [check("w_flip_symmetric", max_abs(w.w - flip(w).w), tol)]


def target_conditions(
    kraus: Sequence[ComplexMatrix], h: ComplexMatrix, target: GroupTarget, tol: float
) -> list[ConditionResult]:
    """Conditions on (L, H) beyond the base ones; empty for u_plus.

    Raises:
        ShapeError: If the matrices do not have the target's size.
    """
    dim = target.dim
    if h.shape != (dim, dim) or any(k.shape != (dim, dim) for k in kraus):
        raise ShapeError(f"matrices must be {dim}×{dim} for target {target}")

    match target.kind:
        case TargetKind.U_PLUS:
            return []
        case TargetKind.O_PLUS:
            return _orthogonal(kraus, h, tol)
        case TargetKind.SP_PLUS:
            return _symplectic(kraus, h, target, tol)
        case TargetKind.U_CLASSICAL:
            return _classical(kraus, dim, tol)
        case TargetKind.TORUS:
            return [
                check("l_scalar", worst(scalar_residual(k) for k in kraus), tol),
                check("h_scalar", scalar_residual(h), tol),
            ]
        case TargetKind.FREE_GROUP:
            return [
                check("l_diagonal", worst(diagonal_residual(k) for k in kraus), tol),
                check("h_diagonal", diagonal_residual(h), tol),
            ]
