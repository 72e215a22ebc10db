# ABOUTME: Kernel services - dense complex matrices and operators W in M_n ⊗ M_n.
# ABOUTME: Multiplication map, flip, Choi form, PSD check, Kraus extraction and the map Psi_W.

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from autobots_qgauss.common.errors import NotHermitianError, NotPositiveError, ShapeError
from autobots_qgauss.common.observability import get_logger
from autobots_qgauss.common.tools.validation_tools import hermitian_residual, max_abs

logger = get_logger(__name__)

ComplexMatrix = npt.NDArray[np.complex128]

DEFAULT_TOL = 1e-9


def as_matrix(data: npt.ArrayLike, shape: tuple[int, int] | None = None) -> ComplexMatrix:
    """Read-only complex128 copy of a 2-d array, optionally checked against a shape."""
    arr = np.array(data, dtype=np.complex128)
    if arr.ndim != 2:
        raise ShapeError(f"expected a matrix, got an array of dimension {arr.ndim}")
    if shape is not None and arr.shape != shape:
        raise ShapeError(f"expected shape {shape}, got {arr.shape}")
    arr.flags.writeable = False
    return arr


def adjoint(matrix: ComplexMatrix) -> ComplexMatrix:
    return as_matrix(matrix.conj().T)


def transpose(matrix: ComplexMatrix) -> ComplexMatrix:
    return as_matrix(matrix.T)


def matrix_unit(n: int, i: int, j: int) -> ComplexMatrix:
    """e_ij with 1-based indices."""
    e = np.zeros((n, n), dtype=np.complex128)
    e[i - 1, j - 1] = 1.0
    return as_matrix(e)


@dataclass(frozen=True, eq=False)
class TensorOperator:
    """W = Σ w[a][b][c][d] e_ab ⊗ e_cd, stored by its basis coefficients only.

    Every matrix-entry convention used elsewhere is a view derived from `w`.
    """

    w: npt.NDArray[np.complex128]

    def __post_init__(self) -> None:
        arr = np.array(self.w, dtype=np.complex128)
        if arr.ndim != 4 or len(set(arr.shape)) != 1:
            raise ShapeError(f"expected an n×n×n×n coefficient table, got shape {arr.shape}")
        arr.flags.writeable = False
        object.__setattr__(self, "w", arr)

    @property
    def n(self) -> int:
        return self.w.shape[0]

    @classmethod
    def zeros(cls, n: int) -> "TensorOperator":
        return cls(np.zeros((n, n, n, n), dtype=np.complex128))

    @classmethod
    def rank_one(cls, a: npt.ArrayLike, b: npt.ArrayLike) -> "TensorOperator":
        """A ⊗ B, i.e. w[a][b][c][d] = A_ab · B_cd."""
        left, right = np.asarray(a, dtype=np.complex128), np.asarray(b, dtype=np.complex128)
        if left.shape != right.shape or left.shape[0] != left.shape[1]:
            raise ShapeError(f"rank-one factors must be square of equal size: {left.shape}, {right.shape}")
        return cls(np.einsum("ab,cd->abcd", left, right))

    @classmethod
    def from_kraus(cls, kraus: Sequence[npt.ArrayLike], n: int | None = None) -> "TensorOperator":
        """Σ_r L_r ⊗ L_r*; `n` is required when the family is empty."""
        mats = [np.asarray(k, dtype=np.complex128) for k in kraus]
        if not mats:
            if n is None:
                raise ShapeError("the size n is required for an empty Kraus family")
            return cls.zeros(n)
        size = mats[0].shape[0]
        if any(m.shape != (size, size) for m in mats) or (n is not None and n != size):
            raise ShapeError("Kraus operators must be square matrices of one common size")
        w = sum(np.einsum("ab,cd->abcd", m, m.conj().T) for m in mats)
        return cls(np.asarray(w))

    def __add__(self, other: "TensorOperator") -> "TensorOperator":
        return TensorOperator(self.w + other.w)

    def __sub__(self, other: "TensorOperator") -> "TensorOperator":
        return TensorOperator(self.w - other.w)

    def allclose(self, other: "TensorOperator", atol: float = 1e-10) -> bool:
        return self.n == other.n and max_abs(self.w - other.w) <= atol


def mult_map(op: TensorOperator) -> ComplexMatrix:
    """M(W)[a][d] = Σ_b w[a][b][b][d]; M(A ⊗ B) = AB."""
    return as_matrix(np.einsum("abbd->ad", op.w))


def flip(op: TensorOperator) -> TensorOperator:
    """Σ(W)[a][b][c][d] = w[c][d][a][b]."""
    return TensorOperator(np.transpose(op.w, (2, 3, 0, 1)))


def choi_form(op: TensorOperator) -> ComplexMatrix:
    """Quadratic form Q[(i,k)][(j,l)] = w[k][i][j][l], row (i,k) ↦ (i-1)n + k.

    For W = Σ L_r ⊗ L_r* this is Σ v_r v_r* with v_r[(i,k)] = (L_r)[k][i].
    """
    n = op.n
    q = np.einsum("kijl->ikjl", op.w).reshape(n * n, n * n)
    return as_matrix(q)


def _hermitian_part(q: ComplexMatrix, tol: float) -> ComplexMatrix:
    residual = hermitian_residual(q)
    if residual > tol:
        raise NotHermitianError(
            f"quadratic form is not hermitian (residual {residual:.3e} > tol {tol:.1e})",
            residual,
        )
    return (q + q.conj().T) / 2


def psd_check(q: ComplexMatrix, tol: float = DEFAULT_TOL) -> tuple[bool, float]:
    """(min eigenvalue ≥ -tol, min eigenvalue) for a hermitian matrix.

    Raises:
        NotHermitianError: If Q is not hermitian within tol.
    """
    if q.shape[0] == 0:
        return True, 0.0
    eigvals = np.linalg.eigvalsh(_hermitian_part(q, tol))
    min_eig = float(eigvals[0])
    return min_eig >= -tol, min_eig


def _normalize_phase(vec: npt.NDArray[np.complex128], tol: float) -> npt.NDArray[np.complex128]:
    """Rotate so that the first non-negligible component is real and positive."""
    for c in vec:
        if abs(c) > tol:
            return vec * (abs(c) / c)
    return vec


def _sort_key(item: tuple[float, npt.NDArray[np.complex128]]) -> tuple[float, ...]:
    eigval, vec = item
    parts: list[float] = [-round(eigval, 12)]
    for c in vec:
        parts.extend((round(float(c.real), 12), round(float(c.imag), 12)))
    return tuple(parts)


def eigen_decomposition(
    q: ComplexMatrix, tol: float = DEFAULT_TOL
) -> list[tuple[float, npt.NDArray[np.complex128]]]:
    """Deterministic eigenpairs of a hermitian matrix.

    Ordered by descending eigenvalue, ties broken lexicographically on the
    phase-normalized eigenvector.
    """
    eigvals, eigvecs = np.linalg.eigh(_hermitian_part(q, tol))
    pairs = [
        (float(eigvals[s]), _normalize_phase(eigvecs[:, s], tol)) for s in range(len(eigvals))
    ]
    return sorted(pairs, key=_sort_key)


def kraus_extract(op: TensorOperator, tol: float = DEFAULT_TOL) -> list[ComplexMatrix]:
    """L_1..L_d with Σ L_s ⊗ L_s* = W, d the numerical rank of the Choi form.

    (L_s)[k][i] = sqrt(λ_s)·y_s[(i,k)]; eigenvalues ≤ tol·max(λ_max, 1) are dropped.

    Raises:
        NotPositiveError: If the Choi form is not PSD within tol.
    """
    n = op.n
    q = choi_form(op)
    ok, min_eig = psd_check(q, tol)
    if not ok:
        raise NotPositiveError(
            f"Choi form is not positive semidefinite (min eigenvalue {min_eig:.3e})", min_eig
        )
    pairs = eigen_decomposition(q, tol)
    top = max((lam for lam, _ in pairs), default=0.0)
    cutoff = tol * max(top, 1.0)
    kraus: list[ComplexMatrix] = []
    for lam, vec in pairs:
        if lam <= cutoff:
            continue
        # vec is indexed by (i,k); L[k][i] needs the transpose of the reshaped vector
        kraus.append(as_matrix(np.sqrt(lam) * vec.reshape(n, n).T))
    logger.debug(f"kraus_extract: n={n} rank={len(kraus)} min_eig={min_eig:.3e}")
    return kraus


def apply_cp_map(op: TensorOperator, z: npt.ArrayLike) -> ComplexMatrix:
    """Ψ_W(Z)[a][d] = Σ_{b,c} w[a][b][c][d] Z[b][c]; Ψ_{A⊗B}(Z) = AZB."""
    zz = np.asarray(z, dtype=np.complex128)
    if zz.shape != (op.n, op.n):
        raise ShapeError(f"expected a {op.n}×{op.n} matrix, got {zz.shape}")
    return as_matrix(np.einsum("abcd,bc->ad", op.w, zz))


def unital_balance(op: TensorOperator) -> float:
    """max |Ψ_W(I) - Ψ_{Σ(W)}(I)|, zero exactly when M(W) = M(Σ(W))."""
    eye = np.eye(op.n)
    return max_abs(apply_cp_map(op, eye) - apply_cp_map(flip(op), eye))
