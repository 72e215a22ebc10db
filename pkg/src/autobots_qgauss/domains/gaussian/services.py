# ABOUTME: Gaussian services - classification data (L_r, H) and (W, H), validation and cooking.
# ABOUTME: Evaluates φ, η and the coboundary of a Gaussian functional on arbitrary elements.

from collections.abc import Sequence
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
import numpy.typing as npt

from autobots_qgauss.common.errors import (
    AntiHermitianError,
    BalanceError,
    InvalidParameterError,
    NotCenteredError,
    NotPositiveError,
    ShapeError,
    TargetConditionError,
)
from autobots_qgauss.common.observability import get_logger
from autobots_qgauss.common.tools.validation_tools import (
    ConditionResult,
    anti_hermitian_residual,
    check,
    max_abs,
)
from autobots_qgauss.configs.settings import get_app_settings
from autobots_qgauss.domains.kernel.services import (
    ComplexMatrix,
    TensorOperator,
    as_matrix,
    choi_form,
    flip,
    kraus_extract,
    mult_map,
    psd_check,
    unital_balance,
)
from autobots_qgauss.domains.targets.conditions import target_conditions
from autobots_qgauss.domains.targets.groups import GroupTarget, TargetKind
from autobots_qgauss.domains.words.services import (
    Element,
    Letter,
    Word,
    counit,
    generators,
    group_generators,
    star,
)

logger = get_logger(__name__)

Vector = npt.NDArray[np.complex128]


def _resolve_tol(tol: float | None) -> float:
    return get_app_settings().tol if tol is None else tol


@dataclass(frozen=True, eq=False)
class GaussianSpec:
    """(target, L_1..L_d, H): the data classifying a Gaussian functional.

    Matrices are dim×dim with dim = N (2N for sp_plus). The L_r need not be
    linearly independent; see `canonical_spec`.
    """

    target: GroupTarget
    kraus: tuple[ComplexMatrix, ...]
    h: ComplexMatrix

    def __post_init__(self) -> None:
        dim = self.target.dim
        kraus = tuple(as_matrix(k) for k in self.kraus)
        h = as_matrix(self.h)
        if h.shape != (dim, dim):
            raise ShapeError(f"H must be {dim}×{dim} for target {self.target}, got {h.shape}")
        for r, k in enumerate(kraus, start=1):
            if k.shape != (dim, dim):
                raise ShapeError(f"L_{r} must be {dim}×{dim} for target {self.target}, got {k.shape}")
        object.__setattr__(self, "kraus", kraus)
        object.__setattr__(self, "h", h)

    @classmethod
    def create(
        cls, target: GroupTarget, kraus: Sequence[npt.ArrayLike], h: npt.ArrayLike | None = None
    ) -> "GaussianSpec":
        matrices = tuple(as_matrix(k) for k in kraus)
        if h is None:
            h = np.zeros((target.dim, target.dim), dtype=np.complex128)
        return cls(target, matrices, as_matrix(h))

    @property
    def n(self) -> int:
        return self.target.n

    @property
    def dim(self) -> int:
        return self.target.dim

    @property
    def d(self) -> int:
        return len(self.kraus)

    def diffusion(self) -> TensorOperator:
        """W = Σ_r L_r ⊗ L_r*."""
        return TensorOperator.from_kraus(self.kraus, self.dim)

    def sum_lstar_l(self) -> ComplexMatrix:
        """Σ_r L_r* L_r, the matrix behind the diffusion part on generators."""
        zero = np.zeros((self.dim, self.dim), dtype=np.complex128)
        return as_matrix(sum((k.conj().T @ k for k in self.kraus), zero))

    def sum_l_lstar(self) -> ComplexMatrix:
        zero = np.zeros((self.dim, self.dim), dtype=np.complex128)
        return as_matrix(sum((k @ k.conj().T for k in self.kraus), zero))


@dataclass(frozen=True)
class ValidationReport:
    target: GroupTarget
    base: list[ConditionResult]
    target_checks: list[ConditionResult]
    rank: int
    independent: bool

    @property
    def base_passed(self) -> bool:
        return all(c.passed for c in self.base)

    @property
    def passed(self) -> bool:
        return self.base_passed and all(c.passed for c in self.target_checks)

    def as_dict(self) -> dict[str, object]:
        return {
            "target": self.target.kind.value,
            "n": self.target.n,
            "passed": self.passed,
            "base": [c.as_dict() for c in self.base],
            "target_conditions": [c.as_dict() for c in self.target_checks],
            "rank": self.rank,
            "independent": self.independent,
        }


def _balance_residual(spec: GaussianSpec) -> float:
    # B = (Σ L L*)^t and B~ = Σ L* L, so |B - B~^t| = |Σ L L* - Σ L* L|
    b = spec.sum_l_lstar().T
    b_tilde = spec.sum_lstar_l()
    return max_abs(b - b_tilde.T)


def numerical_rank(kraus: Sequence[ComplexMatrix], tol: float) -> int:
    if not kraus:
        return 0
    stacked = np.stack([np.asarray(k).ravel() for k in kraus])
    sv = np.linalg.svd(stacked, compute_uv=False)
    return int(np.sum(sv > tol * max(float(sv[0]), 1.0)))


def validate(spec: GaussianSpec, tol: float | None = None) -> ValidationReport:
    """Base conditions (H anti-hermitian, Σ L*L = Σ LL*) plus the target's conditions."""
    tol = _resolve_tol(tol)
    base = [
        check("h_anti_hermitian", anti_hermitian_residual(spec.h), tol),
        check("balance", _balance_residual(spec), tol),
        check("cp_unital_balance", unital_balance(spec.diffusion()), tol),
    ]
    rank = numerical_rank(spec.kraus, tol)
    report = ValidationReport(
        target=spec.target,
        base=base,
        target_checks=target_conditions(spec.kraus, spec.h, spec.target, tol),
        rank=rank,
        independent=rank == spec.d,
    )
    logger.debug(f"validate {spec.target}: d={spec.d} rank={rank} passed={report.passed}")
    return report


@dataclass(frozen=True, eq=False)
class CookedFunctional:
    """Evaluation tables of a Gaussian functional φ with cocycle η.

    Tables cover every fundamental letter of the ambient size (u_ij and u_ij*),
    plus g_i^{±1} on the free-group target. `pair[a, b]` is ∂φ(a ⊗ b).
    """

    spec: GaussianSpec
    letters: tuple[Letter, ...]
    first_order: Vector
    eta: npt.NDArray[np.complex128]
    pair: npt.NDArray[np.complex128]
    index: dict[Letter, int] = field(repr=False)

    @property
    def d(self) -> int:
        return self.eta.shape[1]

    def _position(self, letter: Letter) -> int:
        try:
            return self.index[letter]
        except KeyError:
            raise InvalidParameterError(
                f"letter {letter} is outside the tables of target {self.spec.target}"
            ) from None

    def phi(self, letter: Letter) -> complex:
        return complex(self.first_order[self._position(letter)])

    def eta_of(self, letter: Letter) -> Vector:
        return self.eta[self._position(letter)]

    def pair_kernel(self, a: Letter, b: Letter) -> complex:
        return complex(self.pair[self._position(a), self._position(b)])

    def first_order_matrix(self, starred: bool = False) -> ComplexMatrix:
        """[φ(u_ij)] (or [φ(u_ij*)]) as a dim×dim matrix."""
        dim = self.spec.dim
        out = np.empty((dim, dim), dtype=np.complex128)
        for i in range(1, dim + 1):
            for j in range(1, dim + 1):
                out[i - 1, j - 1] = self.phi(Letter.u(i, j, starred))
        return as_matrix(out)


def cook(spec: GaussianSpec, tol: float | None = None) -> CookedFunctional:
    """Build the evaluation tables of the functional classified by `spec`.

    φ(u_ij) = -½(Σ L*L)_ij + H_ij, φ(u_ij*) = conj φ(u_ij), η(u_ij) = ((L_r)_ij)_r,
    η(u_ij*) = -((L_r)_ji)_r, ∂φ(a ⊗ b) = ⟨η(a*), η(b)⟩. H is replaced by its
    anti-hermitian part.

    Raises:
        BalanceError: If Σ L*L ≠ Σ LL* beyond tol.
    """
    tol = _resolve_tol(tol)
    residual = _balance_residual(spec)
    if residual > tol:
        raise BalanceError(
            f"sum L*L differs from sum LL* (residual {residual:.3e} > tol {tol:.1e})", residual
        )
    h_residual = anti_hermitian_residual(spec.h)
    if h_residual > tol:
        logger.warning(f"H is not anti-hermitian (residual {h_residual:.3e}); using (H - H*)/2")
    h = (spec.h - spec.h.conj().T) / 2
    m = spec.sum_lstar_l()
    dim, d = spec.dim, spec.d
    stack = np.stack(spec.kraus) if d else np.zeros((0, dim, dim), dtype=np.complex128)

    letters: list[Letter] = generators(dim)
    if spec.target.is_free_group:
        letters += group_generators(spec.n)
    index = {letter: pos for pos, letter in enumerate(letters)}

    first_order = np.empty(len(letters), dtype=np.complex128)
    eta = np.zeros((len(letters), d), dtype=np.complex128)
    for pos, letter in enumerate(letters):
        i, j = letter.i - 1, letter.j - 1
        if letter.is_group:
            v = stack[:, i, i]
            value = h[i, i] - 0.5 * np.vdot(v, v)
            first_order[pos] = np.conj(value) if letter.starred else value
            eta[pos] = -v if letter.starred else v
        elif letter.starred:
            first_order[pos] = np.conj(-0.5 * m[i, j] + h[i, j])
            eta[pos] = -stack[:, j, i]
        else:
            first_order[pos] = -0.5 * m[i, j] + h[i, j]
            eta[pos] = stack[:, i, j]

    starred_rows = eta[[index[letter.star()] for letter in letters]]
    pair = starred_rows.conj() @ eta.T
    logger.debug(f"cooked {spec.target}: {len(letters)} letters, d={d}")
    return CookedFunctional(
        spec=spec,
        letters=tuple(letters),
        first_order=first_order,
        eta=eta,
        pair=pair,
        index=index,
    )


def _word_phi(f: CookedFunctional, word: Word) -> complex:
    """Σ_a Π_{b≠a} ε·φ(g_a) + Σ_{a<b} Π_{c≠a,b} ε·∂φ(g_a ⊗ g_b); counits are 0 or 1."""
    kernel = [pos for pos, letter in enumerate(word) if letter.counit() == 0]
    if len(kernel) > 2:
        return 0j
    if len(kernel) == 2:
        a, b = kernel
        return f.pair_kernel(word[a], word[b])
    if len(kernel) == 1:
        a = kernel[0]
        total = f.phi(word[a])
        for b in range(len(word)):
            if b < a:
                total += f.pair_kernel(word[b], word[a])
            elif b > a:
                total += f.pair_kernel(word[a], word[b])
        return total
    total = sum((f.phi(letter) for letter in word), 0j)
    for a in range(len(word)):
        for b in range(a + 1, len(word)):
            total += f.pair_kernel(word[a], word[b])
    return total


def eval_phi(f: CookedFunctional, x: Element) -> complex:
    """φ(x) by the closed pair formula; φ(1) = 0."""
    return sum((c * _word_phi(f, w) for w, c in x.items()), 0j)


def eval_phi_recursive(f: CookedFunctional, x: Element) -> complex:
    """φ(x) by the three-factor recursion for functionals vanishing on K_3.

    φ(abc) = ε(c)φ(ab) + ε(b)φ(ac) + ε(a)φ(bc) - ε(b)ε(c)φ(a) - ε(a)ε(c)φ(b) - ε(a)ε(b)φ(c),
    with a, b single letters and c the rest of the word.
    """

    @lru_cache(maxsize=None)
    def rec(word: Word) -> complex:
        if not word:
            return 0j
        if len(word) == 1:
            return f.phi(word[0])
        eps = [letter.counit() for letter in word]
        if len(word) == 2:
            a, b = word
            return eps[0] * f.phi(b) + f.phi(a) * eps[1] + f.pair_kernel(a, b)
        a, b, c = word[:1], word[1:2], word[2:]
        ea, eb = eps[0], eps[1]
        ec = int(np.prod(eps[2:]))
        return (
            ec * rec(a + b)
            + eb * rec(a + c)
            + ea * rec(b + c)
            - eb * ec * rec(a)
            - ea * ec * rec(b)
            - ea * eb * rec(c)
        )

    return sum((coeff * rec(w) for w, coeff in x.items()), 0j)


def eval_eta(f: CookedFunctional, x: Element) -> Vector:
    """η(x) with η(g_1…g_n) = Σ_a Π_{b≠a} ε(g_b)·η(g_a)."""
    total = np.zeros(f.d, dtype=np.complex128)
    for word, c in x.items():
        kernel = [pos for pos, letter in enumerate(word) if letter.counit() == 0]
        if len(kernel) > 1:
            continue
        if kernel:
            total += c * f.eta_of(word[kernel[0]])
        else:
            for letter in word:
                total += c * f.eta_of(letter)
    return total


def coboundary(f: CookedFunctional, a: Element, b: Element) -> complex:
    """∂φ(a ⊗ b) = φ(ab) - ε(a)φ(b) - φ(a)ε(b)."""
    return eval_phi(f, a * b) - counit(a) * eval_phi(f, b) - eval_phi(f, a) * counit(b)


def from_WH(
    w: TensorOperator, h: npt.ArrayLike, target: GroupTarget, tol: float | None = None
) -> GaussianSpec:
    """The spec of the Gaussian functional with diffusion W and drift H.

    Raises:
        AntiHermitianError: If H ≠ -H*.
        BalanceError: If M(W) ≠ M(Σ(W)).
        NotHermitianError: If the Choi form of W is not hermitian.
        NotPositiveError: If the Choi form of W is not positive semidefinite.
        TargetConditionError: If the extracted spec fails the target's conditions.
    """
    tol = _resolve_tol(tol)
    hh = as_matrix(h, (target.dim, target.dim))
    if w.n != target.dim:
        raise ShapeError(f"W must act on size {target.dim} for target {target}, got {w.n}")

    h_residual = anti_hermitian_residual(hh)
    if h_residual > tol:
        raise AntiHermitianError(f"H is not anti-hermitian (residual {h_residual:.3e})", h_residual)
    balance = max_abs(mult_map(w) - mult_map(flip(w)))
    if balance > tol:
        raise BalanceError(f"M(W) differs from M(flip(W)) (residual {balance:.3e})", balance)
    ok, min_eig = psd_check(choi_form(w), tol)
    if not ok:
        raise NotPositiveError(f"Choi form of W is not PSD (min eigenvalue {min_eig:.3e})", min_eig)

    spec = GaussianSpec(target, tuple(kraus_extract(w, tol)), hh)
    report = validate(spec, tol)
    if not report.passed:
        failed = [c.name for c in report.base + report.target_checks if not c.passed]
        raise TargetConditionError(f"(W, H) fails the {target.kind} conditions: {failed}", report)
    return spec


def to_WH(spec: GaussianSpec, tol: float | None = None) -> tuple[TensorOperator, ComplexMatrix]:
    """(W, H) with W = Σ L ⊗ L* and H_ij = ½(φ(u_ij) - φ(u_ji*))."""
    f = cook(spec, tol)
    dim = spec.dim
    h = np.empty((dim, dim), dtype=np.complex128)
    for i in range(1, dim + 1):
        for j in range(1, dim + 1):
            h[i - 1, j - 1] = 0.5 * (f.phi(Letter.u(i, j)) - f.phi(Letter.u(j, i, True)))
    return spec.diffusion(), as_matrix(h)


def canonical_spec(spec: GaussianSpec, tol: float | None = None) -> GaussianSpec:
    """Same functional with linearly independent L_r, via (W, H)."""
    w, h = to_WH(spec, tol)
    return from_WH(w, h, spec.target, tol)


def gram(f: CookedFunctional, elems: Sequence[Element], tol: float | None = None) -> ComplexMatrix:
    """G[m][n] = φ(e_m* e_n) for e_m in ker ε.

    Raises:
        NotCenteredError: If some ε(e_m) ≠ 0.
    """
    tol = _resolve_tol(tol)
    for index, e in enumerate(elems):
        value = counit(e)
        if abs(value) > tol:
            raise NotCenteredError(index, value)
    size = len(elems)
    g = np.zeros((size, size), dtype=np.complex128)
    starred = [star(e) for e in elems]
    for m in range(size):
        for n in range(size):
            g[m, n] = eval_phi(f, starred[m] * elems[n])
    return as_matrix(g)


def drift_space(dim: int) -> list[Element]:
    """Basis u_jk - u_kj* of the space on which driftless functionals vanish."""
    return [
        Element.of(Letter.u(j, k)) - Element.of(Letter.u(k, j, True))
        for j in range(1, dim + 1)
        for k in range(1, dim + 1)
    ]


def is_driftless(spec: GaussianSpec, tol: float | None = None) -> bool:
    tol = _resolve_tol(tol)
    f = cook(spec, tol)
    return all(abs(eval_phi(f, v)) <= tol for v in drift_space(spec.dim))


def from_free_group_data(
    n: int,
    v: Sequence[npt.ArrayLike],
    alpha: Sequence[complex],
    tol: float | None = None,
) -> GaussianSpec:
    """Diagonal spec with (L_r)_ii = (v_i)_r and H = diag(α).

    Raises:
        InvalidParameterError: If some α_i is not purely imaginary, or sizes disagree.
    """
    tol = _resolve_tol(tol)
    if len(v) != n or len(alpha) != n:
        raise InvalidParameterError(f"expected {n} vectors and {n} drifts, got {len(v)} and {len(alpha)}")
    try:
        vectors = np.array([np.asarray(x, dtype=np.complex128) for x in v], dtype=np.complex128)
    except ValueError:
        raise InvalidParameterError("the vectors v_i must share one length d") from None
    if vectors.ndim != 2:
        raise InvalidParameterError("the vectors v_i must share one length d")
    for i, a in enumerate(alpha, start=1):
        if abs(complex(a).real) > tol:
            raise InvalidParameterError(f"alpha_{i} = {a} is not purely imaginary")
    d = vectors.shape[1]
    kraus = tuple(as_matrix(np.diag(vectors[:, r])) for r in range(d))
    h = np.diag([1j * complex(a).imag for a in alpha])
    return GaussianSpec(GroupTarget(TargetKind.FREE_GROUP, n), kraus, as_matrix(h))


def group_embedding(x: Element) -> Element:
    """Image of a free-group element under g_i ↦ u_ii, g_i^-1 ↦ u_ii*."""
    return Element(
        (
            tuple(
                Letter.u(letter.i, letter.i, letter.starred) if letter.is_group else letter
                for letter in word
            ),
            c,
        )
        for word, c in x.items()
    )
