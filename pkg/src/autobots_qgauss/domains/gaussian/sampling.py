# ABOUTME: Random specs for sweeps and self-tests: base-valid specs and specs valid for each target.
# ABOUTME: All draws go through a numpy Generator so a single seed reproduces a sweep.

from collections.abc import Callable

import numpy as np
import numpy.typing as npt
from scipy.stats import unitary_group

from autobots_qgauss.domains.gaussian.services import GaussianSpec
from autobots_qgauss.domains.kernel.services import ComplexMatrix, as_matrix
from autobots_qgauss.domains.targets.groups import GroupTarget, TargetKind
from autobots_qgauss.domains.words.services import Element, generators, word_counit

Rng = np.random.Generator
Draw = Callable[[], npt.ArrayLike]


def random_complex(shape: tuple[int, ...], rng: Rng) -> npt.NDArray[np.complex128]:
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def random_unitary(dim: int, rng: Rng) -> ComplexMatrix:
    if dim == 1:
        return as_matrix([[np.exp(2j * np.pi * rng.random())]])
    return as_matrix(unitary_group.rvs(dim, random_state=rng))


def random_anti_hermitian(n: int, rng: Rng) -> ComplexMatrix:
    x = random_complex((n, n), rng)
    return as_matrix((x - x.conj().T) / 2)


def random_normal(n: int, rng: Rng) -> ComplexMatrix:
    """U diag(λ) U* with random unitary U and complex λ."""
    u = random_unitary(n, rng)
    return as_matrix(u @ np.diag(random_complex((n,), rng)) @ u.conj().T)


def _paired(d: int, draw: Draw, single: Draw, rng: Rng) -> list[ComplexMatrix]:
    """d matrices made of adjoint pairs (A, A*) from `draw`, padded by one `single` if d is odd."""
    out: list[ComplexMatrix] = []
    while len(out) + 2 <= d:
        a = np.asarray(draw(), dtype=np.complex128)
        out += [as_matrix(a), as_matrix(a.conj().T)]
    if len(out) < d:
        out.append(as_matrix(single()))
    return [out[k] for k in rng.permutation(len(out))]


def random_base_spec(target: GroupTarget, d: int, rng: Rng) -> GaussianSpec:
    """A spec satisfying H = -H* and Σ L*L = Σ LL*, generic otherwise.

    L_r are normal matrices or adjoint pairs; H is a random anti-hermitian matrix.
    """
    dim = target.dim
    kraus: list[ComplexMatrix] = []
    while len(kraus) < d:
        if d - len(kraus) >= 2 and rng.random() < 0.5:
            a = random_complex((dim, dim), rng)
            kraus += [as_matrix(a), as_matrix(a.conj().T)]
        else:
            kraus.append(random_normal(dim, rng))
    return GaussianSpec(target, tuple(kraus), random_anti_hermitian(dim, rng))


def _real_antisymmetric(n: int, rng: Rng) -> npt.NDArray[np.float64]:
    x = rng.standard_normal((n, n))
    return x - x.T


def _symplectic_block(n: int, rng: Rng) -> npt.NDArray[np.complex128]:
    """[[A, B], [C, -A^t]] with B, C symmetric: L^t = J L J."""
    a = random_complex((n, n), rng)
    b = random_complex((n, n), rng)
    c = random_complex((n, n), rng)
    return np.block([[a, b + b.T], [c + c.T, -a.T]])


def _symplectic_drift(n: int, rng: Rng) -> npt.NDArray[np.complex128]:
    """[[A, B], [-conj B, conj A]] with A anti-hermitian, B symmetric."""
    a = np.asarray(random_anti_hermitian(n, rng))
    b = random_complex((n, n), rng)
    b = b + b.T
    return np.block([[a, b], [-b.conj(), a.conj()]])


def random_target_spec(target: GroupTarget, d: int, rng: Rng) -> GaussianSpec:
    """A spec satisfying the base conditions and all matrix conditions of `target`."""
    n, dim = target.n, target.dim
    match target.kind:
        case TargetKind.U_PLUS:
            return random_base_spec(target, d, rng)
        case TargetKind.O_PLUS:

            def antisymmetric() -> npt.NDArray[np.complex128]:
                x = random_complex((n, n), rng)
                return x - x.T

            def phased() -> npt.NDArray[np.complex128]:
                return np.exp(2j * np.pi * rng.random()) * _real_antisymmetric(n, rng)

            kraus = _paired(d, antisymmetric, phased, rng)
            h = _real_antisymmetric(n, rng)
        case TargetKind.SP_PLUS:

            def diagonal_block() -> npt.NDArray[np.complex128]:
                diag = random_complex((n,), rng)
                return np.diag(np.concatenate([diag, -diag]))

            kraus = _paired(d, lambda: _symplectic_block(n, rng), diagonal_block, rng)
            h = _symplectic_drift(n, rng)
        case TargetKind.U_CLASSICAL:

            def hermitian() -> npt.NDArray[np.complex128]:
                x = random_complex((n, n), rng)
                return x + x.conj().T

            kraus = _paired(d, lambda: random_complex((n, n), rng), hermitian, rng)
            h = random_anti_hermitian(n, rng)
        case TargetKind.TORUS:
            kraus = [as_matrix(c * np.eye(n)) for c in random_complex((d,), rng)]
            h = 1j * rng.standard_normal() * np.eye(n)
        case TargetKind.FREE_GROUP:
            kraus = [as_matrix(np.diag(random_complex((n,), rng))) for _ in range(d)]
            h = np.diag(1j * rng.standard_normal(n))
    return GaussianSpec(target, tuple(as_matrix(k) for k in kraus), as_matrix(h))


def unitary_mix(spec: GaussianSpec, rng: Rng) -> GaussianSpec:
    """L'_r = Σ_s U_rs L_s for a random d×d unitary U; (W, H) is unchanged."""
    if spec.d == 0:
        return spec
    u = random_unitary(spec.d, rng)
    stack = np.stack(spec.kraus)
    mixed = np.einsum("rs,sij->rij", u, stack)
    return GaussianSpec(spec.target, tuple(as_matrix(m) for m in mixed), spec.h)


def random_centered_family(dim: int, size: int, rng: Rng, max_length: int = 2) -> list[Element]:
    """`size` random elements of ker ε, each a combination of up to three centered words."""
    letters = generators(dim)
    family: list[Element] = []
    for _ in range(size):
        element = Element.zero()
        for _ in range(int(rng.integers(1, 4))):
            length = int(rng.integers(1, max_length + 1))
            word = tuple(letters[int(k)] for k in rng.integers(0, len(letters), size=length))
            coeff = complex(*rng.standard_normal(2))
            element = element + Element.from_word(word, coeff) - Element.unit(coeff * word_counit(word))
        family.append(element)
    return family
