# ABOUTME: Convolution services - (f ∗ g) = (f ⊗ g)∘Δ on words, the drift bracket and exp_∗ truncations.
# ABOUTME: Convolution powers fold over an explicit iterated coproduct bounded by the expansion guard.

import math
from abc import ABC, abstractmethod
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from autobots_qgauss.common.errors import AntiHermitianError, InvalidParameterError
from autobots_qgauss.common.observability import get_logger
from autobots_qgauss.common.tools.validation_tools import anti_hermitian_residual
from autobots_qgauss.configs.settings import get_app_settings
from autobots_qgauss.domains.gaussian.services import (
    CookedFunctional,
    GaussianSpec,
    cook,
    eval_phi,
)
from autobots_qgauss.domains.kernel.services import ComplexMatrix, as_matrix
from autobots_qgauss.domains.targets.groups import GroupTarget, TargetKind
from autobots_qgauss.domains.words.services import (
    Element,
    Letter,
    Word,
    iterated_coproduct,
    word_counit,
)

logger = get_logger(__name__)


def _resolve_guard(guard: int | None) -> int:
    return get_app_settings().expansion_guard if guard is None else guard


class WordFunctional(ABC):
    """A linear functional given by its values on words."""

    @abstractmethod
    def on_word(self, word: Word) -> complex: ...

    def __call__(self, x: Element) -> complex:
        return sum((c * self.on_word(w) for w, c in x.items()), 0j)


class Counit(WordFunctional):
    def on_word(self, word: Word) -> complex:
        return complex(word_counit(word))


@dataclass(frozen=True)
class Coordinate(WordFunctional):
    """δ_v: 1 on the word v, 0 on every other word."""

    word: Word

    def on_word(self, word: Word) -> complex:
        return 1 + 0j if word == self.word else 0j


@dataclass(frozen=True)
class Gaussian(WordFunctional):
    functional: CookedFunctional

    def on_word(self, word: Word) -> complex:
        return eval_phi(self.functional, Element.from_word(word))


@dataclass(frozen=True)
class LinearCombination(WordFunctional):
    terms: tuple[tuple[complex, WordFunctional], ...]

    def on_word(self, word: Word) -> complex:
        return sum((c * f.on_word(word) for c, f in self.terms), 0j)


@dataclass(frozen=True)
class Convolved(WordFunctional):
    """f ∗ g as a functional in its own right."""

    left: WordFunctional
    right: WordFunctional
    dim: int
    guard: int | None = None

    def on_word(self, word: Word) -> complex:
        return convolve(self.left, self.right, Element.from_word(word), self.dim, self.guard)


def as_functional(f: WordFunctional | CookedFunctional) -> WordFunctional:
    return Gaussian(f) if isinstance(f, CookedFunctional) else f


def convolve_power(
    factors: Sequence[WordFunctional | CookedFunctional],
    x: Element,
    dim: int,
    guard: int | None = None,
) -> complex:
    """(f_1 ∗ … ∗ f_m)(x); the empty product is ε.

    Raises:
        ExpansionLimitError: If an iterated coproduct exceeds the guard.
    """
    guard = _resolve_guard(guard)
    if not factors:
        return Counit()(x)
    funcs = [as_functional(f) for f in factors]
    total = 0j
    for word, c in x.items():
        for legs, coeff in iterated_coproduct(word, dim, len(funcs), guard):
            value = coeff
            for f, leg in zip(funcs, legs, strict=True):
                value *= f.on_word(leg)
                if value == 0:
                    break
            total += c * value
    return total


def convolve(
    f: WordFunctional | CookedFunctional,
    g: WordFunctional | CookedFunctional,
    x: Element,
    dim: int,
    guard: int | None = None,
) -> complex:
    """(f ∗ g)(x) = Σ f(x_(1)) g(x_(2)) over the coproduct of x."""
    return convolve_power([f, g], x, dim, guard)


def _pure_drift(h: ComplexMatrix) -> CookedFunctional:
    target = GroupTarget(TargetKind.U_PLUS, h.shape[0])
    return cook(GaussianSpec(target, (), h))


def drift_bracket(
    h: npt.ArrayLike, k: npt.ArrayLike, tol: float | None = None
) -> ComplexMatrix:
    """Matrix of D_H ∗ D_K - D_K ∗ D_H read off the generators u_ij; equals HK - KH.

    Raises:
        AntiHermitianError: If H or K is not anti-hermitian.
    """
    tol = get_app_settings().tol if tol is None else tol
    hh, kk = as_matrix(h), as_matrix(k, as_matrix(h).shape)
    for name, m in (("H", hh), ("K", kk)):
        residual = anti_hermitian_residual(m)
        if residual > tol:
            raise AntiHermitianError(f"{name} is not anti-hermitian (residual {residual:.3e})", residual)
    dh, dk = _pure_drift(hh), _pure_drift(kk)
    n = hh.shape[0]
    out = np.empty((n, n), dtype=np.complex128)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            x = Element.of(Letter.u(i, j))
            out[i - 1, j - 1] = convolve(dh, dk, x, n) - convolve(dk, dh, x, n)
    return as_matrix(out)


def conv_exp(
    f: CookedFunctional,
    x: Element,
    t: float,
    order: int,
    guard: int | None = None,
) -> complex:
    """Σ_{m=0..order} t^m/m! · f^{∗m}(x), an order-k truncation of exp_∗(t f).

    Raises:
        InvalidParameterError: If t is not real or order is negative.
        ExpansionLimitError: If a convolution power exceeds the guard.
    """
    if isinstance(t, complex):
        if t.imag != 0:
            raise InvalidParameterError(f"t must be real, got {t}")
        t = t.real
    if order < 0:
        raise InvalidParameterError(f"order must be non-negative, got {order}")
    dim = f.spec.dim
    total = 0j
    for m in range(order + 1):
        total += t**m / math.factorial(m) * convolve_power([f] * m, x, dim, guard)
    logger.debug(f"conv_exp: order={order} t={t} value={total}")
    return total
