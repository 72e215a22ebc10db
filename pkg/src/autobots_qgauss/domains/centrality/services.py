# ABOUTME: Centrality services - central checks, character moments and centralization tables.
# ABOUTME: Closed-form moments depend only on Tr(H), Tr(M(W)) and (Tr⊗Tr)(W).

import itertools
from dataclasses import dataclass

import numpy as np

from autobots_qgauss.common.errors import (
    ExpansionLimitError,
    InvalidParameterError,
    TargetConditionError,
)
from autobots_qgauss.common.observability import get_logger
from autobots_qgauss.common.tools.validation_tools import scalar_residual
from autobots_qgauss.configs.settings import get_app_settings
from autobots_qgauss.domains.centrality.settings import get_centrality_settings
from autobots_qgauss.domains.gaussian.services import (
    CookedFunctional,
    GaussianSpec,
    eval_phi,
    validate,
)
from autobots_qgauss.domains.targets.groups import GroupTarget, TargetKind
from autobots_qgauss.domains.targets.services import matrix_conditions
from autobots_qgauss.domains.words.services import (
    Element,
    Letter,
    Word,
    coproduct,
    generators,
    words_up_to,
)

logger = get_logger(__name__)


@dataclass(frozen=True)
class CharacterPattern:
    """Signs ε_1..ε_p of the mixed character χ of U^{ε_1} ⊗ … ⊗ U^{ε_p}; True means Ū."""

    conj: tuple[bool, ...]

    def __post_init__(self) -> None:
        if not self.conj:
            raise InvalidParameterError("a character pattern needs at least one factor")

    @classmethod
    def plain(cls, p: int) -> "CharacterPattern":
        if p < 1:
            raise InvalidParameterError(f"p must be at least 1, got {p}")
        return cls((False,) * p)

    @classmethod
    def parse(cls, text: str) -> "CharacterPattern":
        """'u' for U and 'u*' for Ū, concatenated: e.g. 'uu*u'."""
        signs: list[bool] = []
        pos = 0
        compact = "".join(text.split())
        while pos < len(compact):
            if compact[pos] != "u":
                raise InvalidParameterError(f"bad character pattern {text!r} at position {pos}")
            starred = compact[pos + 1 : pos + 2] == "*"
            signs.append(starred)
            pos += 2 if starred else 1
        return cls(tuple(signs))

    @property
    def p(self) -> int:
        return len(self.conj)

    def __str__(self) -> str:
        return "".join("u*" if c else "u" for c in self.conj)


@dataclass(frozen=True)
class CentralParams:
    tr_h: complex
    tr_mw: float
    trtr_w: float

    def as_dict(self) -> dict[str, object]:
        return {"trH": self.tr_h, "trMW": self.tr_mw, "trtrW": self.trtr_w}


@dataclass(frozen=True)
class MomentRow:
    pattern: CharacterPattern
    value: complex
    direct: complex | None = None

    def as_dict(self) -> dict[str, object]:
        row: dict[str, object] = {"pattern": str(self.pattern), "value": self.value}
        if self.direct is not None:
            row["direct"] = self.direct
        return row


@dataclass(frozen=True)
class MomentTable:
    """Character moments, optionally with table(p) ≈ c·reference(p)."""

    rows: tuple[MomentRow, ...]
    c: complex | None = None
    reference: str | None = None
    m: int | None = None
    deviation: float | None = None

    def values(self) -> list[complex]:
        return [row.value for row in self.rows]

    def as_dict(self) -> dict[str, object]:
        out: dict[str, object] = {"rows": [row.as_dict() for row in self.rows]}
        if self.c is not None:
            out.update({"c": self.c, "reference": self.reference, "M": self.m, "deviation": self.deviation})
        return out


def central_params(spec: GaussianSpec) -> CentralParams:
    """(Tr H, Σ Tr(L*L), Σ |Tr L|²)."""
    h = (spec.h - spec.h.conj().T) / 2
    return CentralParams(
        tr_h=complex(np.trace(h)),
        tr_mw=float(sum(np.real(np.trace(k.conj().T @ k)) for k in spec.kraus)),
        trtr_w=float(sum(abs(np.trace(k)) ** 2 for k in spec.kraus)),
    )


def closed_moment(params: CentralParams, dim: int, pattern: CharacterPattern) -> complex:
    """dim^{p-1} Σ_a φ_1^{(ε_a)} + dim^{p-2} Σ_{a<b} S(ε_a, ε_b).

    φ_1 = -½ Tr M(W) + Tr H, its conjugate for Ū; S = -(Tr⊗Tr)(W) for equal signs, + otherwise.
    """
    p = pattern.p
    phi1 = -0.5 * params.tr_mw + params.tr_h
    first = sum((phi1.conjugate() if c else phi1 for c in pattern.conj), 0j)
    second = sum(
        (
            -params.trtr_w if a == b else params.trtr_w
            for a, b in itertools.combinations(pattern.conj, 2)
        ),
        0.0,
    )
    total = dim ** (p - 1) * first
    if p >= 2:
        total += dim ** (p - 2) * second
    return complex(total)


def character_moment_closed(f: CookedFunctional, pattern: CharacterPattern) -> complex:
    return closed_moment(central_params(f.spec), f.spec.dim, pattern)


def character_moment_direct(
    f: CookedFunctional, pattern: CharacterPattern, guard: int | None = None
) -> complex:
    """Σ over (j_1..j_p) of φ(u^{ε_1}_{j_1 j_1} … u^{ε_p}_{j_p j_p}).

    Raises:
        ExpansionLimitError: If dim^p exceeds the guard.
    """
    guard = get_app_settings().expansion_guard if guard is None else guard
    dim = f.spec.dim
    size = dim**pattern.p
    if size > guard:
        raise ExpansionLimitError(size, guard)
    x = Element(
        (tuple(Letter.u(j, j, c) for j, c in zip(js, pattern.conj, strict=True)), 1)
        for js in itertools.product(range(1, dim + 1), repeat=pattern.p)
    )
    return eval_phi(f, x)


def central_residual(f: CookedFunctional, cutoff: int, guard: int | None = None) -> float:
    """Worst of the first-order scalar test and |(f∗δ_v - δ_v∗f)(w)| over |v|, |w| ≤ cutoff.

    Words run over the u letters of the ambient U_dim⁺ only, also for free-group specs.
    """
    guard = get_app_settings().expansion_guard if guard is None else guard
    dim = f.spec.dim
    worst = scalar_residual(f.first_order_matrix())
    for w in words_up_to(generators(dim), cutoff):
        # (f∗δ_v)(w) collects f(left) under right = v; (δ_v∗f)(w) collects f(right) under left = v
        right_side: dict[Word, complex] = {}
        left_side: dict[Word, complex] = {}
        for left, right, coeff in coproduct(w, dim, guard):
            right_side[right] = right_side.get(right, 0j) + coeff * eval_phi(f, Element.from_word(left))
            left_side[left] = left_side.get(left, 0j) + coeff * eval_phi(f, Element.from_word(right))
        for v in right_side.keys() | left_side.keys():
            worst = max(worst, abs(right_side.get(v, 0j) - left_side.get(v, 0j)))
    return worst


def central_check(
    f: CookedFunctional,
    cutoff: int | None = None,
    tol: float | None = None,
    guard: int | None = None,
) -> bool:
    """True iff φ commutes under convolution with every δ_v, |v| ≤ cutoff, on words of length ≤ cutoff."""
    cutoff = get_centrality_settings().central_cutoff if cutoff is None else cutoff
    tol = get_app_settings().tol if tol is None else tol
    residual = central_residual(f, cutoff, guard)
    logger.debug(f"central_check: cutoff={cutoff} residual={residual:.3e}")
    return residual <= tol


def centralize_table(
    spec: GaussianSpec,
    target: GroupTarget | None = None,
    pmax: int | None = None,
    tol: float | None = None,
    f: CookedFunctional | None = None,
    guard: int | None = None,
) -> MomentTable:
    """φ(χ_{U^{⊗p}}) for p = 1..pmax with the constant c of table(p) = c·p·M^{p-1}.

    M = N for o_plus and 2N for sp_plus; c = -Tr M(W)/2. When a cooked functional
    is given, rows within the guard carry the direct sum as a cross-check.

    Raises:
        InvalidParameterError: If the target is not o_plus or sp_plus.
        TargetConditionError: If the spec fails the target's conditions.
    """
    target = target or spec.target
    pmax = get_centrality_settings().default_pmax if pmax is None else pmax
    guard = get_app_settings().expansion_guard if guard is None else guard
    if target.kind not in (TargetKind.O_PLUS, TargetKind.SP_PLUS):
        raise InvalidParameterError(f"centralization is defined for o_plus and sp_plus, not {target.kind}")
    if pmax < 1:
        raise InvalidParameterError(f"pmax must be at least 1, got {pmax}")
    report = validate(spec, tol)
    conditions = report.base + matrix_conditions(spec, target, tol)
    failed = [c.name for c in conditions if not c.passed]
    if failed:
        raise TargetConditionError(f"spec fails the {target.kind} conditions: {failed}", report)

    params = central_params(spec)
    m = target.dim
    c = complex(-params.tr_mw / 2)
    rows: list[MomentRow] = []
    deviation = 0.0
    for p in range(1, pmax + 1):
        pattern = CharacterPattern.plain(p)
        value = closed_moment(params, m, pattern)
        direct = character_moment_direct(f, pattern, guard) if f is not None and m**p <= guard else None
        rows.append(MomentRow(pattern, value, direct))
        expected = c * p * m ** (p - 1)
        deviation = max(deviation, abs(value - expected) / max(abs(value), abs(expected), 1.0))
    return MomentTable(tuple(rows), c=c, reference="p*M^(p-1)", m=m, deviation=deviation)


def unitary_moment_table(params: CentralParams, n: int) -> MomentTable:
    """The six moments of χ_U, χ_Ū and the four two-fold mixed characters on U_N⁺."""
    patterns = ["u", "u*", "uu", "uu*", "u*u", "u*u*"]
    rows = tuple(
        MomentRow(CharacterPattern.parse(p), closed_moment(params, n, CharacterPattern.parse(p)))
        for p in patterns
    )
    return MomentTable(rows)


def torus_gaussian(n: int, nu: float, mu: float) -> GaussianSpec:
    """L_1 = √μ·I (omitted when μ = 0) and H = iν·I on the torus target.

    Raises:
        InvalidParameterError: If μ < 0.
    """
    if mu < 0:
        raise InvalidParameterError(f"mu must be non-negative, got {mu}")
    eye = np.eye(n, dtype=np.complex128)
    kraus = (np.sqrt(mu) * eye,) if mu > 0 else ()
    return GaussianSpec.create(GroupTarget(TargetKind.TORUS, n), kraus, 1j * nu * eye)
