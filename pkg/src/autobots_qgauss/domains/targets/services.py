# ABOUTME: Targets services - the two routes certifying that a functional descends to a quotient.
# ABOUTME: Matrix conditions on (L, H) and vanishing on the ideal generated by a relation set.

from dataclasses import dataclass

from autobots_qgauss.common.errors import InvalidParameterError
from autobots_qgauss.common.tools.validation_tools import ConditionResult
from autobots_qgauss.configs.settings import get_app_settings
from autobots_qgauss.domains.gaussian.services import CookedFunctional, GaussianSpec, eval_phi
from autobots_qgauss.domains.targets.conditions import target_conditions
from autobots_qgauss.domains.targets.groups import GroupTarget, TargetKind
from autobots_qgauss.domains.words.services import Element, Letter, counit, generators


@dataclass(frozen=True)
class RelationSet:
    """X generates the algebra; the ideal generated by Y is the kernel of the quotient map."""

    target: GroupTarget
    x: tuple[Letter, ...]
    y: tuple[Element, ...]

    def __post_init__(self) -> None:
        for index, element in enumerate(self.y):
            if counit(element) != 0:
                raise InvalidParameterError(f"relation {index} is not in the kernel of the counit")


def matrix_conditions(
    spec: GaussianSpec, target: GroupTarget | None = None, tol: float | None = None
) -> list[ConditionResult]:
    """Per-condition verdicts of `spec` against `target` (default: the spec's own)."""
    tol = get_app_settings().tol if tol is None else tol
    return target_conditions(spec.kraus, spec.h, target or spec.target, tol)


def _u(i: int, j: int, starred: bool = False) -> Element:
    return Element.of(Letter.u(i, j, starred))


def _relations(target: GroupTarget) -> list[Element]:
    n = target.n
    rng = range(1, n + 1)
    match target.kind:
        case TargetKind.U_PLUS:
            return []
        case TargetKind.O_PLUS:
            return [_u(i, j) - _u(i, j, True) for i in rng for j in rng]
        case TargetKind.SP_PLUS:
            out = []
            for i in rng:
                for j in rng:
                    out.append(_u(i, j, True) - _u(i + n, j + n))
                    out.append(_u(i + n, j, True) + _u(i, j + n))
            return out
        case TargetKind.U_CLASSICAL:
            out = []
            plain = generators(n, with_stars=False)
            for a in plain:
                for b in plain:
                    out.append(_u(a.i, a.j) * _u(b.i, b.j) - _u(b.i, b.j) * _u(a.i, a.j))
                    out.append(
                        _u(a.i, a.j) * _u(b.i, b.j, True) - _u(b.i, b.j, True) * _u(a.i, a.j)
                    )
            return out
        case TargetKind.TORUS:
            out = []
            for i in rng:
                for j in rng:
                    if i < j:
                        out.append(_u(i, i) - _u(j, j))
                        out.append(_u(i, i, True) - _u(j, j, True))
                    if i != j:
                        out += [_u(i, j), _u(i, j, True)]
            return out
        case TargetKind.FREE_GROUP:
            return [_u(i, j, s) for i in rng for j in rng if i != j for s in (False, True)]


def relation_set(target: GroupTarget) -> RelationSet:
    """X = every u_ij and u_ij* of the ambient size; Y per target, zero relations dropped."""
    y = tuple(element for element in _relations(target) if not element.is_zero())
    return RelationSet(target=target, x=tuple(generators(target.dim)), y=y)


def ideal_vanishing_residual(f: CookedFunctional, target: GroupTarget | None = None) -> float:
    """max |φ(y)|, |φ(xy)|, |φ(yx)| over x ∈ X, y ∈ Y."""
    relations = relation_set(target or f.spec.target)
    worst = 0.0
    for y in relations.y:
        worst = max(worst, abs(eval_phi(f, y)))
        for letter in relations.x:
            x = Element.of(letter)
            worst = max(worst, abs(eval_phi(f, x * y)), abs(eval_phi(f, y * x)))
    return worst


def ideal_vanishing_check(
    f: CookedFunctional, target: GroupTarget | None = None, tol: float | None = None
) -> bool:
    """True iff φ vanishes on the ideal generated by the target's relations."""
    tol = get_app_settings().tol if tol is None else tol
    return ideal_vanishing_residual(f, target) <= tol
