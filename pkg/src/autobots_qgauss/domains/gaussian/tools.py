# ABOUTME: Gaussian use-case commands - validate, eval, cocycle, coboundary, (de)compose and friends.
# ABOUTME: Also hosts the argument helpers (spec loading, expression parsing) other domains reuse.

from argparse import Namespace
from typing import Any

import numpy as np

from autobots_qgauss.common.errors import UsageError
from autobots_qgauss.common.observability import get_logger
from autobots_qgauss.common.tools.registry import Command, register_commands
from autobots_qgauss.configs.settings import get_app_settings
from autobots_qgauss.domains.gaussian.services import (
    GaussianSpec,
    coboundary,
    cook,
    eval_eta,
    eval_phi,
    from_free_group_data,
    from_WH,
    gram,
    is_driftless,
    to_WH,
    validate,
)
from autobots_qgauss.domains.targets.groups import GroupTarget
from autobots_qgauss.domains.wordlang.services import parse
from autobots_qgauss.domains.words.services import Element
from autobots_qgauss.models.documents import (
    FreeGroupDocument,
    SpecDocument,
    WHDocument,
    load_document,
)

logger = get_logger(__name__)


# --- argument helpers ---


def resolve_tol(args: Namespace) -> float:
    return get_app_settings().tol if getattr(args, "tol", None) is None else args.tol


def require(args: Namespace, name: str) -> Any:
    value = getattr(args, name, None)
    if value is None:
        raise UsageError(f"--{name.replace('_', '-')} is required for this command")
    return value


def load_spec(args: Namespace, attr: str = "spec") -> GaussianSpec:
    return load_document(require(args, attr), SpecDocument).to_spec()


def parse_expressions(args: Namespace, target: GroupTarget, count: int | None = None) -> list[Element]:
    """Every --expr parsed against the target; `count` pins how many are expected."""
    texts: list[str] = getattr(args, "expr", None) or []
    if count is not None and len(texts) != count:
        raise UsageError(f"expected {count} --expr value(s), got {len(texts)}")
    return [parse(text, target) for text in texts]


# --- handlers ---


def validate_command(args: Namespace) -> dict[str, Any]:
    """Report every base and target condition of --spec."""
    spec = load_spec(args)
    return validate(spec, resolve_tol(args)).as_dict()


def eval_command(args: Namespace) -> dict[str, Any]:
    """φ(--expr) for the functional of --spec."""
    spec = load_spec(args)
    (x,) = parse_expressions(args, spec.target, 1)
    f = cook(spec, resolve_tol(args))
    return {"value": eval_phi(f, x)}


def cocycle_command(args: Namespace) -> dict[str, Any]:
    """η(--expr) as a vector in C^d."""
    spec = load_spec(args)
    (x,) = parse_expressions(args, spec.target, 1)
    f = cook(spec, resolve_tol(args))
    return {"eta": eval_eta(f, x), "d": f.d}


def coboundary_command(args: Namespace) -> dict[str, Any]:
    """∂φ(a ⊗ b) for --expr a --expr b."""
    spec = load_spec(args)
    a, b = parse_expressions(args, spec.target, 2)
    f = cook(spec, resolve_tol(args))
    return {"value": coboundary(f, a, b)}


def decompose_command(args: Namespace) -> dict[str, Any]:
    spec = load_spec(args)
    w, h = to_WH(spec, resolve_tol(args))
    return WHDocument.dump(spec.target, w, h)


def compose_command(args: Namespace) -> dict[str, Any]:
    """Spec extracted from a {"target", "n", "W", "H"} file given as --spec."""
    doc = load_document(require(args, "spec"), WHDocument)
    spec = from_WH(doc.operator(), doc.drift(), doc.group_target, resolve_tol(args))
    return SpecDocument.dump(spec)


def gram_command(args: Namespace) -> dict[str, Any]:
    """Gram matrix of the centered elements given as repeated --expr."""
    spec = load_spec(args)
    elems = parse_expressions(args, spec.target)
    tol = resolve_tol(args)
    g = gram(cook(spec, tol), elems, tol)
    min_eig = float(np.linalg.eigvalsh((g + g.conj().T) / 2)[0]) if len(elems) else 0.0
    return {"gram": g, "min_eig": min_eig}


def driftless_command(args: Namespace) -> dict[str, Any]:
    spec = load_spec(args)
    return {"driftless": is_driftless(spec, resolve_tol(args))}


def free_group_command(args: Namespace) -> dict[str, Any]:
    """Spec of the free-group functional from a {"n", "v", "alpha"} file given as --spec."""
    doc = load_document(require(args, "spec"), FreeGroupDocument)
    spec = from_free_group_data(doc.n, doc.v, doc.alpha, resolve_tol(args))
    return SpecDocument.dump(spec)


# --- Registration entry-point (called once at app startup) ---


def register_gaussian_commands() -> None:
    """Register all gaussian commands into the shared command pool."""
    register_commands(
        [
            Command("validate", "gaussian.validate", validate_command, "check a spec"),
            Command("eval", "gaussian.eval_phi", eval_command, "evaluate φ on an expression"),
            Command("cocycle", "gaussian.eval_eta", cocycle_command, "evaluate η on an expression"),
            Command("coboundary", "gaussian.coboundary", coboundary_command, "∂φ(a ⊗ b)"),
            Command("decompose", "gaussian.to_WH", decompose_command, "spec → (W, H)"),
            Command("compose", "gaussian.from_WH", compose_command, "(W, H) → spec"),
            Command("gram", "gaussian.gram", gram_command, "Gram matrix on centered elements"),
            Command("driftless", "gaussian.is_driftless", driftless_command, "test H = 0"),
            Command(
                "free-group",
                "gaussian.from_free_group_data",
                free_group_command,
                "spec from free-group data",
            ),
        ]
    )
