# ABOUTME: Targets use-case commands - quotient checks by both routes and the randomized self-test.
# ABOUTME: The self-test sweeps every target with one seed and reports agreement counts.

from argparse import Namespace
from typing import Any

import numpy as np

from autobots_qgauss.common.observability import get_logger
from autobots_qgauss.common.tools.registry import Command, register_commands
from autobots_qgauss.configs.settings import get_app_settings
from autobots_qgauss.domains.gaussian.sampling import random_base_spec, random_target_spec
from autobots_qgauss.domains.gaussian.services import (
    CookedFunctional,
    coboundary,
    cook,
    eval_eta,
)
from autobots_qgauss.domains.gaussian.tools import load_spec, resolve_tol
from autobots_qgauss.domains.targets.groups import GroupTarget, TargetKind
from autobots_qgauss.domains.targets.services import (
    ideal_vanishing_residual,
    matrix_conditions,
)
from autobots_qgauss.domains.words.services import Element, generators, star, words_up_to

logger = get_logger(__name__)

SELFTEST_SPECS_PER_TARGET = 10


def check_group_command(args: Namespace) -> dict[str, Any]:
    """Matrix conditions and ideal vanishing of --spec against --target (default: its own)."""
    spec = load_spec(args)
    tol = resolve_tol(args)
    target = GroupTarget.parse(args.target, spec.n) if args.target else spec.target
    conditions = matrix_conditions(spec, target, tol)
    residual = ideal_vanishing_residual(cook(spec, tol), target)
    conditions_pass = all(c.passed for c in conditions)
    vanishes = residual <= tol
    return {
        "target": target.kind.value,
        "conditions": conditions,
        "conditions_pass": conditions_pass,
        "ideal_residual": residual,
        "ideal_vanishes": vanishes,
        "agree": conditions_pass == vanishes,
    }


def pair_identity_residual(f: CookedFunctional) -> float:
    """max |∂φ(a* ⊗ b) - ⟨η(a), η(b)⟩| over words a of length ≤ 2 and letters b."""
    letters = generators(f.spec.dim)
    worst = 0.0
    for a_word in words_up_to(letters, 2):
        a = Element.from_word(a_word)
        eta_a = eval_eta(f, a)
        for letter in letters:
            b = Element.of(letter)
            inner = complex(np.vdot(eta_a, eval_eta(f, b)))
            worst = max(worst, abs(coboundary(f, star(a), b) - inner))
    return worst


def selftest_command(args: Namespace) -> dict[str, Any]:
    """Quotient-equivalence sweep and Gaussian-pair identity on random specs for every target."""
    seed = get_app_settings().seed if args.seed is None else args.seed
    tol = resolve_tol(args)
    rng = np.random.default_rng(seed)
    per_target: dict[str, Any] = {}
    pair_worst = 0.0
    for kind in TargetKind:
        agreements = passing = 0
        for k in range(SELFTEST_SPECS_PER_TARGET):
            target = GroupTarget(kind, 1 if kind is TargetKind.SP_PLUS else int(rng.integers(1, 3)))
            d = int(rng.integers(0, 3))
            make = random_target_spec if k % 2 == 0 else random_base_spec
            spec = make(target, d, rng)
            f = cook(spec, tol)
            conditions_pass = all(c.passed for c in matrix_conditions(spec, target, tol))
            vanishes = ideal_vanishing_residual(f, target) <= tol
            agreements += conditions_pass == vanishes
            passing += conditions_pass
            pair_worst = max(pair_worst, pair_identity_residual(f))
        per_target[kind.value] = {
            "specs": SELFTEST_SPECS_PER_TARGET,
            "agreements": agreements,
            "passing": passing,
        }
        logger.info(f"selftest {kind.value}: {agreements}/{SELFTEST_SPECS_PER_TARGET} agree")
    all_agree = all(v["agreements"] == v["specs"] for v in per_target.values())
    return {
        "seed": seed,
        "targets": per_target,
        "pair_identity_residual": pair_worst,
        "passed": all_agree and pair_worst <= tol,
    }


def register_targets_commands() -> None:
    register_commands(
        [
            Command(
                "check-group",
                "targets.matrix_conditions",
                check_group_command,
                "matrix conditions and ideal vanishing for a target",
            ),
            Command("selftest", "targets.selftest", selftest_command, "randomized equivalence sweep"),
        ]
    )
