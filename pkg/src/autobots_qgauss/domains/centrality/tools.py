# ABOUTME: Centrality use-case commands - central check, centralization, moments and torus specs.
# ABOUTME: Tables are emitted as rows of {"pattern", "value"} plus the proportionality constant.

from argparse import Namespace
from typing import Any

from autobots_qgauss.common.tools.registry import Command, register_commands
from autobots_qgauss.configs.settings import get_app_settings
from autobots_qgauss.domains.centrality.services import (
    CharacterPattern,
    central_params,
    central_residual,
    centralize_table,
    character_moment_closed,
    character_moment_direct,
    torus_gaussian,
    unitary_moment_table,
)
from autobots_qgauss.domains.centrality.settings import get_centrality_settings
from autobots_qgauss.domains.gaussian.services import cook
from autobots_qgauss.domains.gaussian.tools import load_spec, require, resolve_tol
from autobots_qgauss.domains.targets.groups import GroupTarget
from autobots_qgauss.models.documents import SpecDocument


def central_command(args: Namespace) -> dict[str, Any]:
    spec = load_spec(args)
    tol = resolve_tol(args)
    cutoff = get_centrality_settings().central_cutoff if args.cutoff is None else args.cutoff
    residual = central_residual(cook(spec, tol), cutoff)
    return {"central": residual <= tol, "residual": residual, "cutoff": cutoff}


def centralize_command(args: Namespace) -> dict[str, Any]:
    spec = load_spec(args)
    tol = resolve_tol(args)
    target = GroupTarget.parse(args.target, spec.n) if args.target else spec.target
    table = centralize_table(spec, target, args.pmax, tol, f=cook(spec, tol))
    return {"target": target.kind.value, "table": table}


def moments_command(args: Namespace) -> dict[str, Any]:
    """Closed and direct moment of --pattern; without a pattern, the six U_N⁺ moments."""
    spec = load_spec(args)
    f = cook(spec, resolve_tol(args))
    params = central_params(spec)
    if args.pattern is None:
        return {"params": params, "table": unitary_moment_table(params, spec.dim)}
    pattern = CharacterPattern.parse(args.pattern)
    guard = get_app_settings().expansion_guard
    direct = character_moment_direct(f, pattern) if spec.dim**pattern.p <= guard else None
    return {
        "params": params,
        "pattern": str(pattern),
        "closed": character_moment_closed(f, pattern),
        "direct": direct,
    }


def torus_command(args: Namespace) -> dict[str, Any]:
    n = require(args, "n")
    spec = torus_gaussian(n, require(args, "nu"), require(args, "mu"))
    return SpecDocument.dump(spec)


def register_centrality_commands() -> None:
    register_commands(
        [
            Command("central", "centrality.central_check", central_command, "convolution-commutator test"),
            Command(
                "centralize",
                "centrality.centralize_table",
                centralize_command,
                "character moments of the centralization",
            ),
            Command(
                "moments",
                "centrality.character_moment_closed",
                moments_command,
                "character moments, closed and direct",
            ),
            Command("torus", "centrality.torus_gaussian", torus_command, "central torus Gaussian"),
        ]
    )
