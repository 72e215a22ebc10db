# ABOUTME: Convolution use-case commands - drift bracket of two specs and truncated exp_∗.

from argparse import Namespace
from typing import Any

from autobots_qgauss.common.tools.registry import Command, register_commands
from autobots_qgauss.common.tools.validation_tools import max_abs
from autobots_qgauss.domains.convolution.services import conv_exp, drift_bracket
from autobots_qgauss.domains.gaussian.services import cook
from autobots_qgauss.domains.gaussian.tools import load_spec, parse_expressions, require, resolve_tol


def bracket_command(args: Namespace) -> dict[str, Any]:
    """[H, K] through convolution, H from --spec and K from --other."""
    h = load_spec(args).h
    k = load_spec(args, "other").h
    bracket = drift_bracket(h, k, resolve_tol(args))
    return {"bracket": bracket, "commutator_residual": max_abs(bracket - (h @ k - k @ h))}


def conv_exp_command(args: Namespace) -> dict[str, Any]:
    spec = load_spec(args)
    (x,) = parse_expressions(args, spec.target, 1)
    t = require(args, "t")
    order = require(args, "order")
    f = cook(spec, resolve_tol(args))
    return {"value": conv_exp(f, x, t, order), "t": t, "order": order}


def register_convolution_commands() -> None:
    register_commands(
        [
            Command("bracket", "convolution.drift_bracket", bracket_command, "[H, K] via convolution"),
            Command("conv-exp", "convolution.conv_exp", conv_exp_command, "truncated exp_∗(t φ)"),
        ]
    )
