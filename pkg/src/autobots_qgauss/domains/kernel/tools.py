# ABOUTME: Kernel use-case commands - Kraus extraction of an operator file.
# ABOUTME: Reports the Kraus family together with its reconstruction error.

from argparse import Namespace
from typing import Any

from autobots_qgauss.common.tools.registry import Command, register_commands
from autobots_qgauss.common.tools.validation_tools import max_abs
from autobots_qgauss.domains.gaussian.tools import require, resolve_tol
from autobots_qgauss.domains.kernel.services import TensorOperator, choi_form, kraus_extract, psd_check
from autobots_qgauss.models.documents import KrausDocument, load_document


def kraus_command(args: Namespace) -> dict[str, Any]:
    """L_1..L_d of a {"n", "W"} file given as --spec."""
    op = load_document(require(args, "spec"), KrausDocument).operator()
    tol = resolve_tol(args)
    _, min_eig = psd_check(choi_form(op), tol)
    kraus = kraus_extract(op, tol)
    rebuilt = TensorOperator.from_kraus(kraus, op.n)
    return {
        "L": list(kraus),
        "d": len(kraus),
        "min_eig": min_eig,
        "reconstruction_error": max_abs(rebuilt.w - op.w),
    }


def register_kernel_commands() -> None:
    register_commands([Command("kraus", "kernel.kraus_extract", kraus_command, "Kraus family of W")])
