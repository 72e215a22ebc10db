# ABOUTME: qgauss command-line front-end - one subcommand per operation, JSON reports on stdout.
# ABOUTME: Exit 0 on success, 2 when an input is rejected, 1 on usage or syntax errors.

import argparse
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import NoReturn, TextIO

from dotenv import load_dotenv

from autobots_qgauss.common.errors import DocumentError, QgError, UsageError, WordSyntaxError
from autobots_qgauss.common.observability import configure_logging, get_logger
from autobots_qgauss.common.tools.registry import get_command, list_commands
from autobots_qgauss.common.utils.formatting import dumps_report
from autobots_qgauss.domains.centrality.settings import init_centrality_settings
from autobots_qgauss.domains.centrality.tools import register_centrality_commands
from autobots_qgauss.domains.convolution.tools import register_convolution_commands
from autobots_qgauss.domains.gaussian.tools import register_gaussian_commands
from autobots_qgauss.domains.kernel.tools import register_kernel_commands
from autobots_qgauss.domains.targets.groups import TargetKind
from autobots_qgauss.domains.targets.tools import register_targets_commands
from autobots_qgauss.domains.wordlang.tools import register_wordlang_commands

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_REJECTED = 2


class _UsageExit(Exception):
    def __init__(self, message: str) -> None:
        super().__init__(message)
        self.message = message


class _ArgumentParser(argparse.ArgumentParser):
    """argparse exits with status 2 on bad usage; usage errors here exit with 1."""

    def error(self, message: str) -> NoReturn:
        raise _UsageExit(f"{self.prog}: error: {message}")


def register_all_commands() -> None:
    register_kernel_commands()
    register_wordlang_commands()
    register_gaussian_commands()
    register_targets_commands()
    register_convolution_commands()
    register_centrality_commands()


def _add_common_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--spec", help="input document (JSON or YAML)")
    parser.add_argument("--other", help="second spec document (bracket)")
    parser.add_argument("--expr", action="append", help="word expression; repeatable")
    parser.add_argument("--target", choices=[k.value for k in TargetKind], help="target group")
    parser.add_argument("--n", type=int, help="size N")
    parser.add_argument("--tol", type=float, help="tolerance (default QG_TOL or 1e-9)")
    parser.add_argument("--pmax", type=int, help="largest moment order")
    parser.add_argument("--pattern", help="character pattern such as uu*u")
    parser.add_argument("--order", type=int, help="truncation order of exp_∗")
    parser.add_argument("--t", type=float, help="time parameter")
    parser.add_argument("--cutoff", type=int, help="word length of the centrality sweep")
    parser.add_argument("--nu", type=float, help="torus drift parameter")
    parser.add_argument("--mu", type=float, help="torus variance parameter")
    parser.add_argument("--seed", type=int, help="seed for randomized self-tests")
    parser.add_argument("--out", help="write the report to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    register_all_commands()
    parser = _ArgumentParser(
        prog="qgauss", description="Gaussian generating functionals on free easy quantum groups"
    )
    subparsers = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)
    for command in list_commands():
        _add_common_flags(subparsers.add_parser(command.name, help=command.help))
    return parser


def run(argv: Sequence[str] | None = None, stdout: TextIO | None = None) -> int:
    """Run one command and return the exit code; diagnostics go to stderr."""
    out = stdout if stdout is not None else sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except _UsageExit as exc:
        print(exc.message, file=sys.stderr)
        return EXIT_USAGE

    command = get_command(args.command)
    logger.debug(f"running {command.name} -> {command.operation}")
    try:
        report = command.handler(args)
    except (WordSyntaxError, DocumentError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except QgError as exc:
        print(f"rejected: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_REJECTED

    text = dumps_report(report)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        out.write(text)
    return EXIT_OK


def main() -> None:
    load_dotenv()
    settings = init_centrality_settings()
    configure_logging(settings.log_level)
    sys.exit(run())


if __name__ == "__main__":
    main()
