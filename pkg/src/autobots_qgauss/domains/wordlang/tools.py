# ABOUTME: Wordlang use-case commands - parse an expression and print its canonical form.

from argparse import Namespace
from typing import Any

from autobots_qgauss.common.tools.registry import Command, register_commands
from autobots_qgauss.domains.gaussian.tools import require
from autobots_qgauss.domains.targets.groups import GroupTarget
from autobots_qgauss.domains.wordlang.services import parse, print_element


def parse_command(args: Namespace) -> dict[str, Any]:
    target = GroupTarget.parse(require(args, "target"), require(args, "n"))
    texts = require(args, "expr")
    x = parse(texts[0], target)
    return {"canonical": print_element(x), "terms": len(x)}


def register_wordlang_commands() -> None:
    register_commands([Command("parse", "wordlang.parse", parse_command, "canonical form of --expr")])
