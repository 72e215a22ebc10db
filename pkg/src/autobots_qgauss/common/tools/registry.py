# ABOUTME: Command registry - each domain registers the CLI commands it serves.
# ABOUTME: One command maps to exactly one module operation.

from collections.abc import Callable, Iterable
from dataclasses import dataclass
from typing import Any

from autobots_qgauss.common.observability import get_logger

logger = get_logger(__name__)

Handler = Callable[[Any], dict[str, Any]]


@dataclass(frozen=True)
class Command:
    """A CLI subcommand bound to a single module operation."""

    name: str
    operation: str
    handler: Handler
    help: str = ""


_COMMANDS: dict[str, Command] = {}


def register_commands(commands: Iterable[Command]) -> None:
    """Register commands into the shared pool.

    Re-registering the same name with the same operation is a no-op, so domain
    registration functions may be called more than once.

    Raises:
        ValueError: If a name is already bound to a different operation.
    """
    for command in commands:
        existing = _COMMANDS.get(command.name)
        if existing is not None and existing.operation != command.operation:
            raise ValueError(
                f"Command '{command.name}' already bound to '{existing.operation}'"
            )
        _COMMANDS[command.name] = command
        logger.debug(f"registered command {command.name} -> {command.operation}")


def get_command(name: str) -> Command:
    """Look up a registered command.

    Raises:
        KeyError: If the command is unknown.
    """
    return _COMMANDS[name]


def list_commands() -> list[Command]:
    """All registered commands, sorted by name."""
    return [_COMMANDS[name] for name in sorted(_COMMANDS)]


def _reset_commands() -> None:
    _COMMANDS.clear()
