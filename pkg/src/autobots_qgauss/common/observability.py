# ABOUTME: Logging helpers shared by every domain.
# ABOUTME: All records go to stderr; stdout is reserved for JSON reports.

import logging
import sys

ROOT_LOGGER_NAME = "autobots_qgauss"

_FORMAT = "%(asctime)s %(levelname)s [%(name)s] %(message)s"


def get_logger(name: str) -> logging.Logger:
    """Return a logger namespaced under the package root logger."""
    if name == ROOT_LOGGER_NAME or name.startswith(f"{ROOT_LOGGER_NAME}."):
        return logging.getLogger(name)
    return logging.getLogger(f"{ROOT_LOGGER_NAME}.{name}")


def configure_logging(level: str = "WARNING") -> logging.Logger:
    """Install a single stderr handler on the package root logger.

    Calling it again only updates the level.
    """
    root = logging.getLogger(ROOT_LOGGER_NAME)
    root.setLevel(level.upper())
    if not any(getattr(h, "_qgauss", False) for h in root.handlers):
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(_FORMAT))
        handler._qgauss = True  # type: ignore[attr-defined]
        root.addHandler(handler)
    root.propagate = False
    return root
