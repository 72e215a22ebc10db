# ABOUTME: Unit tests for the logging helpers.

import logging

from autobots_qgauss.common.observability import ROOT_LOGGER_NAME, configure_logging, get_logger


def test_get_logger_namespaces_under_root():
    assert get_logger("foo").name == f"{ROOT_LOGGER_NAME}.foo"
    assert get_logger(f"{ROOT_LOGGER_NAME}.bar").name == f"{ROOT_LOGGER_NAME}.bar"


def test_configure_logging_is_idempotent():
    """Test repeated configuration keeps a single stderr handler."""
    root = logging.getLogger(ROOT_LOGGER_NAME)
    saved = (list(root.handlers), root.level, root.propagate)
    try:
        configure_logging("INFO")
        configure_logging("DEBUG")
        marked = [h for h in root.handlers if getattr(h, "_qgauss", False)]
        assert len(marked) == 1
        assert root.level == logging.DEBUG
    finally:
        root.handlers[:] = saved[0]
        root.setLevel(saved[1])
        root.propagate = saved[2]
