"""
Logging utilities for the supercritical biharmonic toolkit.
Provides structured logging with configurable levels.
"""

from __future__ import annotations

import logging
import sys
from typing import Optional

PACKAGE_LOGGER = "sbe_backend"


def get_logger(name: str, level: Optional[str] = None) -> logging.Logger:
    """
    Get a configured logger instance.

    All loggers hang below the package logger, which owns the single stderr
    handler; passing ``level`` re-levels the whole package (the CLI does this
    for --log-level).

    Args:
        name: Logger name (typically __name__).
        level: Log level (DEBUG, INFO, WARNING, ERROR).
               Defaults to the ``log_level`` entry of configs/defaults.yaml.

    Returns:
        Configured logging.Logger instance.
    """
    package = logging.getLogger(PACKAGE_LOGGER)

    if not package.handlers:
        # Only configure if not already configured
        if level is None:
            from .config_loader import load_defaults

            level = load_defaults().log_level

        # stdout is reserved for the JSON summary of a CLI run
        handler = logging.StreamHandler(sys.stderr)
        formatter = logging.Formatter(
            fmt="%(asctime)s | %(levelname)-8s | %(name)s | %(message)s",
            datefmt="%Y-%m-%d %H:%M:%S",
        )
        handler.setFormatter(formatter)
        package.addHandler(handler)
        package.propagate = False

    if level is not None:
        package.setLevel(getattr(logging, level.upper(), logging.INFO))

    if name != PACKAGE_LOGGER and not name.startswith(PACKAGE_LOGGER + "."):
        name = f"{PACKAGE_LOGGER}.{name}"
    return logging.getLogger(name)
