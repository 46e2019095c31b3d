"""Logging setup and the log-line format shared by every command."""

import logging

from ..constants import (
    LOG_DATE_FORMAT,
    LOG_FORMAT,
    LOG_LEVEL_INFO,
    LOG_LEVELS,
)

PACKAGE_LOGGER = "micro_de"


def configure_logging(level: str = LOG_LEVEL_INFO) -> logging.Logger:
    """Attach one stream handler in the standard format to the package logger.

    Calling it again only changes the level, so repeated CLI invocations in one
    process do not stack handlers.
    """
    level = level.upper()
    if level not in LOG_LEVELS:
        raise ValueError(f"Unknown log level '{level}', expected one of {LOG_LEVELS}")

    logger = logging.getLogger(PACKAGE_LOGGER)
    logger.setLevel(level)
    if not logger.handlers:
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter(LOG_FORMAT, datefmt=LOG_DATE_FORMAT))
        logger.addHandler(handler)
    return logger
