"""
Logging utility for the toolkit.

Console output goes to stderr: stdout carries emitted artifacts (JSON, DOT,
OFF) and must stay byte-clean.
"""

import logging
import sys
from datetime import datetime
from typing import Dict

from config.settings import settings

LOG_DIR = settings.LOG_DIR
LOG_FILE = LOG_DIR / f'lgtoolkit_{datetime.now().strftime("%Y%m%d")}.log'

# console handler of every logger built by setup_logger, keyed by logger name
_console_handlers: Dict[str, logging.Handler] = {}


def _level(name: str) -> int:
    return getattr(logging, name.upper(), logging.INFO)


def setup_logger(name: str, log_level: str = None) -> logging.Logger:
    """
    Set up a logger with a console handler and, when LOG_TO_FILE is on, a
    detailed file handler under LOG_DIR.

    Args:
        name: Logger name (typically __name__)
        log_level: Console level (DEBUG, INFO, WARNING, ERROR, CRITICAL)

    Returns:
        Configured logger instance
    """
    logger = logging.getLogger(name)

    # Don't add handlers if logger already has them
    if logger.handlers:
        return logger

    logger.setLevel(logging.DEBUG)
    logger.propagate = False

    if settings.LOG_TO_FILE:
        LOG_DIR.mkdir(parents=True, exist_ok=True)
        file_handler = logging.FileHandler(LOG_FILE)
        file_handler.setLevel(logging.DEBUG)
        file_handler.setFormatter(logging.Formatter(
            '%(asctime)s - %(name)s - %(levelname)s - %(funcName)s:%(lineno)d - %(message)s',
            datefmt='%Y-%m-%d %H:%M:%S'
        ))
        logger.addHandler(file_handler)

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(_level(log_level or settings.LOG_LEVEL))
    console_handler.setFormatter(logging.Formatter('%(asctime)s - %(levelname)s - %(message)s', datefmt='%H:%M:%S'))
    logger.addHandler(console_handler)
    _console_handlers[name] = console_handler

    return logger


def set_console_level(level: str) -> None:
    """Change the stderr level of every toolkit logger (lgtk --verbose / --quiet)."""
    for handler in _console_handlers.values():
        handler.setLevel(_level(level))


# Create default logger
default_logger = setup_logger('lgtoolkit')
