"""Logging configuration for hurwitz_strata.

All module loggers live under the ``hurwitz_strata`` namespace and share the handlers of
that parent logger, so a log file opened by the CLI collects records from every module.
"""

import logging
import os
import sys
from datetime import datetime
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv

# Pick up STRATA_LOG_LEVEL from a local .env file
load_dotenv()

ROOT_NAME = 'hurwitz_strata'

# Default log levels
DEFAULT_CONSOLE_LEVEL = logging.WARNING
DEFAULT_FILE_LEVEL = logging.DEBUG

# Log format
LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
DATE_FORMAT = '%Y-%m-%d %H:%M:%S'


def console_level_from_env() -> int:
    """Console level named by STRATA_LOG_LEVEL, DEFAULT_CONSOLE_LEVEL if unset or unknown."""
    name = os.getenv('STRATA_LOG_LEVEL', '').upper()
    level = logging.getLevelName(name) if name else None
    return level if isinstance(level, int) else DEFAULT_CONSOLE_LEVEL


def _root_logger() -> logging.Logger:
    """Package logger with a stderr handler, created on first use.

    stdout is reserved for command results.
    """
    root = logging.getLogger(ROOT_NAME)
    if root.handlers:
        return root

    console_level = console_level_from_env()
    root.setLevel(min(console_level, DEFAULT_FILE_LEVEL))
    root.propagate = False

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(console_level)
    console_handler.setFormatter(logging.Formatter(LOG_FORMAT, DATE_FORMAT))
    root.addHandler(console_handler)
    return root


def attach_log_file(log_dir: Path, level: int = DEFAULT_FILE_LEVEL) -> Path:
    """Add a timestamped file handler to the package logger.

    Args:
        log_dir: Directory for the log file, created if missing
        level: Logging level for file output

    Returns:
        Path of the log file
    """
    root = _root_logger()
    log_dir = Path(log_dir).resolve()
    for handler in root.handlers:
        is_file = isinstance(handler, logging.FileHandler)
        if is_file and Path(handler.baseFilename).parent == log_dir:
            return Path(handler.baseFilename)

    os.makedirs(log_dir, exist_ok=True)
    timestamp = datetime.now().strftime('%Y%m%d_%H%M%S')
    log_file = log_dir / f'hurwitz_strata_{timestamp}.log'

    file_handler = logging.FileHandler(log_file, encoding='utf-8')
    file_handler.setLevel(level)
    file_handler.setFormatter(logging.Formatter(LOG_FORMAT, DATE_FORMAT))
    root.addHandler(file_handler)
    return log_file


def get_logger(name: str, log_dir: Optional[Path] = None) -> logging.Logger:
    """Get a logger below the package namespace.

    Args:
        name: Name of the logger, usually the module name
        log_dir: Directory for a log file shared by all package loggers

    Returns:
        Logger instance
    """
    _root_logger()
    if log_dir:
        attach_log_file(log_dir)

    # Scripts run as __main__ log as the command-line front end
    if name == '__main__' or name == 'main':
        name = f'{ROOT_NAME}.cli'
    elif not name.startswith(ROOT_NAME):
        name = f'{ROOT_NAME}.{name}'
    return logging.getLogger(name)
