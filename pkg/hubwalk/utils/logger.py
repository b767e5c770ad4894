"""
hubwalk — Structured Logger
Console + optional rotating-file logging shared by every service module.
"""
import logging
import sys
import os
from logging.handlers import RotatingFileHandler

from hubwalk.config import Config

LOG_FORMAT = '[%(asctime)s] %(levelname)-8s %(name)-24s %(message)s'
DATE_FORMAT = '%Y-%m-%d %H:%M:%S'

_created: set = set()


def setup_logger(name: str = "Hubwalk", level: str = None) -> logging.Logger:
    """
    Create a named logger with console + rotating file output.

    Args:
        name:  Logger name (usually the service or class).
        level: Override log level (DEBUG/INFO/WARNING/ERROR). Defaults to
               env LOG_LEVEL or WARNING.

    Returns:
        Configured logging.Logger instance.
    """
    logger = logging.getLogger(name)

    # Avoid adding handlers twice when modules re-import
    if logger.handlers:
        return logger

    resolved_level = getattr(
        logging,
        (level or Config.LOG_LEVEL or 'WARNING').upper(),
        logging.WARNING
    )
    logger.setLevel(resolved_level)
    logger.propagate = False
    _created.add(name)

    formatter = logging.Formatter(LOG_FORMAT, datefmt=DATE_FORMAT)

    # --- Console handler (always). stdout is reserved for command output ---
    console = logging.StreamHandler(sys.stderr)
    console.setLevel(resolved_level)
    console.setFormatter(formatter)
    logger.addHandler(console)

    # --- Rotating file handler (only when configured and writable) ---
    if Config.LOG_DIR:
        try:
            os.makedirs(Config.LOG_DIR, exist_ok=True)
            file_handler = RotatingFileHandler(
                os.path.join(Config.LOG_DIR, f'{name.lower().replace(" ", "_")}.log'),
                maxBytes=5 * 1024 * 1024,   # 5 MB
                backupCount=3,
                encoding='utf-8'
            )
            file_handler.setLevel(resolved_level)
            file_handler.setFormatter(formatter)
            logger.addHandler(file_handler)
        except OSError:
            logger.debug("File logging unavailable, running console-only.")

    return logger


def set_level(level: str) -> None:
    """Re-level every hubwalk logger already created (used by the CLI -v flag)."""
    resolved = getattr(logging, level.upper(), logging.WARNING)
    for name in _created:
        logger = logging.getLogger(name)
        logger.setLevel(resolved)
        for handler in logger.handlers:
            handler.setLevel(resolved)
