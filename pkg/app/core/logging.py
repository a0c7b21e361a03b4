"""
Logging configuration for the Hypertrans application.
Sets up logging on standard error (standard output carries results) with an optional log file.
"""

import logging
import sys
from .config import settings

_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def setup_logging(level: int | None = None) -> logging.Logger:
    """Configure application logging."""

    handlers: list[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    if settings.LOG_FILE:
        handlers.append(logging.FileHandler(settings.LOG_FILE))

    # force=True so the CLI and the API can both call this without stacking handlers
    logging.basicConfig(
        level=logging.WARNING if level is None else level,
        format=_FORMAT,
        handlers=handlers,
        force=True,
    )

    logger = logging.getLogger(__name__)

    if settings.VERBOSE_MODE:
        # In VERBOSE mode, enable all debug logs including third-party libraries
        logging.getLogger().setLevel(logging.DEBUG)
        logger.info("🔍 Verbose mode enabled - all debug logs visible")
    elif settings.DEBUG_MODE:
        # In DEBUG mode, only enable debug logs for our application
        logging.getLogger("app").setLevel(logging.DEBUG)
        logging.getLogger("__main__").setLevel(logging.DEBUG)
        logger.debug("🐛 Debug mode enabled - application debug logs visible")

    if not settings.VERBOSE_MODE:
        # Suppress noisy third-party library logs
        logging.getLogger("sqlalchemy.engine").setLevel(logging.WARNING)
        logging.getLogger("uvicorn.access").setLevel(logging.WARNING)
        logging.getLogger("httpx").setLevel(logging.WARNING)

    return logger


def get_logger(name: str = __name__) -> logging.Logger:
    """Get a logger instance for the given name."""
    return logging.getLogger(name)
