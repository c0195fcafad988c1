"""
Logging configuration for the star representation toolkit.
Diagnostics go to standard error; standard output carries JSON summaries only.
"""
import sys
from typing import Optional

from loguru import logger

from app.core.config import settings


def setup_logging(level: Optional[str] = None):
    """Configure loguru logger with application settings."""

    # Remove default handler
    logger.remove()

    level = level or settings.log_level

    logger.add(
        sys.stderr,
        format=settings.log_format,
        level=level,
        colorize=False
    )

    if settings.log_file:
        logger.add(
            settings.log_file,
            rotation="1 day",
            retention="30 days",
            level=level,
            format=settings.log_format,
            enqueue=True
        )

    return logger


# Initialize logger
log = setup_logging()
