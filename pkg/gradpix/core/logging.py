"""
Logging Setup
=============
Configures the root ``gradpix`` logger once per process.
"""

import logging
from typing import Optional

from gradpix.core.config import get_settings


def setup_logging(level: Optional[str] = None, fmt: Optional[str] = None) -> None:
    """
    Attach a stream handler to the ``gradpix`` logger.

    Worker processes call this too, so repeated calls only adjust the level.
    """
    logger = logging.getLogger("gradpix")
    settings = get_settings()
    logger.setLevel((level or settings.LOG_LEVEL).upper())
    if not logger.handlers:
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter(fmt or settings.LOG_FORMAT))
        logger.addHandler(handler)


def level_for_verbosity(verbose: int) -> str:
    if verbose >= 2:
        return "DEBUG"
    if verbose == 1:
        return "INFO"
    return get_settings().LOG_LEVEL
