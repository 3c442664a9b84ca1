"""
Logger setup shared by the CLI, the generators and the validators.

Log records go to stderr so that stdout carries only command results.
"""
import logging
import sys
from pathlib import Path
from typing import Optional, Union

DEFAULT_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def _resolve_level(level: Union[str, int]) -> int:
    if isinstance(level, int):
        return level
    resolved = logging.getLevelName(level.upper())
    # getLevelName maps unknown names to the string "Level <name>"
    return resolved if isinstance(resolved, int) else logging.INFO


def setup_logger(name: Optional[str] = None, level: Union[str, int, None] = None,
                 log_file: Optional[str] = None) -> logging.Logger:
    """
    Configure a named logger from the logging section of the configuration.

    Calling it again for the same name replaces the handlers, so a level or
    file changed through Config().set takes effect on the next call.

    Args:
        name: logger name, 'chainreach' when omitted
        level: level name or number; logging.level when omitted
        log_file: extra file destination; logging.file when omitted

    Returns:
        The configured logger
    """
    from .config import Config
    config = Config()

    logger = logging.getLogger(name or "chainreach")
    logger.setLevel(_resolve_level(level if level is not None else config.get("logging.level", "INFO")))
    logger.propagate = False
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        handler.close()

    formatter = logging.Formatter(config.get("logging.format", DEFAULT_FORMAT))
    destinations = [logging.StreamHandler(sys.stderr)]

    log_file = log_file if log_file is not None else config.get("logging.file")
    if log_file:
        path = Path(log_file)
        path.parent.mkdir(parents=True, exist_ok=True)
        destinations.append(logging.FileHandler(path))

    for handler in destinations:
        handler.setFormatter(formatter)
        logger.addHandler(handler)
    return logger
