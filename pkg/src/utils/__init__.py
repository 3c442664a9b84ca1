"""
Initialization file for utilities module.
"""

from .config import Config
from .errors import (
    ChainReachError,
    ConfigError,
    CycleError,
    InputError,
    ParseError,
    PreconditionError,
)
from .logger import setup_logger
from .timing import PhaseTimer, elapsed_ms

__all__ = [
    'Config',
    'setup_logger',
    'PhaseTimer',
    'elapsed_ms',
    'ChainReachError',
    'ConfigError',
    'CycleError',
    'InputError',
    'ParseError',
    'PreconditionError',
]
