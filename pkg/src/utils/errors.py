"""
Exception types raised by the chain reachability toolkit.
"""
from typing import Optional


class ChainReachError(Exception):
    """Base class for all toolkit errors."""


class InputError(ChainReachError):
    """Invalid vertex ids, edges or generator parameters."""


class ParseError(InputError):
    """
    A malformed line in one of the flat file formats.

    Attributes:
        line: 1-based line number of the offending line (None if unknown)
    """

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class CycleError(ChainReachError):
    """
    The graph is not acyclic.

    Attributes:
        witness: a vertex that lies on a directed cycle
    """

    def __init__(self, witness: int):
        self.witness = witness
        super().__init__(f"graph contains a cycle through vertex {witness}")


class PreconditionError(ChainReachError):
    """An algorithm was called on input that violates its precondition."""


class ConfigError(ChainReachError):
    """The configuration file could not be parsed."""
