"""
Exception hierarchy for the Hypertrans application.
Library code raises these; the CLI and the HTTP routes translate them.
"""

from typing import Optional


class HypergraphError(Exception):
    """Base class for every error raised by the pipelines."""

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


class ParseError(HypergraphError):
    """Malformed instance, relation or generalized-node text."""

    def __init__(self, message: str, line: Optional[int] = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class DomainError(HypergraphError):
    """A vertex, attribute or representative that does not belong to the input."""


class PreconditionError(HypergraphError):
    """An operation was called on input that violates its precondition."""
