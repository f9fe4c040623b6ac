"""Exception types shared across the package.

The CLI maps these to exit codes: parse errors to 1, resource limits to 2.
"""

from __future__ import annotations


class ParseError(ValueError):
    """Syntax error in a formula text; ``position`` is a 0-based offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnknownAtomError(ParseError):
    """Atom outside a declared, closed atom set."""


class FragmentError(ValueError):
    """Formula is outside the syntactic fragment a construction requires."""


class AcceptanceShapeError(ValueError):
    """Acceptance condition does not have the shape an operation requires."""


class ResourceLimitError(RuntimeError):
    """Base class for configurable resource caps."""


class StateLimitError(ResourceLimitError):
    """State/class count exceeded the configured cap."""


class AdviceLimitError(ResourceLimitError):
    """Advice pair count exceeded the configured cap."""
