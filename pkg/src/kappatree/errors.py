"""Exception types shared across the package."""

from __future__ import annotations


class KappatreeError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(KappatreeError):
    """Malformed graph input; carries the offending line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DisconnectedGraphError(KappatreeError):
    """The input graph is not connected; analysis requires connectedness."""


class InvariantError(KappatreeError):
    """An internal structural guarantee failed; indicates a bug, not bad input."""


class OracleBudgetError(KappatreeError):
    """A brute-force oracle was asked to run above its configured budget."""
