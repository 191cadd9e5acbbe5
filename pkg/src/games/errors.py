"""
Error types for games over posets.

Each error also derives from the builtin it specialises, so callers that only
know about ValueError/RuntimeError still catch them.
"""

from __future__ import annotations

from typing import Optional


class GameError(Exception):
    """Base class for all domain errors."""


class PosetError(GameError, ValueError):
    """Partial-order axioms violated, unknown label, or bad poset spec."""


class ForeignGameError(GameError, ValueError):
    """An atom or game handle was used with a store it does not belong to."""


class EmptyOptionsError(GameError, ValueError):
    """A composite game was requested with an empty left or right option set."""


class RelationCycleError(GameError, RuntimeError):
    """A relation query re-entered a pair that is still being evaluated."""


class ConfigError(GameError, ValueError):
    """Configuration could not be loaded."""


class NotationError(GameError, ValueError):
    """
    Game notation could not be parsed.

    Attributes:
        line: 1-based line of the offending token.
        column: 1-based column of the offending token.
    """

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.message = message
        self.line = line
        self.column = column
        if line is not None and column is not None:
            super().__init__(f"line {line}, column {column}: {message}")
        else:
            super().__init__(message)
