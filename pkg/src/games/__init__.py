"""
Combinatorial games over partially ordered sets of atoms.

Core objects:
- Poset / linear_order: the atom order.
- TermStore: hash-consed game terms over one poset.
- RelationEngine: memoized <= and <| with monotonicity checks.
- GameSequence: star, M, P, P*, P^(n) and G_n over L_5.
- NormalPlay: np(G) and the normal-play order.
"""

from .errors import (
    ConfigError,
    EmptyOptionsError,
    ForeignGameError,
    GameError,
    NotationError,
    PosetError,
    RelationCycleError,
)
from .poset import Atom, Poset, linear_order
from .store import GameRef, GameTerm, TermStore
from .relations import RelationCache, RelationEngine, Verdict
from .sequence import GameSequence, MeanValue, mean_value
from .normal_play import NormalPlay, NormalRef, NormalStore
from .notation import format_game, parse

__all__ = [
    # Errors
    "GameError",
    "PosetError",
    "ForeignGameError",
    "EmptyOptionsError",
    "RelationCycleError",
    "NotationError",
    "ConfigError",
    # Terms
    "Atom",
    "Poset",
    "linear_order",
    "GameRef",
    "GameTerm",
    "TermStore",
    # Relations
    "RelationCache",
    "RelationEngine",
    "Verdict",
    # Sequence
    "GameSequence",
    "MeanValue",
    "mean_value",
    # Normal play
    "NormalPlay",
    "NormalRef",
    "NormalStore",
    # Notation
    "parse",
    "format_game",
]
