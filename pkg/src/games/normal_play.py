"""
Normal-play games and the translation np(G).

np(G) replaces every atom of G by the empty game 0 = {|}. For games of
constant temperature 1 with equal mean values, G <= H exactly when
np(G) <= np(H) in the normal-play order

    X <= Y  iff  no X^L satisfies Y <= X^L and no Y^R satisfies Y^R <= X.
"""

from __future__ import annotations

import itertools
import logging
import threading
from dataclasses import dataclass
from typing import Dict, Generator, Iterable, List, Optional, Tuple

from .errors import ForeignGameError, RelationCycleError
from .relations import RelationEngine
from .sequence import mean_value
from .store import GameRef, TermStore

_normal_store_ids = itertools.count()


@dataclass(frozen=True, order=True)
class NormalRef:
    """Handle into a NormalStore."""
    store_id: int
    index: int


@dataclass(frozen=True)
class NormalGame:
    """A normal-play game; either option set may be empty."""
    left: Tuple[NormalRef, ...]
    right: Tuple[NormalRef, ...]


class NormalStore:
    """Hash-consed normal-play terms, ordered by creation index like TermStore."""

    def __init__(self):
        self.id = next(_normal_store_ids)
        self._games: List[NormalGame] = []
        self._index: Dict[Tuple[Tuple[int, ...], Tuple[int, ...]], int] = {}
        self._lock = threading.Lock()
        self.zero = self.game([], [])

    def __len__(self) -> int:
        return len(self._games)

    def game(self, left: Iterable[NormalRef], right: Iterable[NormalRef]) -> NormalRef:
        key = (self._canonical(left), self._canonical(right))
        index = self._index.get(key)
        if index is None:
            with self._lock:
                index = self._index.get(key)
                if index is None:
                    index = len(self._games)
                    self._games.append(NormalGame(
                        left=tuple(NormalRef(self.id, i) for i in key[0]),
                        right=tuple(NormalRef(self.id, i) for i in key[1]),
                    ))
                    self._index[key] = index
        return NormalRef(self.id, index)

    def _canonical(self, refs: Iterable[NormalRef]) -> Tuple[int, ...]:
        indices = set()
        for ref in refs:
            self.check(ref)
            indices.add(ref.index)
        return tuple(sorted(indices))

    def check(self, ref: NormalRef) -> None:
        if not (isinstance(ref, NormalRef) and ref.store_id == self.id and 0 <= ref.index < len(self._games)):
            raise ForeignGameError(f"{ref!r} does not belong to this normal-play store")

    def get(self, ref: NormalRef) -> NormalGame:
        self.check(ref)
        return self._games[ref.index]


@dataclass(frozen=True)
class Correspondence:
    """Result of comparing G <= H against np(G) <= np(H)."""
    leq: bool
    np_leq: bool
    mean_g: Optional[int]
    mean_h: Optional[int]

    @property
    def agree(self) -> bool:
        return self.leq == self.np_leq

    @property
    def in_class(self) -> bool:
        return self.mean_g is not None and self.mean_h is not None

    @property
    def claimed(self) -> bool:
        """Whether the correspondence is asserted for this pair (in class, equal means)."""
        return self.in_class and self.mean_g == self.mean_h

    def to_dict(self) -> dict:
        return {
            "leq": self.leq,
            "np_leq": self.np_leq,
            "agree": self.agree,
            "mean_g": self.mean_g,
            "mean_h": self.mean_h,
            "claimed": self.claimed,
        }


class NormalPlay:
    """
    Translation from a TermStore into normal play, and the memoized
    normal-play order.
    """

    def __init__(self, store: TermStore, normal: Optional[NormalStore] = None):
        self.store = store
        self.normal = normal if normal is not None else NormalStore()
        self._translated: Dict[GameRef, NormalRef] = {}
        self._leq_cache: Dict[Tuple[NormalRef, NormalRef], bool] = {}

    @property
    def zero(self) -> NormalRef:
        return self.normal.zero

    def np(self, g: GameRef) -> NormalRef:
        """Replace every atom of G by 0, keeping the option structure."""
        for position in sorted(self.store.positions(g)):
            if position in self._translated:
                continue
            term = self.store.term(position)
            if term.is_atomic:
                self._translated[position] = self.normal.zero
            else:
                self._translated[position] = self.normal.game(
                    [self._translated[o] for o in term.left],
                    [self._translated[o] for o in term.right],
                )
        return self._translated[g]

    def leq(self, x: NormalRef, y: NormalRef) -> bool:
        """Normal-play X <= Y, evaluated on an explicit stack."""
        self.normal.check(x)
        self.normal.check(y)
        query = (x, y)
        cached = self._leq_cache.get(query)
        if cached is not None:
            return cached

        stack = [(query, self._leq_steps(x, y))]
        in_flight = {query}
        answer: Optional[bool] = None
        while stack:
            current, steps = stack[-1]
            try:
                sub = steps.send(answer)
            except StopIteration as done:
                stack.pop()
                in_flight.discard(current)
                answer = bool(done.value)
                self._leq_cache[current] = answer
                continue
            cached = self._leq_cache.get(sub)
            if cached is not None:
                answer = cached
                continue
            if sub in in_flight:
                raise RelationCycleError(f"re-entered in-flight normal-play query {sub!r}")
            in_flight.add(sub)
            stack.append((sub, self._leq_steps(*sub)))
            answer = None
        return bool(answer)

    def _leq_steps(self, x: NormalRef, y: NormalRef) -> Generator[Tuple[NormalRef, NormalRef], bool, bool]:
        xg = self.normal.get(x)
        yg = self.normal.get(y)
        for xl in xg.left:
            if (yield (y, xl)):
                return False
        for yr in yg.right:
            if (yield (yr, x)):
                return False
        return True

    def strictly_less(self, x: NormalRef, y: NormalRef) -> bool:
        return self.leq(x, y) and not self.leq(y, x)

    def format(self, x: NormalRef) -> str:
        """0 for the empty game, {A,B|C} otherwise."""
        text: Dict[NormalRef, str] = {}
        pending = [x]
        order: List[NormalRef] = []
        seen = set()
        while pending:
            ref = pending.pop()
            if ref in seen:
                continue
            seen.add(ref)
            order.append(ref)
            game = self.normal.get(ref)
            pending.extend(game.left + game.right)
        for ref in sorted(order):
            game = self.normal.get(ref)
            if not game.left and not game.right:
                text[ref] = "0"
            else:
                text[ref] = "{" + ",".join(text[o] for o in game.left) + "|" + ",".join(text[o] for o in game.right) + "}"
        return text[x]

    def correspondence(self, engine: RelationEngine, g: GameRef, h: GameRef) -> Correspondence:
        """Compare G <= H with np(G) <= np(H)."""
        result = Correspondence(
            leq=engine.leq(g, h),
            np_leq=self.leq(self.np(g), self.np(h)),
            mean_g=mean_value(self.store, g).value,
            mean_h=mean_value(self.store, h).value,
        )
        if not result.in_class:
            logging.warning("Normal-play correspondence is only claimed for constant-temperature-1 games")
        elif not result.claimed:
            logging.warning(
                f"Mean values differ ({result.mean_g} vs {result.mean_h}); "
                "the normal-play correspondence is only claimed for equal means"
            )
        return result
