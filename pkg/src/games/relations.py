"""
The order relations <= and <| on games over a poset.

    G <= H  iff  every G^L <| H, every H^R satisfies G <| H^R,
                 and G <| H whenever G or H is atomic.
    G <| H  iff  some G^R <= H, or some H^L satisfies G <= H^L,
                 or G = [a], H = [b] with a <= b in the poset.

Both relations share one memo table. Evaluation runs on an explicit stack of
generators rather than Python recursion, so deep games (G_n for n around 50
and beyond) do not hit the interpreter recursion limit.

Every <| subquery issued from leq(G, H) is either tri(G, H) itself or has a
strictly smaller combined size, and every <= subquery issued from tri has a
strictly smaller combined size, so evaluation terminates and a pair can never
be re-entered while in flight.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Generator, Optional, Tuple

from .errors import RelationCycleError
from .store import GameRef, TermStore


class Relation(str, Enum):
    LEQ = "leq"
    TRI = "tri"


class Verdict(str, Enum):
    """Outcome of comparing two games both ways."""
    EQUIVALENT = "equivalent"
    LESS = "<"
    GREATER = ">"
    INCOMPARABLE = "incomparable"


Query = Tuple[Relation, GameRef, GameRef]


@dataclass
class CacheStats:
    hits: int = 0
    misses: int = 0
    size: int = 0

    def to_dict(self) -> Dict[str, int]:
        return {"hits": self.hits, "misses": self.misses, "size": self.size}


class RelationCache:
    """
    Memo table for (relation, G, H) -> bool.

    Entries are only ever added, and a stored value is the result of the pure
    recursive definition, so concurrent writers can at worst duplicate work.
    """

    def __init__(self):
        self._results: Dict[Query, bool] = {}
        self._hits = 0
        self._misses = 0

    def __len__(self) -> int:
        return len(self._results)

    def get(self, query: Query) -> Optional[bool]:
        result = self._results.get(query)
        if result is None:
            self._misses += 1
        else:
            self._hits += 1
        return result

    def put(self, query: Query, result: bool) -> None:
        self._results[query] = result

    def clear(self) -> None:
        self._results.clear()
        self._hits = 0
        self._misses = 0

    def stats(self) -> CacheStats:
        return CacheStats(hits=self._hits, misses=self._misses, size=len(self._results))


class RelationEngine:
    """
    Memoized <= / <| over one TermStore.

    Example:
        store = TermStore(linear_order(5))
        engine = RelationEngine(store)
        engine.leq(store.atom_game(0), store.atom_game(1))  # True
    """

    def __init__(self, store: TermStore, cache: Optional[RelationCache] = None):
        self.store = store
        self.cache = cache if cache is not None else RelationCache()

    # Public relations

    def leq(self, g: GameRef, h: GameRef) -> bool:
        return self._evaluate((Relation.LEQ, g, h))

    def tri(self, g: GameRef, h: GameRef) -> bool:
        return self._evaluate((Relation.TRI, g, h))

    def equivalent(self, g: GameRef, h: GameRef) -> bool:
        return self.leq(g, h) and self.leq(h, g)

    def strictly_less(self, g: GameRef, h: GameRef) -> bool:
        return self.leq(g, h) and not self.leq(h, g)

    def compare(self, g: GameRef, h: GameRef) -> Verdict:
        forward = self.leq(g, h)
        backward = self.leq(h, g)
        if forward and backward:
            return Verdict.EQUIVALENT
        if forward:
            return Verdict.LESS
        if backward:
            return Verdict.GREATER
        return Verdict.INCOMPARABLE

    def is_locally_monotone(self, g: GameRef) -> bool:
        """G <= G^L for every left option and G^R <= G for every right option."""
        term = self.store.term(g)
        return all(self.leq(g, gl) for gl in term.left) and all(self.leq(gr, g) for gr in term.right)

    def is_monotone(self, g: GameRef) -> bool:
        """Every position of G is locally monotone."""
        return all(self.is_locally_monotone(p) for p in sorted(self.store.positions(g)))

    # Evaluation

    def _evaluate(self, query: Query) -> bool:
        _, g, h = query
        self.store.check(g)
        self.store.check(h)

        cached = self.cache.get(query)
        if cached is not None:
            return cached

        stack = [(query, self._steps(query))]
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
                self.cache.put(current, answer)
                continue

            cached = self.cache.get(sub)
            if cached is not None:
                answer = cached
                continue
            if sub in in_flight:
                raise RelationCycleError(f"re-entered in-flight query {sub[0].value}{sub[1:]!r}")
            in_flight.add(sub)
            stack.append((sub, self._steps(sub)))
            answer = None

        return bool(answer)

    def log_stats(self) -> None:
        logging.debug(f"Relation cache: {self.cache.stats().to_dict()}")

    def _steps(self, query: Query) -> Generator[Query, bool, bool]:
        relation, g, h = query
        if relation is Relation.LEQ:
            return self._leq_steps(g, h)
        return self._tri_steps(g, h)

    def _leq_steps(self, g: GameRef, h: GameRef) -> Generator[Query, bool, bool]:
        gt = self.store.term(g)
        ht = self.store.term(h)
        for gl in gt.left:
            if not (yield (Relation.TRI, gl, h)):
                return False
        for hr in ht.right:
            if not (yield (Relation.TRI, g, hr)):
                return False
        if gt.is_atomic or ht.is_atomic:
            return (yield (Relation.TRI, g, h))
        return True

    def _tri_steps(self, g: GameRef, h: GameRef) -> Generator[Query, bool, bool]:
        gt = self.store.term(g)
        ht = self.store.term(h)
        for gr in gt.right:
            if (yield (Relation.LEQ, gr, h)):
                return True
        for hl in ht.left:
            if (yield (Relation.LEQ, g, hl)):
                return True
        if gt.is_atomic and ht.is_atomic:
            return self.store.poset.le(gt.atom, ht.atom)
        return False
