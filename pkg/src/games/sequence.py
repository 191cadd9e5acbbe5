"""
The increasing sequence of monotone games over L_5, and mean values.

    star      = <-1 | -3>
    M(G)      = <1 | G>
    P(G)      = <G | -2>
    P*(G)     = <G | star>
    P^(n)(G)  = P(G) for odd n, P*(G) for even n
    G_0 = 0,  G_{n+1} = M(P^(n)(G_n))

The constructors need the atoms -3, -2, -1, 0 and 1, so they work over L_5 or
any longer chain.
"""

from __future__ import annotations

from dataclasses import dataclass
from numbers import Integral
from typing import Dict, List, Optional

from .errors import PosetError
from .store import GameRef, TermStore

REQUIRED_LABELS = (-3, -2, -1, 0, 1)


class GameSequence:
    """
    Builds star, M, P, P*, P^(n) and G_n in a TermStore.

    G_n terms are cached, so g_seq(n) is linear in n the first time and
    constant afterwards.
    """

    def __init__(self, store: TermStore):
        missing = [label for label in REQUIRED_LABELS if not store.poset.has_label(label)]
        if missing:
            raise PosetError(
                f"poset {store.poset.name} lacks atoms {missing}; the sequence needs -3..1 (use L5 or longer)"
            )
        self.store = store
        self._games: List[GameRef] = [store.atom_game(0)]

    def atom(self, label: int) -> GameRef:
        return self.store.atom_game(label)

    def star(self) -> GameRef:
        return self.store.composite([self.atom(-1)], [self.atom(-3)])

    def m(self, g: GameRef) -> GameRef:
        return self.store.composite([self.atom(1)], [g])

    def p(self, g: GameRef) -> GameRef:
        return self.store.composite([g], [self.atom(-2)])

    def p_star(self, g: GameRef) -> GameRef:
        return self.store.composite([g], [self.star()])

    def p_n(self, n: int, g: GameRef) -> GameRef:
        if n < 0:
            raise ValueError(f"P^(n) needs n >= 0, got {n}")
        return self.p(g) if n % 2 == 1 else self.p_star(g)

    def g_seq(self, n: int) -> GameRef:
        if n < 0:
            raise ValueError(f"G_n needs n >= 0, got {n}")
        while len(self._games) <= n:
            k = len(self._games) - 1
            self._games.append(self.m(self.p_n(k, self._games[k])))
        return self._games[n]

    def right_of(self, n: int) -> GameRef:
        """P^(n)(G_n), the unique right option of G_{n+1}."""
        return self.p_n(n, self.g_seq(n))


@dataclass(frozen=True)
class MeanValue:
    """
    Mean value of a constant-temperature-1 game: the final score equals
    (Left moves - Right moves) + value. `value` is None outside that class.
    """
    value: Optional[int]

    @property
    def defined(self) -> bool:
        return self.value is not None

    def __str__(self) -> str:
        return "absent" if self.value is None else str(self.value)


def mean_value(store: TermStore, g: GameRef, cache: Optional[Dict[GameRef, Optional[int]]] = None) -> MeanValue:
    """
    Atoms take their integer label. A composite has mean C when every left
    option has mean C+1 and every right option has mean C-1.
    """
    means = cache if cache is not None else {}
    for position in sorted(store.positions(g)):
        if position in means:
            continue
        term = store.term(position)
        if term.is_atomic:
            label = term.atom.label
            means[position] = int(label) if isinstance(label, Integral) and not isinstance(label, bool) else None
            continue
        candidates = {means[o] - 1 if means[o] is not None else None for o in term.left}
        candidates |= {means[o] + 1 if means[o] is not None else None for o in term.right}
        means[position] = candidates.pop() if len(candidates) == 1 else None
    return MeanValue(means[g])
