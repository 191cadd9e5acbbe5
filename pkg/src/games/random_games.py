"""
Seeded random game generators for property checks and sampling.
"""

from __future__ import annotations

from typing import Iterator, List, Optional, Union

import numpy as np

from .store import GameRef, TermStore


class RandomGames:
    """
    Draws random games into a TermStore.

    Args:
        store: Target store.
        seed: Seed or an existing numpy Generator.
        atom_probability: Chance that an inner node with depth budget left
            is still drawn as an atom.
    """

    def __init__(
        self,
        store: TermStore,
        seed: Union[int, np.random.Generator, None] = 0,
        atom_probability: float = 0.3,
    ):
        self.store = store
        self.rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
        self.atom_probability = atom_probability
        self._atoms = [store.atom_game(a) for a in store.poset.atoms]

    def atom(self) -> GameRef:
        return self._atoms[int(self.rng.integers(len(self._atoms)))]

    def game(self, max_depth: int, max_options: int = 2) -> GameRef:
        """An arbitrary game of depth at most `max_depth`."""
        if max_depth <= 0 or self.rng.random() < self.atom_probability:
            return self.atom()
        left = [self.game(max_depth - 1, max_options) for _ in range(self._option_count(max_options))]
        right = [self.game(max_depth - 1, max_options) for _ in range(self._option_count(max_options))]
        return self.store.composite(left, right)

    def composite(self, max_depth: int, max_options: int = 2) -> GameRef:
        """Like game(), but never atomic at the top."""
        depth = max(1, max_depth)
        left = [self.game(depth - 1, max_options) for _ in range(self._option_count(max_options))]
        right = [self.game(depth - 1, max_options) for _ in range(self._option_count(max_options))]
        return self.store.composite(left, right)

    def in_class_game(self, mean: int, max_depth: int, max_options: int = 2) -> GameRef:
        """
        A game whose final score is always (Left moves - Right moves) + mean.

        Left options recurse with mean+1, right options with mean-1, and a
        leaf at imbalance k carries the label mean+k.
        """
        poset = self.store.poset
        for label in (mean - max_depth, mean, mean + max_depth):
            if not poset.has_label(label):
                raise ValueError(
                    f"labels {mean - max_depth}..{mean + max_depth} must all be atoms of {poset.name}"
                )
        return self._in_class(mean, max_depth, max_options)

    def _in_class(self, mean: int, depth: int, max_options: int) -> GameRef:
        if depth <= 0 or self.rng.random() < self.atom_probability:
            return self.store.atom_game(mean)
        left = [self._in_class(mean + 1, depth - 1, max_options) for _ in range(self._option_count(max_options))]
        right = [self._in_class(mean - 1, depth - 1, max_options) for _ in range(self._option_count(max_options))]
        return self.store.composite(left, right)

    def in_class_means(self, max_depth: int) -> List[int]:
        """Means for which in_class_game(mean, max_depth) stays inside integer labels."""
        labels = [l for l in self.store.poset.labels if isinstance(l, int)]
        return [m for m in labels if (m - max_depth) in labels and (m + max_depth) in labels]

    def pool(self, count: int, max_depth: int, max_options: int = 2, in_class_mean: Optional[int] = None) -> List[GameRef]:
        """Up to `count` distinct games, drawn until enough or attempts run out."""
        seen = {}
        for _ in range(count * 20):
            if in_class_mean is None:
                g = self.game(max_depth, max_options)
            else:
                g = self.in_class_game(in_class_mean, max_depth, max_options)
            seen.setdefault(g, None)
            if len(seen) >= count:
                break
        return list(seen)

    def triples(self, pool: List[GameRef], count: int) -> Iterator[tuple]:
        for _ in range(count):
            i, j, k = self.rng.integers(len(pool), size=3)
            yield pool[int(i)], pool[int(j)], pool[int(k)]

    def _option_count(self, max_options: int) -> int:
        return int(self.rng.integers(1, max(1, max_options) + 1))


def birthday_games(store: TermStore, birthday: int) -> List[GameRef]:
    """
    Atoms (birthday 0) plus, per further level, every <x|y> with x, y drawn
    from the previous level.
    """
    games = [store.atom_game(a) for a in store.poset.atoms]
    level = list(games)
    for _ in range(birthday):
        next_level = [store.composite([x], [y]) for x in level for y in level]
        for g in next_level:
            if g not in games:
                games.append(g)
        level = games[:]
    return games
