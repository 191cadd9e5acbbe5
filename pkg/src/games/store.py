"""
Hash-consed storage of game terms over one poset.

Every game is interned once; a GameRef is a handle (store id, creation index).
Composite option sets are deduplicated and ordered by creation index, so two
structurally equal games always receive the same handle. The store is
append-only and a term only references terms created before it, which makes
creation order a topological order of the term graph.
"""

from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass
from typing import Dict, FrozenSet, Hashable, Iterable, List, Optional, Tuple, Union

from .errors import EmptyOptionsError, ForeignGameError
from .poset import Atom, Poset

_store_ids = itertools.count()


@dataclass(frozen=True, order=True)
class GameRef:
    """Handle into a TermStore. Equal handles mean structurally identical games."""
    store_id: int
    index: int

    def __repr__(self) -> str:
        return f"GameRef#{self.index}"


@dataclass(frozen=True)
class GameTerm:
    """
    A stored game: atomic [a] when `atom` is set, composite <left|right> otherwise.

    Attributes:
        atom: The atom of an atomic game, or None.
        left: Left options, canonically ordered.
        right: Right options, canonically ordered.
        size: Number of nodes in the unfolded game tree.
        depth: Longest option chain below this term (0 for atoms).
    """
    atom: Optional[Atom]
    left: Tuple[GameRef, ...] = ()
    right: Tuple[GameRef, ...] = ()
    size: int = 1
    depth: int = 0

    @property
    def is_atomic(self) -> bool:
        return self.atom is not None


class TermStore:
    """
    Append-only, per-poset store of game terms.

    Reads are safe from any thread; insertion takes an exclusive lock.
    """

    def __init__(self, poset: Poset):
        self.poset = poset
        self.id = next(_store_ids)
        self._terms: List[GameTerm] = []
        self._index: Dict[Tuple, int] = {}
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._terms)

    def __repr__(self) -> str:
        return f"TermStore({self.poset.name}, {len(self)} terms)"

    # Construction

    def atom_game(self, atom: Union[Atom, Hashable]) -> GameRef:
        """The game [a]. Accepts an Atom of this poset or one of its labels."""
        if not isinstance(atom, Atom):
            atom = self.poset.atom(atom)
        self.poset.check_atom(atom)
        return self._intern(("atom", atom.index), lambda: GameTerm(atom=atom))

    def composite(self, left: Iterable[GameRef], right: Iterable[GameRef]) -> GameRef:
        """The game <left|right>; both option sets must be non-empty."""
        left_key = self._canonical(left)
        right_key = self._canonical(right)
        if not left_key:
            raise EmptyOptionsError("empty left option set")
        if not right_key:
            raise EmptyOptionsError("empty right option set")

        def build() -> GameTerm:
            options = [self._terms[i] for i in left_key + right_key]
            return GameTerm(
                atom=None,
                left=tuple(GameRef(self.id, i) for i in left_key),
                right=tuple(GameRef(self.id, i) for i in right_key),
                size=1 + sum(t.size for t in options),
                depth=1 + max(t.depth for t in options),
            )

        return self._intern(("composite", left_key, right_key), build)

    def _canonical(self, refs: Iterable[GameRef]) -> Tuple[int, ...]:
        indices = set()
        for ref in refs:
            self.check(ref)
            indices.add(ref.index)
        return tuple(sorted(indices))

    def _intern(self, key: Tuple, build) -> GameRef:
        index = self._index.get(key)
        if index is None:
            with self._lock:
                index = self._index.get(key)
                if index is None:
                    index = len(self._terms)
                    self._terms.append(build())
                    self._index[key] = index
        return GameRef(self.id, index)

    # Queries

    def owns(self, ref: GameRef) -> bool:
        return isinstance(ref, GameRef) and ref.store_id == self.id and 0 <= ref.index < len(self._terms)

    def check(self, ref: GameRef) -> None:
        if not self.owns(ref):
            raise ForeignGameError(f"{ref!r} does not belong to {self!r}")

    def term(self, ref: GameRef) -> GameTerm:
        self.check(ref)
        return self._terms[ref.index]

    def is_atomic(self, ref: GameRef) -> bool:
        return self.term(ref).is_atomic

    def atom_of(self, ref: GameRef) -> Optional[Atom]:
        return self.term(ref).atom

    def left_options(self, ref: GameRef) -> Tuple[GameRef, ...]:
        return self.term(ref).left

    def right_options(self, ref: GameRef) -> Tuple[GameRef, ...]:
        return self.term(ref).right

    def size(self, ref: GameRef) -> int:
        return self.term(ref).size

    def depth(self, ref: GameRef) -> int:
        return self.term(ref).depth

    def positions(self, ref: GameRef) -> FrozenSet[GameRef]:
        """G together with every option, option of an option, and so on."""
        self.check(ref)
        seen = {ref}
        stack = [ref]
        while stack:
            term = self._terms[stack.pop().index]
            for option in term.left + term.right:
                if option not in seen:
                    seen.add(option)
                    stack.append(option)
        return frozenset(seen)

    def refs(self) -> List[GameRef]:
        """All handles in creation order."""
        return [GameRef(self.id, i) for i in range(len(self._terms))]
