"""
Finite posets of atoms.

A Poset owns its atoms; the order is kept as a read-only boolean matrix
`leq[i, j] == True iff atom i <= atom j`. Linear orders L_n are built with
`linear_order(n)`, whose labels are the integers 2-n .. 1, so that L_5 reads
-3 < -2 < -1 < 0 < 1.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Dict, Hashable, Iterable, List, Sequence, Tuple

import numpy as np

from .errors import ForeignGameError, PosetError

_poset_ids = itertools.count()

_CHAIN_SPEC = re.compile(r"^\s*L\s*(\d+)\s*$", re.IGNORECASE)


@dataclass(frozen=True)
class Atom:
    """
    An element of a poset.

    Attributes:
        index: Position of the atom within its poset.
        label: Display name, unique within the poset (integers for L_n).
        poset_id: Identity of the owning poset.
    """
    index: int
    label: Hashable
    poset_id: int

    def __str__(self) -> str:
        return str(self.label)


class Poset:
    """
    Immutable finite partial order on atoms.

    The relation is checked for reflexivity, antisymmetry and transitivity
    at construction time.

    Example:
        L5 = linear_order(5)
        L5.le(L5.atom(-3), L5.atom(1))  # True
    """

    def __init__(self, labels: Sequence[Hashable], leq: np.ndarray, name: str = "custom"):
        labels = list(labels)
        if not labels:
            raise PosetError("a poset needs at least one atom")
        if len(set(labels)) != len(labels):
            raise PosetError("atom labels must be unique")

        leq = np.array(leq, dtype=bool)
        n = len(labels)
        if leq.shape != (n, n):
            raise PosetError(f"order matrix must be {n}x{n}, got {leq.shape}")
        _check_partial_order(leq)
        leq.flags.writeable = False

        self.id = next(_poset_ids)
        self.name = name
        self.leq = leq
        self.atoms: Tuple[Atom, ...] = tuple(
            Atom(index=i, label=label, poset_id=self.id) for i, label in enumerate(labels)
        )
        self._by_label: Dict[Hashable, Atom] = {a.label: a for a in self.atoms}

    @classmethod
    def from_covers(
        cls,
        labels: Sequence[Hashable],
        covers: Iterable[Tuple[Hashable, Hashable]],
        name: str = "custom",
    ) -> "Poset":
        """Build a poset from (lower, upper) pairs by reflexive-transitive closure."""
        labels = list(labels)
        position = {label: i for i, label in enumerate(labels)}
        n = len(labels)
        reach = np.eye(n, dtype=bool)
        for lo, hi in covers:
            if lo not in position or hi not in position:
                raise PosetError(f"cover ({lo}, {hi}) names an unknown atom")
            reach[position[lo], position[hi]] = True
        # Warshall closure
        for k in range(n):
            reach |= np.outer(reach[:, k], reach[k, :])
        return cls(labels, reach, name=name)

    @classmethod
    def from_spec(cls, spec: str) -> "Poset":
        """Parse a poset spec such as "L5"."""
        match = _CHAIN_SPEC.match(spec or "")
        if not match:
            raise PosetError(f"unknown poset spec {spec!r} (expected L<n>, e.g. L5)")
        return linear_order(int(match.group(1)))

    def __len__(self) -> int:
        return len(self.atoms)

    def __iter__(self):
        return iter(self.atoms)

    def __repr__(self) -> str:
        return f"Poset({self.name}: {', '.join(str(a) for a in self.atoms)})"

    @property
    def labels(self) -> List[Hashable]:
        return [a.label for a in self.atoms]

    def atom(self, label: Hashable) -> Atom:
        """Look up an atom by label."""
        try:
            return self._by_label[label]
        except (KeyError, TypeError):
            raise PosetError(f"poset {self.name} has no atom labelled {label!r}") from None

    def has_label(self, label: Hashable) -> bool:
        try:
            return label in self._by_label
        except TypeError:
            return False

    def owns(self, atom: Atom) -> bool:
        return atom.poset_id == self.id

    def check_atom(self, atom: Atom) -> None:
        if not self.owns(atom):
            raise ForeignGameError(f"atom {atom} does not belong to poset {self.name}")

    def le(self, a: Atom, b: Atom) -> bool:
        """Order on atoms."""
        self.check_atom(a)
        self.check_atom(b)
        return bool(self.leq[a.index, b.index])

    def comparable(self, a: Atom, b: Atom) -> bool:
        return self.le(a, b) or self.le(b, a)

    @property
    def is_chain(self) -> bool:
        return bool(np.all(self.leq | self.leq.T))


def _check_partial_order(leq: np.ndarray) -> None:
    if not np.all(np.diag(leq)):
        raise PosetError("order is not reflexive")
    both = leq & leq.T
    if np.any(both & ~np.eye(len(leq), dtype=bool)):
        raise PosetError("order is not antisymmetric")
    composed = (leq.astype(np.int64) @ leq.astype(np.int64)) > 0
    if np.any(composed & ~leq):
        raise PosetError("order is not transitive")


def linear_order(n: int) -> Poset:
    """
    The chain L_n with labels 2-n < ... < 0 < 1.

    For n <= 5 these are the last n elements of -3, -2, -1, 0, 1; longer
    chains extend downward.
    """
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool) or n < 1:
        raise PosetError(f"linear_order needs n >= 1, got {n!r}")
    n = int(n)
    labels = list(range(2 - n, 2))
    leq = np.triu(np.ones((n, n), dtype=bool))
    return Poset(labels, leq, name=f"L{n}")
