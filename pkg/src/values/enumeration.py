"""
Exhaustive enumeration of monotone game values over a finite poset.

Enumeration saturates a table of representatives, one per value. Round 0
holds the atoms. Each later round forms candidates <L|R> whose options are
representatives, keeps those that are locally monotone and not equivalent to
a known value, and stops at the first round that finds nothing new.

Candidates are filtered before they are compared:

- every right option must lie below every left option, which local
  monotonicity and transitivity force (R <= G <= L);
- with pruning on, L and R are antichains of the value order (dominated
  options removed), otherwise every non-empty subset is tried.

Relations between a candidate and the representatives are computed from the
representatives' order matrices, held as integer bitmasks, in one pass over
the representatives in creation order. A representative's options are always
earlier representatives, so each step only needs results already computed.
"""

from __future__ import annotations

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import islice
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from games.poset import Poset
from games.relations import RelationEngine
from games.store import GameRef, TermStore


@dataclass
class EnumerationBudget:
    """
    Limits for one enumeration run.

    Attributes:
        max_rounds: Generation rounds after the atoms.
        max_values: Cap on the number of representatives.
        time_limit: Wall-clock seconds.
    """
    max_rounds: int = 12
    max_values: int = 2000
    time_limit: float = 600.0

    def __post_init__(self):
        if self.max_rounds <= 0 or self.max_values <= 0 or self.time_limit <= 0:
            raise ValueError(f"budget values must be positive: {self}")


@dataclass
class ValueTable:
    """
    Representatives of the monotone values found, with their order.

    Attributes:
        poset: Atom poset the values live over.
        representatives: First-discovered game of each value.
        order: order[i, j] is True iff representatives[i] <= representatives[j].
        generation: Round in which each representative appeared.
        counts_per_round: Number of values after each round (index 0: atoms).
        saturated: A round produced no new value.
        exhausted: Why enumeration stopped early, if it did.
        pruned: Whether option sets were restricted to antichains.
    """
    poset: Poset
    store: TermStore
    representatives: List[GameRef]
    order: np.ndarray
    generation: List[int]
    counts_per_round: List[int]
    saturated: bool
    exhausted: Optional[str] = None
    pruned: bool = True

    def __len__(self) -> int:
        return len(self.representatives)

    @property
    def expected_finite(self) -> bool:
        return self.poset.is_chain and len(self.poset) <= 4

    @property
    def flagged(self) -> bool:
        """Budget ran out on a poset whose value set is known to be finite."""
        return self.expected_finite and not self.saturated

    def to_export(self, formatter: Callable[[GameRef], str]) -> dict:
        names = [formatter(r) for r in self.representatives]
        return {
            "poset": self.poset.name,
            "counts_per_round": list(self.counts_per_round),
            "saturated": self.saturated,
            "representatives": names,
            "hasse_edges": [[names[i], names[j]] for i, j in value_poset_edges(self)],
        }


def value_poset_edges(table: ValueTable) -> List[Tuple[int, int]]:
    """Covering pairs (i, j): representative i < j with nothing strictly between."""
    n = len(table.order)
    if n == 0:
        return []
    lt = table.order & ~np.eye(n, dtype=bool)
    through = (lt.astype(np.int64) @ lt.astype(np.int64)) > 0
    cover = lt & ~through
    return [(int(i), int(j)) for i, j in np.argwhere(cover)]


_CHUNK_SIZE = 4096


@dataclass
class _Rep:
    ref: GameRef
    left: int
    right: int
    atomic: bool
    generation: int


@dataclass
class _Candidate:
    """Candidate <L|R> with its relations to the snapshot representatives."""
    left: int
    right: int
    up: int     # bit k: candidate <= rep k
    tx: int     # bit k: candidate <| rep k
    down: int   # bit k: rep k <= candidate
    tk: int     # bit k: rep k <| candidate


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _subsets_by_size(allowed: int) -> Iterator[int]:
    """Non-empty subsets of `allowed` by size, then by value, generated lazily."""
    positions = list(_bits(allowed))
    top = 1 << len(positions)
    for size in range(1, len(positions) + 1):
        compact = (1 << size) - 1
        while compact < top:
            yield sum(1 << positions[i] for i in _bits(compact))
            # next larger integer with the same number of set bits
            low = compact & -compact
            ripple = compact + low
            compact = ripple | (((compact ^ ripple) >> 2) // low)


class ValueEnumerator:
    """
    Saturating enumerator of monotone values.

    Args:
        store: Term store over the poset; representatives are materialised here.
        engine: Relation engine, used for the atom order.
        prune: Restrict option sets to antichains.
        workers: Threads scanning candidates within a round.
    """

    def __init__(self, store: TermStore, engine: Optional[RelationEngine] = None, prune: bool = True, workers: int = 1):
        self.store = store
        self.engine = engine if engine is not None else RelationEngine(store)
        self.prune = prune
        self.workers = max(1, workers)

        self._reps: List[_Rep] = []
        self._leq_row: List[int] = []
        self._leq_col: List[int] = []
        self._tri_row: List[int] = []
        self._tri_col: List[int] = []
        self._incomparable: List[int] = []
        self._tried = 0

    # Public

    @property
    def candidates_tried(self) -> int:
        return self._tried

    def run(self, budget: EnumerationBudget) -> ValueTable:
        deadline = time.monotonic() + budget.time_limit
        self._seed_atoms()
        counts = [len(self._reps)]
        saturated = False
        exhausted: Optional[str] = None
        new_mask = (1 << len(self._reps)) - 1

        for round_no in range(1, budget.max_rounds + 1):
            found, exhausted = self._scan_round(round_no, new_mask, deadline, budget.max_values)
            before = len(self._reps)
            capped = self._insert(found, round_no, budget.max_values)
            exhausted = exhausted or capped
            counts.append(len(self._reps))
            added = len(self._reps) - before
            logging.info(
                f"{self.store.poset.name} round {round_no}: {added} new, {len(self._reps)} values, "
                f"{self._tried} candidates tried"
            )
            if exhausted:
                break
            if added == 0:
                saturated = True
                break
            new_mask = ((1 << len(self._reps)) - 1) ^ ((1 << before) - 1)
        else:
            exhausted = f"max_rounds={budget.max_rounds} reached"

        table = ValueTable(
            poset=self.store.poset,
            store=self.store,
            representatives=[r.ref for r in self._reps],
            order=self._order_matrix(),
            generation=[r.generation for r in self._reps],
            counts_per_round=counts,
            saturated=saturated,
            exhausted=None if saturated else exhausted,
            pruned=self.prune,
        )
        if table.flagged:
            logging.warning(
                f"Enumeration over {table.poset.name} stopped before saturation ({table.exhausted}); "
                "its value set is finite, so the count is incomplete"
            )
        elif saturated:
            logging.info(f"{table.poset.name} saturated with {len(table)} values")
        return table

    # Setup

    def _seed_atoms(self) -> None:
        atoms = [self.store.atom_game(a) for a in self.store.poset.atoms]
        self._reps = [_Rep(ref=g, left=0, right=0, atomic=True, generation=0) for g in atoms]
        n = len(atoms)
        self._leq_row = [0] * n
        self._leq_col = [0] * n
        self._tri_row = [0] * n
        self._tri_col = [0] * n
        for i, gi in enumerate(atoms):
            for j, gj in enumerate(atoms):
                if self.engine.leq(gi, gj):
                    self._leq_row[i] |= 1 << j
                    self._leq_col[j] |= 1 << i
                if self.engine.tri(gi, gj):
                    self._tri_row[i] |= 1 << j
                    self._tri_col[j] |= 1 << i
        self._refresh_incomparable()

    def _refresh_incomparable(self) -> None:
        full = (1 << len(self._reps)) - 1
        self._incomparable = [
            full & ~(self._leq_row[k] | self._leq_col[k]) for k in range(len(self._reps))
        ]

    # Candidate generation

    def _antichains(self, allowed: int) -> Iterator[int]:
        incomparable = self._incomparable

        def extend(chosen: int, free: int) -> Iterator[int]:
            while free:
                low = free & -free
                free ^= low
                grown = chosen | low
                yield grown
                yield from extend(grown, free & incomparable[low.bit_length() - 1])

        return extend(0, allowed)

    @staticmethod
    def _subsets(allowed: int) -> Iterator[int]:
        sub = allowed
        while sub:
            yield sub
            sub = (sub - 1) & allowed

    def _option_sets(self, allowed: int) -> Iterator[int]:
        return self._antichains(allowed) if self.prune else self._subsets(allowed)

    def _left_sets(self, allowed: int) -> Iterator[int]:
        """Left option sets ordered by size, then by mask value."""
        if self.prune:
            # sorted eagerly; far fewer than all subsets
            return iter(sorted(self._antichains(allowed), key=lambda m: (bin(m).count("1"), m)))
        return _subsets_by_size(allowed)

    def _below_all(self, left: int) -> int:
        allowed = (1 << len(self._reps)) - 1
        for l in _bits(left):
            allowed &= self._leq_col[l]
        return allowed

    def _scan_round(
        self, round_no: int, new_mask: int, deadline: float, max_values: int
    ) -> Tuple[List[_Candidate], Optional[str]]:
        lefts = self._left_sets((1 << len(self._reps)) - 1)
        limit = 4 * (max_values - len(self._reps))
        if self.workers > 1:
            with ThreadPoolExecutor(max_workers=self.workers) as pool:
                return self._scan_chunks(lefts, pool.map, round_no, new_mask, deadline, limit)
        return self._scan_chunks(lefts, map, round_no, new_mask, deadline, limit)

    def _scan_chunks(
        self, lefts: Iterator[int], mapper: Callable, round_no: int, new_mask: int, deadline: float, limit: int
    ) -> Tuple[List[_Candidate], Optional[str]]:
        found: List[_Candidate] = []
        reason: Optional[str] = None
        tried = 0
        while reason is None:
            if time.monotonic() > deadline:
                reason = "time_limit reached"
                break
            chunks = [chunk for chunk in (list(islice(lefts, _CHUNK_SIZE)) for _ in range(self.workers)) if chunk]
            if not chunks:
                break
            room = limit - len(found)
            for candidates, count, stop in mapper(lambda c: self._scan(c, round_no, new_mask, deadline, room), chunks):
                found.extend(candidates)
                tried += count
                reason = reason or stop
        self._tried += tried
        return found, reason

    def _scan(
        self, lefts: Sequence[int], round_no: int, new_mask: int, deadline: float, room: int
    ) -> Tuple[List[_Candidate], int, Optional[str]]:
        found: List[_Candidate] = []
        tried = 0
        for left in lefts:
            left_is_new = bool(left & new_mask)
            below = self._below_all(left)
            if round_no > 1 and not left_is_new and not (below & new_mask):
                continue
            for right in self._option_sets(below):
                if round_no > 1 and not left_is_new and not (right & new_mask):
                    continue
                tried += 1
                if tried % 2048 == 0 and time.monotonic() > deadline:
                    return found, tried, "time_limit reached"
                candidate = self._relate(left, right)
                if candidate is None:
                    continue
                found.append(candidate)
                if len(found) > room:
                    return found, tried, "max_values reached"
        return found, tried, None

    def _relate(self, left: int, right: int) -> Optional[_Candidate]:
        """
        Relations of X = <left|right> with every representative, or None when
        X is not locally monotone or is equivalent to a representative.
        """
        up = tx = down = tk = 0
        leq_row, leq_col = self._leq_row, self._leq_col
        tri_row, tri_col = self._tri_row, self._tri_col
        for k, rep in enumerate(self._reps):
            bit = 1 << k
            # X <| K: some X^R <= K, or X <= some K^L
            if (right & leq_col[k]) or (rep.left & up):
                tx |= bit
            # X <= K: every X^L <| K, X <| every K^R, and X <| K if K is atomic
            if not (left & ~tri_col[k]) and not (rep.right & ~tx) and (not rep.atomic or tx & bit):
                up |= bit
            # K <| X: some K^R <= X, or K <= some X^L
            if (rep.right & down) or (left & leq_row[k]):
                tk |= bit
            # K <= X: every K^L <| X, K <| every X^R, and K <| X if K is atomic
            if not (rep.left & ~tk) and not (right & ~tri_row[k]) and (not rep.atomic or tk & bit):
                down |= bit

        if left & ~up or right & ~down:
            return None
        if up & down:
            return None
        return _Candidate(left, right, up, tx, down, tk)

    # Insertion

    def _insert(self, found: List[_Candidate], round_no: int, max_values: int) -> Optional[str]:
        added: List[Tuple[int, _Candidate]] = []
        for cand in found:
            if len(self._reps) >= max_values:
                return "max_values reached"

            relations: List[Tuple[int, bool, bool, bool, bool]] = []
            duplicate = False
            for index, other in added:
                n_le_m = not (cand.left & ~other.tk) and not (other.right & ~cand.tx)
                m_le_n = not (other.left & ~cand.tk) and not (cand.right & ~other.tx)
                if n_le_m and m_le_n:
                    duplicate = True
                    break
                n_tri_m = bool(cand.right & other.down) or bool(other.left & cand.up)
                m_tri_n = bool(other.right & cand.down) or bool(cand.left & other.up)
                relations.append((index, n_le_m, m_le_n, n_tri_m, m_tri_n))
            if duplicate:
                continue

            x = len(self._reps)
            xbit = 1 << x
            ref = self.store.composite(
                [self._reps[i].ref for i in _bits(cand.left)],
                [self._reps[i].ref for i in _bits(cand.right)],
            )
            self._reps.append(_Rep(ref=ref, left=cand.left, right=cand.right, atomic=False, generation=round_no))

            leq_row, leq_col, tri_row, tri_col = cand.up, cand.down, cand.tx, cand.tk
            for k in _bits(cand.down):
                self._leq_row[k] |= xbit
            for k in _bits(cand.up):
                self._leq_col[k] |= xbit
            for k in _bits(cand.tk):
                self._tri_row[k] |= xbit
            for k in _bits(cand.tx):
                self._tri_col[k] |= xbit
            for index, n_le_m, m_le_n, n_tri_m, m_tri_n in relations:
                ibit = 1 << index
                if n_le_m:
                    leq_row |= ibit
                    self._leq_col[index] |= xbit
                if m_le_n:
                    leq_col |= ibit
                    self._leq_row[index] |= xbit
                if n_tri_m:
                    tri_row |= ibit
                    self._tri_col[index] |= xbit
                if m_tri_n:
                    tri_col |= ibit
                    self._tri_row[index] |= xbit

            if not (cand.left & ~cand.tk) and not (cand.right & ~cand.tx):
                leq_row |= xbit
                leq_col |= xbit
            if (cand.right & cand.down) or (cand.left & cand.up):
                tri_row |= xbit
                tri_col |= xbit

            self._leq_row.append(leq_row)
            self._leq_col.append(leq_col)
            self._tri_row.append(tri_row)
            self._tri_col.append(tri_col)
            added.append((x, cand))

        self._refresh_incomparable()
        return None

    def _order_matrix(self) -> np.ndarray:
        n = len(self._reps)
        order = np.zeros((n, n), dtype=bool)
        for i, row in enumerate(self._leq_row):
            for j in _bits(row):
                order[i, j] = True
        return order


def enumerate_monotone_values(
    poset: Poset,
    budget: Optional[EnumerationBudget] = None,
    prune: bool = True,
    workers: int = 1,
    store: Optional[TermStore] = None,
) -> ValueTable:
    """Enumerate monotone values over `poset` until saturation or budget exhaustion."""
    store = store if store is not None else TermStore(poset)
    if store.poset is not poset:
        raise ValueError("store was built over a different poset")
    enumerator = ValueEnumerator(store, prune=prune, workers=workers)
    return enumerator.run(budget or EnumerationBudget())


def audit_value_table(table: ValueTable) -> List[str]:
    """
    Re-check a table with a cold relation cache: representatives monotone and
    pairwise non-equivalent, options of each composite on the right side of
    it, and the stored order matrix equal to freshly computed <=.
    """
    engine = RelationEngine(table.store)
    reps = table.representatives
    problems: List[str] = []
    for i, g in enumerate(reps):
        if not engine.is_monotone(g):
            problems.append(f"representative {i} is not monotone")
        term = table.store.term(g)
        if any(not engine.leq(g, gl) for gl in term.left) or any(not engine.leq(gr, g) for gr in term.right):
            problems.append(f"representative {i} is not locally monotone")
    for i, g in enumerate(reps):
        for j, h in enumerate(reps):
            leq = engine.leq(g, h)
            if leq != bool(table.order[i, j]):
                problems.append(f"order[{i}, {j}] = {bool(table.order[i, j])} but leq = {leq}")
            if i < j and leq and engine.leq(h, g):
                problems.append(f"representatives {i} and {j} are equivalent")
    return problems
