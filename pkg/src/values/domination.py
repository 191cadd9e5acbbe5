"""
Empirical validation of dominated-option removal.

Enumeration restricts option sets to antichains, which is only sound if
adding a dominated option never changes a game's value:

- a left option G' with G' <= G for some existing left option G, or
- a right option H' with H <= H' for some existing right option H.

The checks below try that on random and on exhaustive small instances and
report any counterexample.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Tuple, Union

import numpy as np

from games.notation import format_game
from games.random_games import RandomGames, birthday_games
from games.relations import RelationEngine
from games.store import GameRef, TermStore


@dataclass
class DominationReport:
    """
    Attributes:
        trials: Extensions attempted.
        applicable: Trials where the extra option was actually dominated.
        counterexamples: (base, extended) pairs that were not equivalent.
    """
    trials: int = 0
    applicable: int = 0
    counterexamples: List[Tuple[GameRef, GameRef]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def merge(self, other: "DominationReport") -> "DominationReport":
        return DominationReport(
            trials=self.trials + other.trials,
            applicable=self.applicable + other.applicable,
            counterexamples=self.counterexamples + other.counterexamples,
        )

    def to_dict(self, store: Optional[TermStore] = None) -> dict:
        def show(g: GameRef) -> str:
            return format_game(store, g) if store is not None else repr(g)

        return {
            "trials": self.trials,
            "applicable": self.applicable,
            "ok": self.ok,
            "counterexamples": [[show(b), show(e)] for b, e in self.counterexamples],
        }


def _try_extension(engine: RelationEngine, base: GameRef, extra: GameRef, side: str, report: DominationReport) -> None:
    store = engine.store
    term = store.term(base)
    report.trials += 1
    if side == "left":
        if extra in term.left or not any(engine.leq(extra, gl) for gl in term.left):
            return
        extended = store.composite(term.left + (extra,), term.right)
    else:
        if extra in term.right or not any(engine.leq(gr, extra) for gr in term.right):
            return
        extended = store.composite(term.left, term.right + (extra,))
    report.applicable += 1
    if not engine.equivalent(base, extended):
        report.counterexamples.append((base, extended))


def check_domination(
    engine: RelationEngine,
    sample_size: int,
    seed: Union[int, np.random.Generator, None] = 0,
    max_depth: int = 2,
    max_options: int = 2,
) -> DominationReport:
    """Random trials: a random composite, a random extra option, a random side."""
    rg = RandomGames(engine.store, seed)
    report = DominationReport()
    for _ in range(sample_size):
        base = rg.composite(max_depth, max_options)
        extra = rg.game(max_depth - 1, max_options)
        side = "left" if rg.rng.random() < 0.5 else "right"
        _try_extension(engine, base, extra, side, report)
    _log(engine.store, report, "random")
    return report


def check_domination_exhaustive(engine: RelationEngine, birthday: int = 1) -> DominationReport:
    """
    Every base <x|y> and every extra option z drawn from the games of the
    given birthday, on both sides.
    """
    store = engine.store
    pool = birthday_games(store, birthday)
    report = DominationReport()
    for x in pool:
        for y in pool:
            base = store.composite([x], [y])
            for z in pool:
                _try_extension(engine, base, z, "left", report)
                _try_extension(engine, base, z, "right", report)
    _log(store, report, f"exhaustive (birthday {birthday})")
    return report


def check_domination_on(engine: RelationEngine, bases: Iterable[GameRef], extras: Iterable[GameRef]) -> DominationReport:
    """Trials over explicit bases and extra options; atomic bases are skipped."""
    extras = list(extras)
    report = DominationReport()
    for base in bases:
        if engine.store.is_atomic(base):
            continue
        for z in extras:
            _try_extension(engine, base, z, "left", report)
            _try_extension(engine, base, z, "right", report)
    return report


def _log(store: TermStore, report: DominationReport, kind: str) -> None:
    logging.info(
        f"Domination check {kind} over {store.poset.name}: {report.trials} trials, "
        f"{report.applicable} applicable, {len(report.counterexamples)} counterexamples"
    )
    for base, extended in report.counterexamples[:5]:
        logging.warning(
            f"Dominated option changed the value: {format_game(store, base)} vs {format_game(store, extended)}"
        )
