"""
Verification harness for the G_n sequence.

Claims (1)-(8) are the inductive facts behind G_{n+1} </= G_n; every one of
them asserts that some relation FAILS. The lemma rows add the positive facts:
G_n is monotone, G_n <= G_{n+1}, 0 <= G_n and G_n < G_{n+1}.

Guarded claims ("n even", "n odd", "n > 0") are reported as skipped where the
guard fails rather than counted as vacuously true.
"""

from __future__ import annotations

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, List, Optional, Tuple

from .relations import RelationEngine
from .sequence import GameSequence

CLAIM_IDS = ("1", "2", "3", "4", "5", "6", "7", "8")
LEMMA_IDS = ("lemma1", "lemma2", "cor3", "cor5")
BASE_FACT_IDS = ("star-not-leq-minus2", "minus2-not-leq-star")


@dataclass(frozen=True)
class ClaimReport:
    """
    Outcome of evaluating one claim at one n.

    Attributes:
        claim: Claim id ("1".."8", "lemma1", ...).
        n: Sequence index the claim was instantiated at.
        expected: Truth value the claim asserts for the evaluated relation.
        actual: Evaluated truth value, None when skipped.
        micros: Evaluation time in microseconds.
        description: Human-readable statement.
    """
    claim: str
    n: int
    expected: bool
    actual: Optional[bool]
    micros: int
    description: str = ""

    @property
    def skipped(self) -> bool:
        return self.actual is None

    @property
    def ok(self) -> Optional[bool]:
        return None if self.skipped else self.actual == self.expected

    def to_dict(self) -> dict:
        return {
            "claim": self.claim,
            "n": self.n,
            "expected": self.expected,
            "actual": self.actual,
            "ok": self.ok,
            "skipped": self.skipped,
            "micros": self.micros,
        }


# (id, description, guard, evaluation). Evaluations return the relation value;
# the claim asserts it is False.
_Check = Callable[[RelationEngine, GameSequence, int], bool]
_CLAIMS: Tuple[Tuple[str, str, Callable[[int], bool], _Check], ...] = (
    ("1", "G_n not <| -1", lambda n: True,
     lambda e, s, n: e.tri(s.g_seq(n), s.atom(-1))),
    ("2", "P^(n)(G_n) not <= -1", lambda n: True,
     lambda e, s, n: e.leq(s.right_of(n), s.atom(-1))),
    ("3", "n even: P^(n)(G_n) not <| -2", lambda n: n % 2 == 0,
     lambda e, s, n: e.tri(s.right_of(n), s.atom(-2))),
    ("4", "n odd: P^(n)(G_n) not <| star", lambda n: n % 2 == 1,
     lambda e, s, n: e.tri(s.right_of(n), s.star())),
    ("5", "n > 0: P^(n)(G_n) not <= P^(n-1)(G_(n-1))", lambda n: n > 0,
     lambda e, s, n: e.leq(s.right_of(n), s.right_of(n - 1))),
    ("6", "n > 0: G_(n+1) not <= G_(n-1)", lambda n: n > 0,
     lambda e, s, n: e.leq(s.g_seq(n + 1), s.g_seq(n - 1))),
    ("7", "n > 0: G_(n+1) not <| P^(n-1)(G_(n-1))", lambda n: n > 0,
     lambda e, s, n: e.tri(s.g_seq(n + 1), s.right_of(n - 1))),
    ("8", "G_(n+1) not <= G_n", lambda n: True,
     lambda e, s, n: e.leq(s.g_seq(n + 1), s.g_seq(n))),
)

_LEMMAS: Tuple[Tuple[str, str, _Check], ...] = (
    ("lemma1", "G_n is monotone",
     lambda e, s, n: e.is_monotone(s.g_seq(n))),
    ("lemma2", "G_n <= G_(n+1)",
     lambda e, s, n: e.leq(s.g_seq(n), s.g_seq(n + 1))),
    ("cor3", "0 <= G_n",
     lambda e, s, n: e.leq(s.atom(0), s.g_seq(n))),
    ("cor5", "G_n < G_(n+1)",
     lambda e, s, n: e.strictly_less(s.g_seq(n), s.g_seq(n + 1))),
)


def _timed(check: Callable[[], bool]) -> Tuple[bool, int]:
    start = time.perf_counter_ns()
    value = bool(check())
    return value, (time.perf_counter_ns() - start) // 1000


def _claims_at(engine: RelationEngine, seq: GameSequence, n: int, negate: Iterable[str]) -> List[ClaimReport]:
    reports = []
    for claim, description, guard, check in _CLAIMS:
        expected = claim in negate
        if not guard(n):
            reports.append(ClaimReport(claim, n, expected, None, 0, description))
            continue
        actual, micros = _timed(lambda: check(engine, seq, n))
        reports.append(ClaimReport(claim, n, expected, actual, micros, description))
    return reports


def _run(n_max: int, seq: GameSequence, task, workers: int) -> List[ClaimReport]:
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    # build every term up front; workers then only query
    for n in range(n_max + 2):
        seq.right_of(n)
    seq.star()

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            batches = list(pool.map(task, range(n_max + 1)))
    else:
        batches = [task(n) for n in range(n_max + 1)]
    return [report for batch in batches for report in batch]


def verify_claims(
    engine: RelationEngine,
    n_max: int,
    negate: Iterable[str] = (),
    workers: int = 1,
) -> List[ClaimReport]:
    """Evaluate claims (1)-(8) for every n <= n_max."""
    seq = GameSequence(engine.store)
    negate = frozenset(negate)
    reports = _run(n_max, seq, lambda n: _claims_at(engine, seq, n, negate), workers)
    failed = [r for r in reports if r.ok is False]
    logging.info(
        f"Claims (1)-(8) for n <= {n_max}: {sum(r.ok is True for r in reports)} ok, "
        f"{len(failed)} failed, {sum(r.skipped for r in reports)} skipped"
    )
    return reports


def verify_sequence_lemmas(
    engine: RelationEngine,
    n_max: int,
    negate: Iterable[str] = (),
    workers: int = 1,
) -> List[ClaimReport]:
    """Evaluate the lemma rows for every n <= n_max, plus the two base facts about star and -2."""
    seq = GameSequence(engine.store)
    negate = frozenset(negate)

    def lemmas_at(n: int) -> List[ClaimReport]:
        reports = []
        for claim, description, check in _LEMMAS:
            actual, micros = _timed(lambda: check(engine, seq, n))
            reports.append(ClaimReport(claim, n, claim not in negate, actual, micros, description))
        return reports

    reports = _run(n_max, seq, lemmas_at, workers)

    star, minus2 = seq.star(), seq.atom(-2)
    base: Dict[str, Tuple[str, Callable[[], bool]]] = {
        "star-not-leq-minus2": ("star not <= -2", lambda: engine.leq(star, minus2)),
        "minus2-not-leq-star": ("-2 not <= star", lambda: engine.leq(minus2, star)),
    }
    for claim in BASE_FACT_IDS:
        description, check = base[claim]
        actual, micros = _timed(check)
        reports.append(ClaimReport(claim, 0, claim in negate, actual, micros, description))

    logging.info(f"Sequence lemmas for n <= {n_max}: {sum(r.ok is False for r in reports)} failed")
    return reports
