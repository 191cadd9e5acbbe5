"""
Tests for the sequence verification harness.
"""

import pytest

from games.claims import (
    BASE_FACT_IDS,
    CLAIM_IDS,
    LEMMA_IDS,
    ClaimReport,
    verify_claims,
    verify_sequence_lemmas,
)


class TestClaims:
    def test_all_claims_hold_up_to_ten(self, engine):
        reports = verify_claims(engine, 10)
        assert len(reports) == 8 * 11
        failed = [r for r in reports if r.ok is False]
        assert failed == []
        assert all(r.expected is False for r in reports)

    def test_guarded_claims_skipped(self, engine):
        reports = {(r.claim, r.n): r for r in verify_claims(engine, 3)}
        assert reports[("3", 0)].actual is False
        assert reports[("3", 1)].skipped
        assert reports[("4", 0)].skipped
        assert reports[("4", 1)].actual is False
        for claim in ("5", "6", "7"):
            assert reports[(claim, 0)].skipped
            assert reports[(claim, 0)].ok is None
            assert not reports[(claim, 1)].skipped
        assert not reports[("8", 0)].skipped

    def test_one_row_per_claim_at_zero(self, engine):
        reports = verify_claims(engine, 0)
        assert [r.claim for r in reports] == list(CLAIM_IDS)
        assert all(r.n == 0 for r in reports)

    def test_negated_claim_fails(self, engine):
        reports = verify_claims(engine, 2, negate={"8"})
        failed = [r for r in reports if r.ok is False]
        assert {r.claim for r in failed} == {"8"}
        assert len(failed) == 3

    def test_negating_skipped_claim_fails_nothing(self, engine):
        reports = verify_claims(engine, 0, negate={"5"})
        assert all(r.ok is not False for r in reports)

    def test_workers_give_same_results(self, engine):
        serial = [(r.claim, r.n, r.actual) for r in verify_claims(engine, 6)]
        threaded = [(r.claim, r.n, r.actual) for r in verify_claims(engine, 6, workers=4)]
        assert serial == threaded

    def test_negative_n_max_rejected(self, engine):
        with pytest.raises(ValueError):
            verify_claims(engine, -1)


class TestLemmas:
    def test_lemmas_hold_up_to_ten(self, engine):
        reports = verify_sequence_lemmas(engine, 10)
        assert len(reports) == len(LEMMA_IDS) * 11 + len(BASE_FACT_IDS)
        assert all(r.ok for r in reports)

    def test_strict_chain(self, engine):
        rows = [r for r in verify_sequence_lemmas(engine, 10) if r.claim == "cor5"]
        assert [r.n for r in rows] == list(range(11))
        assert all(r.actual is True for r in rows)

    def test_base_facts(self, engine):
        rows = {r.claim: r for r in verify_sequence_lemmas(engine, 0)}
        for claim in BASE_FACT_IDS:
            assert rows[claim].expected is False
            assert rows[claim].actual is False

    def test_negated_lemma_fails(self, engine):
        reports = verify_sequence_lemmas(engine, 1, negate={"lemma1"})
        assert {r.claim for r in reports if r.ok is False} == {"lemma1"}


class TestClaimReport:
    def test_skipped_row(self):
        report = ClaimReport("4", 0, False, None, 0, "n odd")
        assert report.skipped
        assert report.ok is None
        assert report.to_dict() == {
            "claim": "4",
            "n": 0,
            "expected": False,
            "actual": None,
            "ok": None,
            "skipped": True,
            "micros": 0,
        }

    def test_mismatch(self):
        assert ClaimReport("1", 2, False, True, 5).ok is False
        assert ClaimReport("1", 2, False, False, 5).ok is True
