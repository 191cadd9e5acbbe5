"""
Tests for dominated-option validation.
"""

import pytest

from games.poset import linear_order
from games.random_games import RandomGames, birthday_games
from games.relations import RelationEngine
from games.store import TermStore
from values.domination import (
    DominationReport,
    check_domination,
    check_domination_exhaustive,
    check_domination_on,
)


@pytest.fixture
def l3_engine():
    return RelationEngine(TermStore(linear_order(3)))


class TestExamples:
    def test_dominated_left_option(self, engine, store, atom):
        base = store.composite([atom(-1)], [atom(0)])
        extended = store.composite([atom(-1), atom(-3)], [atom(0)])
        report = check_domination_on(engine, [base], [atom(-3)])
        assert report.applicable >= 1
        assert report.ok
        assert engine.equivalent(base, extended)

    def test_atomic_bases_skipped(self, engine, atom):
        report = check_domination_on(engine, [atom(0), atom(1)], [atom(-3)])
        assert report.trials == 0
        assert report.ok

    def test_undominated_extra_not_applicable(self, engine, store, atom):
        base = store.composite([atom(-1)], [atom(-3)])
        report = check_domination_on(engine, [base], [atom(1)])
        # only the right-side extension is dominated
        assert report.trials == 2
        assert report.applicable == 1

    def test_report_merge_and_dict(self, store, atom):
        a = DominationReport(trials=2, applicable=1)
        b = DominationReport(trials=3, applicable=0, counterexamples=[(atom(0), atom(1))])
        merged = a.merge(b)
        assert (merged.trials, merged.applicable, merged.ok) == (5, 1, False)
        assert merged.to_dict(store)["counterexamples"] == [["0", "1"]]


class TestValidation:
    def test_birthday_one_pool(self, l3_engine):
        games = birthday_games(l3_engine.store, 1)
        assert len(games) == 3 + 9

    def test_exhaustive_three_chain(self, l3_engine):
        report = check_domination_exhaustive(l3_engine, birthday=1)
        assert report.trials == 12 * 12 * 12 * 2
        assert report.applicable > 0
        assert report.ok

    def test_random_three_chain(self, l3_engine):
        report = check_domination(l3_engine, 2000, seed=1, max_depth=2)
        assert report.trials == 2000
        assert report.ok

    @pytest.mark.slow
    def test_random_three_chain_large(self, l3_engine):
        assert check_domination(l3_engine, 10_000, seed=2, max_depth=2).ok

    @pytest.mark.slow
    def test_random_five_chain(self, engine):
        report = check_domination(engine, 10_000, seed=3, max_depth=2)
        assert report.trials == 10_000
        assert report.applicable > 0
        assert report.ok

    def test_sequence_games_as_bases(self, engine, seq):
        rg = RandomGames(engine.store, seed=4)
        bases = [seq.g_seq(n) for n in range(4)] + [seq.star()]
        extras = [rg.game(2) for _ in range(20)]
        assert check_domination_on(engine, bases, extras).ok
