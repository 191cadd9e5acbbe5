"""
Tests for monotone value enumeration.
"""

import numpy as np
import pytest

from games.notation import format_game
from games.poset import linear_order
from games.relations import RelationEngine
from games.store import TermStore
from values.enumeration import (
    EnumerationBudget,
    ValueEnumerator,
    _subsets_by_size,
    audit_value_table,
    enumerate_monotone_values,
    value_poset_edges,
)


def _enumerate(n, **kwargs):
    budget = kwargs.pop("budget", EnumerationBudget(max_rounds=12, max_values=500, time_limit=300.0))
    return enumerate_monotone_values(linear_order(n), budget, **kwargs)


class TestFiniteChains:
    @pytest.mark.parametrize("n,count", [(1, 1), (2, 3), (3, 8)])
    def test_value_counts(self, n, count):
        table = _enumerate(n)
        assert table.saturated
        assert table.exhausted is None
        assert len(table) == count
        assert not table.flagged

    @pytest.mark.slow
    def test_four_chain_has_31_values(self):
        table = _enumerate(4, budget=EnumerationBudget(max_rounds=12, max_values=2000, time_limit=600.0))
        assert table.saturated
        assert len(table) == 31
        assert audit_value_table(table) == []

    def test_single_atom(self):
        table = _enumerate(1)
        assert table.counts_per_round == [1, 1]
        assert value_poset_edges(table) == []

    def test_two_chain(self):
        table = _enumerate(2)
        names = [format_game(table.store, r) for r in table.representatives]
        assert names == ["0", "1", "{1|0}"]
        assert table.counts_per_round == [2, 3, 3]
        assert table.generation == [0, 0, 1]
        assert [(names[i], names[j]) for i, j in value_poset_edges(table)] == [("0", "{1|0}"), ("{1|0}", "1")]

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_pruned_matches_unpruned(self, n):
        pruned = _enumerate(n)
        full = _enumerate(n, prune=False)
        assert len(pruned) == len(full)
        assert not full.pruned
        assert full.saturated

    def test_threaded_scan(self):
        assert len(_enumerate(3, workers=3)) == 8


class TestCandidateStream:
    def test_subsets_ordered_by_size_then_value(self):
        mask = 0b101101
        expected = sorted(
            (sub for sub in range(1, mask + 1) if sub & ~mask == 0),
            key=lambda m: (bin(m).count("1"), m),
        )
        assert list(_subsets_by_size(mask)) == expected

    def test_subsets_generated_lazily(self):
        subsets = _subsets_by_size((1 << 200) - 1)
        assert [next(subsets) for _ in range(3)] == [1, 2, 4]

    def test_unpruned_keeps_first_representatives(self):
        table = _enumerate(2, prune=False)
        names = [format_game(table.store, r) for r in table.representatives]
        assert names == ["0", "1", "{1|0}"]

    def test_tried_count_independent_of_workers(self, monkeypatch):
        monkeypatch.setattr("values.enumeration._CHUNK_SIZE", 3)
        budget = EnumerationBudget(max_rounds=12, max_values=500, time_limit=300.0)
        counts = []
        for workers in (1, 4):
            enumerator = ValueEnumerator(TermStore(linear_order(3)), prune=False, workers=workers)
            assert len(enumerator.run(budget)) == 8
            counts.append(enumerator.candidates_tried)
        assert counts[0] == counts[1] > 0


class TestTableIntegrity:
    @pytest.mark.parametrize("n", [2, 3])
    def test_audit_with_cold_cache(self, n):
        assert audit_value_table(_enumerate(n)) == []

    def test_order_is_partial_order(self):
        order = _enumerate(3).order
        assert np.all(np.diag(order))
        assert not np.any(order & order.T & ~np.eye(len(order), dtype=bool))
        composed = (order.astype(int) @ order.astype(int)) > 0
        assert not np.any(composed & ~order)

    def test_kernel_matches_engine(self):
        table = _enumerate(3)
        engine = RelationEngine(table.store)
        for i, g in enumerate(table.representatives):
            for j, h in enumerate(table.representatives):
                assert bool(table.order[i, j]) == engine.leq(g, h)

    def test_representatives_monotone(self):
        table = _enumerate(3)
        engine = RelationEngine(table.store)
        for g in table.representatives:
            assert engine.is_monotone(g)

    def test_export(self):
        table = _enumerate(2)
        export = table.to_export(lambda g: format_game(table.store, g))
        assert export == {
            "poset": "L2",
            "counts_per_round": [2, 3, 3],
            "saturated": True,
            "representatives": ["0", "1", "{1|0}"],
            "hasse_edges": [["0", "{1|0}"], ["{1|0}", "1"]],
        }


class TestInfiniteChain:
    def test_five_chain_keeps_growing(self):
        table = _enumerate(5, budget=EnumerationBudget(max_rounds=2, max_values=5000, time_limit=300.0))
        counts = table.counts_per_round
        assert counts[0] == 5
        assert counts[0] < counts[1] < counts[2]
        assert not table.saturated
        assert table.exhausted == "max_rounds=2 reached"
        assert not table.flagged

    def test_value_cap(self):
        table = _enumerate(5, budget=EnumerationBudget(max_rounds=3, max_values=8, time_limit=300.0))
        assert len(table) == 8
        assert table.exhausted == "max_values reached"

    def test_time_limit(self):
        table = _enumerate(5, budget=EnumerationBudget(max_rounds=3, max_values=100, time_limit=1e-9))
        assert not table.saturated
        assert table.exhausted == "time_limit reached"

    def test_finite_chain_out_of_budget_is_flagged(self):
        table = _enumerate(3, budget=EnumerationBudget(max_rounds=1, max_values=100, time_limit=300.0))
        assert not table.saturated
        assert table.flagged


class TestBudget:
    @pytest.mark.parametrize("field", ["max_rounds", "max_values", "time_limit"])
    def test_non_positive_rejected(self, field):
        with pytest.raises(ValueError):
            EnumerationBudget(**{field: 0})

    def test_store_must_match_poset(self):
        with pytest.raises(ValueError):
            enumerate_monotone_values(linear_order(2), store=TermStore(linear_order(2)))
