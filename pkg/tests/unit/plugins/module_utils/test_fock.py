# -*- coding: utf-8 -*-

# Copyright: (c) 2026, Bloch-Okounkov collection maintainers
# GNU General Public License v3.0+ (see LICENSE or https://www.gnu.org/licenses/gpl-3.0.txt)

from __future__ import absolute_import, division, print_function

__metaclass__ = type

import pytest

from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.constants import GRID
from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.series import QueryError, exp8, partition_numbers
from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.fock import (
    ExponentSpec,
    FockState,
    check_partition_pairs,
    collision_report,
    compress,
    enumerate_states,
    oracle_coefficient,
    partition_pair_count,
    raw_trace,
    spec_from_lists,
    state_count_series,
)
from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.closed_forms import f_multisum


class TestCompress:
    def test_repeated_entries_collapse_in_first_occurrence_order(self):
        spec = compress([("pos", 1), ("neg", 1), ("pos", 1), ("neg", 2), ("neg", 2)])
        assert spec.entries == (("pos", 1), ("neg", 1), ("neg", 2))

    def test_idempotent(self):
        once = compress([("neg", 3), ("pos", 0), ("neg", 3)])
        assert compress(once) == once

    def test_bad_requests(self):
        with pytest.raises(QueryError):
            compress([("mid", 1)])
        with pytest.raises(QueryError):
            compress([("pos", -1)])

    def test_spec_properties(self):
        spec = spec_from_lists([2, 0], [0])
        assert spec.pos == [2, 0]
        assert spec.neg == [0]
        assert spec.collisions == [0]
        assert spec.is_well_formed()
        assert not ExponentSpec((("pos", 1), ("pos", 1))).is_well_formed()


class TestStates:
    def test_counts_by_weight_are_partition_numbers(self):
        states = list(enumerate_states(6))
        table = partition_numbers(5)
        for weight in range(6):
            assert sum(1 for state in states if state.weight2 == 2 * weight) == table[weight]

    def test_order_and_charge(self):
        states = list(enumerate_states(5))
        assert states[0] == FockState((), ())
        assert [state.weight2 for state in states] == sorted(state.weight2 for state in states)
        assert all(state.charge == 0 for state in states)
        assert len(set(states)) == len(states)

    def test_state_count_series_inverts_pochhammer(self):
        series = state_count_series(12)
        table = partition_numbers(11)
        assert [series.coefficient(GRID * n) for n in range(12)] == table


class TestOracle:
    def test_single_positive_index(self):
        oracle = oracle_coefficient(spec_from_lists([0]), 12)
        assert list(oracle.terms()) == [(8, 1), (24, -1), (48, 1), (80, -1)]
        assert oracle.agrees_with(f_multisum([0], 12), exp8(12))

    def test_single_negative_index(self):
        oracle = oracle_coefficient(spec_from_lists(neg=[0]), 8)
        assert [oracle.coefficient(GRID * e) for e in (0, 1, 3, 6)] == [1, -1, 1, -1]

    def test_result_does_not_depend_on_shards(self):
        spec = spec_from_lists([2, 1], [0])
        assert raw_trace(spec, 12, 1) == raw_trace(spec, 12, 3)

    def test_insertion_order_is_irrelevant(self):
        forward = oracle_coefficient(spec_from_lists([3, 0], [1]), 10)
        backward = oracle_coefficient(ExponentSpec((("neg", 1), ("pos", 0), ("pos", 3))), 10)
        assert forward == backward


class TestCollision:
    @pytest.mark.parametrize("r", [0, 1, 2, 3])
    def test_paths_agree(self, r):
        report = collision_report(r, 20)
        assert report.r == r
        assert report.paths_agree
        assert report.vanishing_claim.is_zero()

    def test_negative_index(self):
        with pytest.raises(QueryError):
            collision_report(-1, 10)


class TestPartitionPairs:
    @pytest.mark.parametrize("r", [[0], [2], [1, 0], [3, 1]])
    def test_pairs_match_oracle(self, r):
        assert check_partition_pairs(r, 12).passed

    def test_duplicate_indices(self):
        with pytest.raises(QueryError):
            partition_pair_count([1, 1], 10)

    def test_weight_beyond_order(self):
        assert partition_pair_count([20], 5).is_zero()
