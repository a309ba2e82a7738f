# -*- coding: utf-8 -*-

# Copyright: (c) 2026, Bloch-Okounkov collection maintainers
# GNU General Public License v3.0+ (see LICENSE or https://www.gnu.org/licenses/gpl-3.0.txt)

from __future__ import absolute_import, division, print_function

__metaclass__ = type

from fractions import Fraction
from itertools import combinations

import pytest

from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.constants import GRID, TABLE_COEFFICIENTS, TABLE_QUERY
from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.series import QSeries, QueryError, WindowError, exp8
from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.fock import oracle_coefficient, spec_from_lists
from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.closed_forms import (
    CoeffQuery,
    _layer_accuracies,
    bilateral_f_series,
    bilateral_n1_check,
    coefficient_series,
    ct_formula,
    ct_integrand,
    ct_product,
    example_closed_forms,
    f_multisum,
    g_multisum,
    higher_level_oracle,
    inverse_theta_power,
    multisum_valuation,
)


def small_queries(largest, size):
    """Every well-formed query with indices up to largest and at most size indices."""
    queries = []
    values = range(largest + 1)
    for total in range(1, size + 1):
        for chosen in combinations(values, total):
            for mask in range(2 ** total):
                pos = [value for bit, value in enumerate(chosen) if mask >> bit & 1]
                neg = [value for bit, value in enumerate(chosen) if not mask >> bit & 1]
                queries.append((pos, neg))
    return queries


class TestCoeffQuery:
    def test_sorted_decreasing(self):
        query = CoeffQuery.build([0, 3], [1])
        assert query.pos == (3, 0)
        assert query.neg == (1,)
        assert query.m == 2
        assert query.n == 3
        assert query.to_json() == dict(pos=[3, 0], neg=[1])

    @pytest.mark.parametrize("pos, neg", [([1, 1], []), ([], [-1]), ([], [])])
    def test_malformed(self, pos, neg):
        with pytest.raises(QueryError):
            CoeffQuery.build(pos, neg)

    def test_collision_points_at_the_predicate(self):
        with pytest.raises(QueryError) as error:
            CoeffQuery.build([2], [2])
        assert "r_j != s_k" in error.value.msg
        assert error.value.obj == [2]

    def test_collision_allowed(self):
        assert CoeffQuery.build([2, 1], [2], allow_collision=True).collisions == [2]


class TestThreeWay:
    @pytest.mark.parametrize("pos, neg", small_queries(4, 3))
    def test_oracle_ct_and_multisum_agree(self, pos, neg):
        query = CoeffQuery.build(pos, neg)
        bound = exp8(16)
        oracle = oracle_coefficient(spec_from_lists(pos, neg), 16)
        assert ct_formula(query, 16).agrees_with(oracle, bound)
        assert g_multisum(query, 16).agrees_with(oracle, bound)

    @pytest.mark.parametrize("pos, neg", [([0], []), ([2], [0]), ([], [1, 0]), ([3, 1], [2])])
    def test_integrand_path(self, pos, neg):
        query = CoeffQuery.build(pos, neg)
        assert ct_formula(query, 14, method="integrand").agrees_with(ct_formula(query, 14), exp8(14))

    def test_unknown_method(self):
        with pytest.raises(QueryError):
            ct_formula(CoeffQuery.build([0]), 5, method="residue")


class TestMultisum:
    @pytest.mark.parametrize("r", [[0], [3], [1, 0], [4, 2, 1]])
    def test_valuation(self, r):
        assert f_multisum(r, 40).valuation == multisum_valuation(r)

    def test_coefficient_table(self):
        series = f_multisum(TABLE_QUERY, 900)
        for exponent, value in TABLE_COEFFICIENTS.items():
            assert series.coefficient(GRID * exponent) == value

    def test_repeated_index(self):
        with pytest.raises(QueryError):
            f_multisum([1, 1], 10)


class TestClosedForms:
    @pytest.mark.parametrize("s", [0, 1, 4])
    def test_single_negative(self, s):
        closed = example_closed_forms("n1_neg", (s,), 30)
        assert closed.agrees_with(g_multisum(CoeffQuery.build(neg=[s]), 30), exp8(30))

    @pytest.mark.parametrize("r, s", [(0, 1), (1, 0), (3, 1), (2, 5)])
    def test_mixed_pair(self, r, s):
        closed = example_closed_forms("n2_mixed", (r, s), 30)
        assert closed.agrees_with(ct_formula(CoeffQuery.build([r], [s]), 30), exp8(30))

    @pytest.mark.parametrize("r1, r2", [(1, 0), (0, 1), (4, 2), (2, 4)])
    def test_positive_pair_in_either_order(self, r1, r2):
        closed = example_closed_forms("n2_pos", (r1, r2), 30)
        assert closed.agrees_with(f_multisum([r1, r2], 30), exp8(30))

    def test_positive_pair_needs_distinct_indices(self):
        with pytest.raises(QueryError):
            example_closed_forms("n2_pos", (2, 2), 10)

    def test_unknown_form(self):
        with pytest.raises(QueryError):
            example_closed_forms("n3_pos", (2, 1, 0), 10)

    @pytest.mark.parametrize("pos, neg", [([2, 0], []), ([], [3]), ([1], [2]), ([2, 1], [0])])
    def test_fast_path_dispatch(self, pos, neg):
        query = CoeffQuery.build(pos, neg)
        assert coefficient_series(query, 25).agrees_with(ct_formula(query, 25), exp8(25))


class TestBilateral:
    @pytest.mark.parametrize("half_width, order", [(10, 20), (14, 40)])
    def test_identity(self, half_width, order):
        result = bilateral_n1_check(half_width, order)
        assert result.passed
        assert result.cells_checked > 0

    def test_window_too_small(self):
        with pytest.raises(WindowError):
            bilateral_n1_check(5, 20)

    def test_perturbation_is_caught(self):
        result = bilateral_n1_check(10, 20, perturb=QSeries.monomial(GRID))
        # q * t^(1/2) * q^(81/8) t^(-9/2) is the first perturbed cell the window certifies
        assert not result.passed
        assert result.cell == (-4, GRID + 81)

    def test_series_keys(self):
        series = bilateral_f_series(3, 10)
        assert series.get(1) == f_multisum([0], 10)
        assert series.get(-1) == g_multisum(CoeffQuery.build(neg=[0]), 10)


class TestInverseTheta:
    @pytest.mark.parametrize("ell", [1, 2, 3])
    def test_times_theta_power_is_one(self, ell):
        result = inverse_theta_power(ell, 24, 10)
        assert result.ell == ell
        assert result.check.passed
        assert result.check.cells_checked > 0

    def test_power_must_be_positive(self):
        with pytest.raises(QueryError):
            inverse_theta_power(0, 4, 4)

    def test_window_must_certify_the_centre(self):
        with pytest.raises(WindowError):
            inverse_theta_power(1, 0, 10)

    def test_second_power_of_bilateral_series(self):
        assert higher_level_oracle(2, 8, 6).passed


class TestConstantTermLayers:
    @pytest.mark.parametrize("pos, neg", [([6], [5, 4, 3]), ([1, 0], [2]), ([7, 2], [0]), ([], [6, 1])])
    def test_large_indices_match_integrand(self, pos, neg):
        query = CoeffQuery.build(pos, neg)
        expected = ct_formula(query, 30, method="integrand")
        assert ct_product(query, 30).agrees_with(expected, exp8(30))
        assert g_multisum(query, 30).agrees_with(expected, exp8(30))

    def test_collision_matches_integrand(self):
        query = CoeffQuery.build([2, 1], [2], allow_collision=True)
        assert ct_product(query, 20).agrees_with(ct_formula(query, 20, method="integrand"), exp8(20))

    def test_half_grid_and_fractional_bound(self):
        query = CoeffQuery.build([2], [1, 0])
        series = ct_product(query, Fraction(21, 8))
        assert series.order == 21
        assert all(e % 4 == 0 for e, c in series.terms())
        assert series.agrees_with(ct_formula(query, Fraction(21, 8), method="integrand"), 21)

    def test_layers_stay_narrow(self):
        factors = [("pos", 13), ("neg", 11), ("neg", 9), ("neg", 7)]
        top = 600
        stages = _layer_accuracies(factors, top)
        assert len(stages) == 4
        for w in range(-24, 25):
            assert stages[-1][w] >= top - w * w
        assert max(len(stage) for stage in stages) < 200
        assert all(0 < value <= top for stage in stages for value in stage.values())

    def test_empty_bound(self):
        assert ct_product(CoeffQuery.build([0]), 0).is_zero()


class TestIntegrandSupport:
    @pytest.mark.parametrize("order", [10, 20, 40])
    def test_support_bound_is_non_positive(self, order):
        integrand = ct_integrand(CoeffQuery.build([0, 2], [1]), order)
        assert integrand.support_bound() <= 0
        # zeta-keys are in 1/2 units, their count grows linearly in the order
        assert all(abs(key) < 4 * order for key in integrand.keys())
        assert len(integrand.keys()) <= 8 * order + 1
