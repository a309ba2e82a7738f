# -*- coding: utf-8 -*-

# Copyright: (c) 2026, Bloch-Okounkov collection maintainers
# GNU General Public License v3.0+ (see LICENSE or https://www.gnu.org/licenses/gpl-3.0.txt)

from __future__ import absolute_import, division, print_function

__metaclass__ = type

import random
from fractions import Fraction

import pytest

from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.constants import GRID, INF
from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.series import (
    BOError,
    GridError,
    QSeries,
    QueryError,
    ZetaLaurent,
    ct_zeta,
    euler_pochhammer,
    exp8,
    fermion_product,
    geometric_factor,
    jacobi_cube,
    jtp_check,
    partition_numbers,
    qs_arith,
    theta_kernel,
    theta_series,
    theta_t,
)


class TestExponentGrid:
    def test_integer_and_half_integer_exponents(self):
        assert exp8(3) == 24
        assert exp8(Fraction(7, 2)) == 28
        assert exp8(Fraction(-1, 8)) == -1

    def test_off_grid_exponent_is_rejected(self):
        with pytest.raises(GridError):
            exp8(Fraction(1, 16))

    def test_infinite_order_passes_through(self):
        assert exp8(INF) == INF


class TestQSeriesArithmetic:
    a = QSeries.from_terms({8: 1, 16: 2}, 40)
    b = QSeries.from_terms({0: 1, 8: -1}, 24)

    def test_product_order_follows_valuations(self):
        product = self.a * self.b
        assert product.order == min(40 + 0, 24 + 8)
        assert list(product.terms()) == [(8, 1), (16, 1), (24, -2)]

    def test_sum_takes_smaller_order(self):
        total = self.a + self.b
        assert total.order == 24
        assert list(total.terms()) == [(0, 1), (16, 2)]

    def test_coefficient_beyond_order_is_refused(self):
        with pytest.raises(GridError):
            self.a.coefficient(40)
        assert self.a.coefficient(32) == 0

    def test_comparison_beyond_known_order_is_refused(self):
        with pytest.raises(GridError):
            self.a.first_mismatch(self.b, 32)

    def test_division_by_pochhammer_gives_partitions(self):
        inverse = QSeries.one(exp8(20)).divide(euler_pochhammer(20))
        table = partition_numbers(19)
        assert [inverse.coefficient(GRID * n) for n in range(20)] == table

    def test_exact_quotient_needs_an_order(self):
        with pytest.raises(BOError):
            QSeries.one().divide(QSeries.from_terms({0: 1, 8: -1}))

    def test_inexact_division_promotes_to_fraction(self):
        half = QSeries.from_terms({0: 1}, 16).divide(QSeries.from_terms({0: 2}, 16))
        assert half.coefficient(0) == Fraction(1, 2)
        assert not half.is_integral()

    def test_shift_moves_order_with_the_series(self):
        shifted = self.a.shift(-8)
        assert shifted.valuation == 0
        assert shifted.order == 32

    def test_json_keeps_order_and_coefficients(self):
        series = QSeries.from_terms({-4: Fraction(1, 3), 12: -5}, 64)
        restored = QSeries.from_json(series.to_json())
        assert restored == series

    def test_qs_arith_dispatch(self):
        assert qs_arith(self.a, self.b, "add") == self.a + self.b
        assert qs_arith(self.a, self.b, "sub") == self.a - self.b
        assert qs_arith(self.a, self.b, "mul") == self.a * self.b
        assert qs_arith(self.a, 3, "scalar-mul").coefficient(16) == 6
        assert qs_arith(self.a, 4, "shift").valuation == 12
        with pytest.raises(BOError):
            qs_arith(self.a, self.b, "pow")


class TestPochhammer:
    def test_first_coefficients(self):
        series = euler_pochhammer(6)
        assert [series.coefficient(GRID * n) for n in range(6)] == [1, -1, -1, 0, 0, 1]

    def test_pentagonal_signs(self):
        series = euler_pochhammer(16)
        assert series.coefficient(GRID * 7) == 1
        assert series.coefficient(GRID * 12) == -1
        assert series.coefficient(GRID * 15) == -1
        assert series.coefficient(GRID * 8) == 0

    def test_partition_numbers(self):
        table = partition_numbers(100)
        assert table[0] == 1
        assert table[5] == 7
        assert table[10] == 42
        assert table[100] == 190569292

    def test_negative_partition_bound(self):
        with pytest.raises(BOError):
            partition_numbers(-1)

    def test_jacobi_cube_matches_cubed_product(self):
        cube = jacobi_cube(12)
        assert cube.agrees_with(euler_pochhammer(12) ** 3, exp8(12))


def random_pair(rng):
    """Two series cut from longer coefficient lists, with the lists kept for a deeper cut."""
    drawn = []
    for _ in range(2):
        valuation = rng.randint(-16, 16)
        length = rng.randint(1, 40)
        coeffs = [rng.choice([-3, -2, -1, 1, 2, 3])] + [rng.randint(-5, 5) for _ in range(2 * length)]
        drawn.append((valuation, coeffs, length))
    return drawn


def partitions(n, largest):
    """Every partition of n into parts no larger than largest, parts in decreasing order."""
    if n == 0:
        yield ()
        return
    for part in range(min(n, largest), 0, -1):
        for rest in partitions(n - part, part):
            yield (part,) + rest


class TestOrderPropagation:
    @pytest.mark.parametrize("seed", range(8))
    def test_random_pairs_agree_with_a_deeper_cut(self, seed):
        (va, ca, la), (vb, cb, lb) = random_pair(random.Random(seed))
        a, b = QSeries(va, ca, va + la), QSeries(vb, cb, vb + lb)
        deep_a, deep_b = QSeries(va, ca, va + 2 * la), QSeries(vb, cb, vb + 2 * lb)
        assert (a.valuation, b.valuation) == (va, vb)

        product = a * b
        assert product.order == min(a.order + vb, b.order + va)
        assert product.agrees_with(deep_a * deep_b, product.order)

        total = a + b
        assert total.order == min(a.order, b.order)
        assert total.agrees_with(deep_a + deep_b, total.order)
        assert (a - b).agrees_with(deep_a - deep_b, total.order)


class TestPartitionEnumeration:
    def test_partition_table_matches_enumeration(self):
        assert [sum(1 for _ in partitions(n, n)) for n in range(31)] == partition_numbers(30)

    def test_pochhammer_counts_distinct_parts_with_sign(self):
        series = euler_pochhammer(31)
        for n in range(31):
            distinct = [parts for parts in partitions(n, n) if len(set(parts)) == len(parts)]
            assert series.coefficient(GRID * n) == sum((-1) ** len(parts) for parts in distinct)


class TestTheta:
    def test_theta_terms_in_window(self):
        terms = theta_t((-1, 3), 2)
        assert list(terms[1].terms()) == [(1, 1)]
        assert list(terms[-1].terms()) == [(1, -1)]
        assert list(terms[3].terms()) == [(9, -1)]
        assert 0 not in terms

    def test_theta_series_agrees_with_window(self):
        whole = theta_series(6)
        window = theta_t((-5, 5), 6)
        for key, value in window.items():
            assert whole.get(key) == value

    def test_theta_kernel_keys_are_half_units(self):
        kernel = theta_kernel(3)
        assert kernel.keys() == [-4, -2, 0, 2, 4]
        assert list(kernel.get(2).terms()) == [(4, 1)]

    def test_geometric_factor_positive_slot(self):
        factor = geometric_factor("pos", 0, 3)
        assert list(factor.get(-2).terms()) == [(4, 1)]
        assert list(factor.get(-4).terms()) == [(8, -1)]
        assert 0 not in factor.terms

    def test_geometric_factor_negative_slot(self):
        factor = geometric_factor("neg", 1, 3)
        assert list(factor.get(0).terms()) == [(0, 1)]
        assert list(factor.get(2).terms()) == [(12, -1)]

    def test_geometric_factor_rejects_bad_requests(self):
        with pytest.raises(QueryError):
            geometric_factor("pos", -1, 3)
        with pytest.raises(QueryError):
            geometric_factor("mid", 0, 3)


class TestTripleProduct:
    def test_identity_holds(self):
        result = jtp_check(50, (-8, 8))
        assert result.passed
        assert result.cell is None
        assert result.cells_checked == 17 * exp8(50)

    def test_perturbation_is_located(self):
        result = jtp_check(10, (-2, 2), perturb=QSeries.monomial(16))
        assert not result.passed
        assert result.cell == (0, 16)

    def test_constant_term_counts_states(self):
        counted = ct_zeta(fermion_product(15))
        inverse = QSeries.one(exp8(15)).divide(euler_pochhammer(15))
        assert counted.agrees_with(inverse, exp8(15))


class TestZetaLaurent:
    def test_product_and_monomial(self):
        left = ZetaLaurent({2: QSeries.monomial(4, 1, 40), -2: QSeries.monomial(4, -1, 40)}, 40)
        square = left * left
        assert list(square.get(0).terms()) == [(8, -2)]
        assert list(square.get(4).terms()) == [(8, 1)]
        moved = left.times_monomial(2, 8, 3)
        assert list(moved.get(4).terms()) == [(12, 3)]

    def test_missing_key_is_zero_of_the_order(self):
        empty = ZetaLaurent({}, 16)
        assert empty.get(6).is_zero()
        assert empty.get(6).order == 16
