# -*- coding: utf-8 -*-

# Copyright: (c) 2026, Bloch-Okounkov collection maintainers
# GNU General Public License v3.0+ (see LICENSE or https://www.gnu.org/licenses/gpl-3.0.txt)

from __future__ import absolute_import, division, print_function

__metaclass__ = type

from collections import namedtuple
from fractions import Fraction
from math import comb, factorial

from mpmath import mp, mpf

from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.constants import GRID, INF, NUMERIC_TOLERANCE, SCAN_CHECKPOINTS
from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.series import (
    ConsistencyError,
    PrecisionError,
    QueryError,
    euler_pochhammer,
    partition_numbers,
)
from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.closed_forms import coefficient_series
from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.false_theta import clearing_factors, psi


EulerTable = namedtuple("EulerTable", ["at_one", "at_zero"])
NumericValue = namedtuple("NumericValue", ["value", "tail"])
ThetaTransform = namedtuple("ThetaTransform", ["z", "y", "lhs", "rhs", "error", "bound", "passed"])
ScanRow = namedtuple("ScanRow", ["l", "coefficient", "p", "ratio"])
AccuracyReport = namedtuple("AccuracyReport", ["ys", "errors", "orders", "series"])


class AsymExpansion(namedtuple("AsymExpansion", ["coeffs", "K"])):
    """sum over k <= K of coeffs[k] (pi y)^k with exact rational coefficients"""

    __slots__ = ()

    def value(self, y, precision=50):
        with mp.workdps(precision):
            t = mp.pi * mpf(y)
            return mp.fsum(_to_mpf(c) * t ** k for k, c in enumerate(self.coeffs))

    def normalized(self):
        """2^n c_k, n recovered from c_0 = 2^-n."""
        return [c / self.coeffs[0] for c in self.coeffs]

    def to_json(self):
        return dict(K=self.K, coeffs=[dict(numerator=str(c.numerator), denominator=str(c.denominator)) for c in self.coeffs])


def _to_mpf(value):
    if isinstance(value, Fraction):
        return mpf(value.numerator) / value.denominator
    return mpf(value)


def euler_values(limit):
    """
    E_v(1) and E_v(0) for v <= limit from 2 e^(xt)/(e^t + 1).

    Both reflection identities are asserted on the finished table.

    :param limit: Largest index V. -> Int
    :return: Exact values at 1 and at 0. -> EulerTable
    """
    if limit < 0:
        raise QueryError("Euler table needs a non-negative size, got {0}".format(limit))
    exp_series = [Fraction(1, factorial(k)) for k in range(limit + 1)]
    denominator = list(exp_series)
    denominator[0] += 1
    # 2/(e^t + 1) by series inversion
    inverse = [Fraction(0)] * (limit + 1)
    for k in range(limit + 1):
        acc = Fraction(2 if k == 0 else 0)
        for j in range(1, k + 1):
            acc -= denominator[j] * inverse[k - j]
        inverse[k] = acc / denominator[0]
    shifted = [sum(exp_series[j] * inverse[k - j] for j in range(k + 1)) for k in range(limit + 1)]
    at_zero = [inverse[k] * factorial(k) for k in range(limit + 1)]
    at_one = [shifted[k] * factorial(k) for k in range(limit + 1)]
    for v in range(limit + 1):
        if at_one[v] != (-1) ** v * at_zero[v] or at_one[v] + at_zero[v] != (2 if v == 0 else 0):
            raise ConsistencyError("Euler values at index {0} violate the reflection identities".format(v), (str(at_one[v]), str(at_zero[v])))
    return EulerTable(at_one, at_zero)


def euler_recurrence(limit):
    """E_v(0) from sum_k C(v, k) E_k(0) + E_v(0) = 2 [v = 0]."""
    values = []
    for v in range(limit + 1):
        acc = Fraction(2 if v == 0 else 0) - sum(comb(v, k) * values[k] for k in range(v))
        values.append(acc / 2)
    return values


def gamma_half_ratio(ell):
    """Gamma((l+1)/2)/Gamma(1/2) = prod over i <= l/2 of (2i-1)/2."""
    if ell < 0 or ell % 2:
        raise QueryError("Gamma ratio is defined here for even l >= 0, got {0}".format(ell))
    value = Fraction(1)
    for i in range(1, ell // 2 + 1):
        value *= Fraction(2 * i - 1, 2)
    return value


def _slot_table(base, shift, flip, K):
    # (v, l) -> E_v * (-1)^l * x^(v-l) / (l! (v-l)!) for one slot
    table = dict()
    for v in range(2 * K + 1):
        for ell in range(v + 1):
            if 2 * v - ell > 2 * K:
                continue
            value = base[v] * shift ** (v - ell) / (factorial(ell) * factorial(v - ell))
            if flip and ell % 2:
                value = -value
            if value:
                table[(v, ell)] = value
    return table


def _expansion(slots, K):
    """
    Collect multi-indices by k = v - l/2 with l even.

    slots holds (euler_values, x, flip) per slot; the i^l factor is (-1)^(l/2).
    """
    state = {(0, 0): Fraction(1)}
    for base, shift, flip in slots:
        table = _slot_table(base, shift, flip, K)
        merged = dict()
        for (v, ell), acc in state.items():
            for (dv, dl), value in table.items():
                key = (v + dv, ell + dl)
                if 2 * key[0] - key[1] > 2 * K:
                    continue
                merged[key] = merged.get(key, 0) + acc * value
        state = merged
    coeffs = [Fraction(0)] * (K + 1)
    for (v, ell), value in state.items():
        if ell % 2:
            continue
        k = v - ell // 2
        coeffs[k] += (-1) ** (v % 2) * 2 ** v * (-1) ** ((ell // 2) % 2) * gamma_half_ratio(ell) * value
    scale = Fraction(1, 2 ** len(slots))
    return AsymExpansion([scale * c for c in coeffs], K)


def asym_F(r, K):
    """
    Expansion of F_r at q = e^(-2 pi y) in powers of pi y.

    :param r: Distinct non-negative indices. -> List
    :param K: Last order kept. -> Int
    :return: c_0 .. c_K. -> AsymExpansion
    """
    r = list(r)
    if len(set(r)) != len(r) or any(value < 0 for value in r):
        raise QueryError("Indices must be distinct and non-negative, got {0}".format(r))
    table = euler_values(2 * K)
    return _expansion([(table.at_one, Fraction(2 * value + 1, 2), False) for value in r], K)


def asym_G(query, K):
    """Positive slots take E_v(1) with (-1)^l_j, negative slots take E_v(0) at s + 1/2."""
    table = euler_values(2 * K)
    slots = [(table.at_one, Fraction(2 * r + 1, 2), True) for r in query.pos]
    slots += [(table.at_zero, Fraction(2 * s + 1, 2), False) for s in query.neg]
    return _expansion(slots, K)


def predicted_c1(query):
    """2^n c_1 predicted in closed form: -(sum r + n(n+1)/4) or -(r - s + m + n(n-3)/4)."""
    n = query.n
    if query.m == n:
        return -(sum(query.pos) + Fraction(n * (n + 1), 4))
    return -(sum(query.pos) - sum(query.neg) + query.m + Fraction(n * (n - 3), 4))


def coefficient_bound(e):
    """(2 sqrt(e) + 2) exp(pi sqrt(2e/3)), an envelope for the coefficient moduli at q^e."""
    e = mpf(e)
    return (2 * mp.sqrt(e) + 2) * mp.exp(mp.pi * mp.sqrt(2 * e / 3))


def tail_bound(order8, y, precision=50):
    """
    Bound on sum over e >= order of |a_e| x^e on the 1/8 grid, x = e^(-2 pi y).

    Consecutive envelope terms shrink by at most the ratio at the truncation order.
    """
    if order8 == INF:
        return mpf(0)
    with mp.workdps(precision):
        N = mpf(order8) / GRID
        step = mpf(1) / GRID
        x = mp.exp(-2 * mp.pi * mpf(y))
        first = coefficient_bound(N) * x ** N
        ratio = coefficient_bound(N + step) / coefficient_bound(N) * x ** step
        if ratio >= 1:
            raise PrecisionError("Truncation q^{0} is too short for y={1}, the tail does not decay".format(mp.nstr(N, 8), y))
        return first / (1 - ratio)


def required_order(y, tolerance=NUMERIC_TOLERANCE, precision=50):
    """Smallest q-order, in steps of 50, whose tail bound at y is below the tolerance."""
    order = 50
    with mp.workdps(precision):
        while True:
            try:
                if tail_bound(GRID * order, y, precision) < mpf(tolerance):
                    return order
            except PrecisionError:
                pass
            order += 50


def numeric_eval(series, y, precision=50, tolerance=NUMERIC_TOLERANCE):
    """
    Value of a truncated series at q = e^(-2 pi y) with a rigorous truncation tail.

    :param series: Series to evaluate. -> QSeries
    :param y: Positive real, a decimal string keeps full precision. -> Str|Float
    :param precision: Decimal digits. -> Int
    :param tolerance: Largest acceptable tail bound. -> Str
    :return: Value and tail bound. -> NumericValue
    """
    with mp.workdps(precision):
        y = mpf(y)
        if y <= 0:
            raise QueryError("Evaluation point y must be positive")
        tail = tail_bound(series.order, y, precision)
        if tail > mpf(tolerance):
            raise PrecisionError("Order {0}/{1} leaves a tail bound {2} above {3} at y={4}".format(series.order, GRID, mp.nstr(tail, 5), tolerance, mp.nstr(y, 8)))
        x = mp.exp(-2 * mp.pi * y / GRID)
        value = mp.fsum(_to_mpf(c) * x ** e for e, c in series.terms())
        return NumericValue(value, tail)


def numeric_pair_eval(pair, query, y, precision=50):
    """(P(x) Psi(x) + Q(x)) / prod(1 - x^d) at x = e^(-2 pi y)."""
    with mp.workdps(precision + 10):
        x = mp.exp(-2 * mp.pi * mpf(y) / GRID)
        psi_value = mp.fsum(_to_mpf(c) * x ** e for e, c in psi(required_order(y, "1e-{0}".format(precision), precision)).terms())
        P = mp.fsum(_to_mpf(c) * x ** e for e, c in pair.P.terms())
        Q = mp.fsum(_to_mpf(c) * x ** e for e, c in pair.Q.terms())
        denominator = mpf(1)
        for d in clearing_factors(query):
            denominator *= 1 - x ** d
        return (P * psi_value + Q) / denominator


def theta_transform_check(z, y, precision=50):
    """
    theta(z; iy) against its modular image e^(-pi z^2/y)/sqrt(y).

    :param z: Real in (-1/2, 1/2). -> Str|Float
    :param y: Positive real. -> Str|Float
    :param precision: Decimal digits. -> Int
    :return: Both sides, the error and its exponentially small bound. -> ThetaTransform
    """
    with mp.workdps(precision):
        z = mpf(z)
        y = mpf(y)
        if abs(z) >= mpf(1) / 2 or y <= 0:
            raise QueryError("theta transform needs |z| < 1/2 and y > 0")
        lhs = mp.jtheta(3, mp.pi * z, mp.exp(-mp.pi * y))
        rhs = mp.exp(-mp.pi * z * z / y) / mp.sqrt(y)
        error = abs(lhs - rhs)
        bound = 3 * mp.exp(-mp.pi * (1 - 2 * abs(z)) ** 2 / (4 * y)) / mp.sqrt(y)
        return ThetaTransform(z, y, lhs, rhs, error, bound, bool(error <= bound))


def order_of_accuracy(query, K, ys, precision=50, tolerance=NUMERIC_TOLERANCE, series=None):
    """
    Error of the K-truncated expansion at each y and the empirical order between neighbours.

    :param query: Coefficient request. -> CoeffQuery
    :param K: Truncation order. -> Int
    :param ys: Decreasing evaluation points. -> List
    :param series: Coefficient series long enough for the smallest y, computed when None. -> QSeries
    :return: Errors, log(e_1/e_2)/log(y_1/y_2) for consecutive pairs and the series evaluated. -> AccuracyReport
    """
    expansion = asym_F(query.pos, K) if query.m == query.n else asym_G(query, K)
    if series is None:
        series = coefficient_series(query, required_order(min(mpf(value) for value in ys), tolerance, precision))
    errors = []
    with mp.workdps(precision):
        for y in ys:
            exact = numeric_eval(series, y, precision, tolerance).value
            errors.append(abs(exact - expansion.value(y, precision)))
        orders = []
        for index in range(1, len(ys)):
            orders.append(mp.log(errors[index - 1] / errors[index]) / mp.log(mpf(ys[index - 1]) / mpf(ys[index])))
    return AccuracyReport(list(ys), errors, orders, series)


def coefficient_ratio_scan(query, limit, euler_quotient=False):
    """
    Ratios against the partition numbers.

    For F_r the coefficients b_l of F_r/(q;q)_inf are compared with p(l)/2^n. For a mixed query
    the q^l coefficient c_l of G is listed for every l and compared with p(l/2)/2^n at even l;
    euler_quotient compares G/(q;q)_inf with p(l) instead.

    :param query: Coefficient request. -> CoeffQuery
    :param limit: Largest l. -> Int
    :param euler_quotient: Divide G by (q;q)_inf before comparing. -> Bool
    :return: One row per l >= 1. -> List
    """
    order = limit + 1
    series = coefficient_series(query, order)
    pure = query.m == query.n
    if pure or euler_quotient:
        series = series.divide(euler_pochhammer(order))
    partitions = partition_numbers(limit)
    scale = 2 ** query.n
    rows = []
    for ell in range(1, limit + 1):
        value = series.coefficient(GRID * ell)
        if pure or euler_quotient:
            p = partitions[ell]
        elif ell % 2 == 0:
            p = partitions[ell // 2]
        else:
            rows.append(ScanRow(ell, value, None, None))
            continue
        rows.append(ScanRow(ell, value, p, Fraction(scale * value, p)))
    return rows


def scan_summary(rows, checkpoints=None):
    """|ratio - 1| at the checkpoints inside the scan and the sign check of the coefficients."""
    checkpoints = SCAN_CHECKPOINTS if checkpoints is None else checkpoints
    by_l = dict((row.l, row) for row in rows)
    deviations = dict()
    for point in checkpoints:
        row = by_l.get(point)
        if row is not None and row.ratio is not None:
            deviations[point] = abs(row.ratio - 1)
    negative = [row.l for row in rows if row.coefficient < 0]
    return dict(deviations=deviations, first_negative=negative[0] if negative else None)
