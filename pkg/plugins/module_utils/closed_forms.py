# -*- coding: utf-8 -*-

# Copyright: (c) 2026, Bloch-Okounkov collection maintainers
# GNU General Public License v3.0+ (see LICENSE or https://www.gnu.org/licenses/gpl-3.0.txt)

from __future__ import absolute_import, division, print_function

__metaclass__ = type

import math
from collections import namedtuple
from fractions import Fraction
from itertools import zip_longest

from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.constants import GRID, COLLISION_NOTE
from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.series import (
    CheckResult,
    QSeries,
    QueryError,
    WindowError,
    ZetaLaurent,
    ct_zeta,
    euler_pochhammer,
    exp8,
    geometric_factor,
    jacobi_cube,
    theta_kernel,
    theta_series,
)


class CoeffQuery(namedtuple("CoeffQuery", ["pos", "neg"])):
    """Fourier coefficient request, pos and neg both strictly decreasing tuples"""

    __slots__ = ()

    @classmethod
    def build(cls, pos=None, neg=None, allow_collision=False):
        """
        Validate and normalize a coefficient request.

        The coefficient is symmetric within pos and within neg, so both lists are sorted
        in decreasing order. Repeated entries, negative entries and collisions are rejected.

        :param pos: Indices r of t^(r+1/2). -> List
        :param neg: Indices s of t^(-s-1/2). -> List
        :param allow_collision: Accept r_j == s_k. -> Bool
        :return: The normalized query. -> CoeffQuery
        """
        pos = [int(value) for value in pos or []]
        neg = [int(value) for value in neg or []]
        for label, values in (("pos", pos), ("neg", neg)):
            if any(value < 0 for value in values):
                raise QueryError("Entries of {0} must be non-negative, got {1}".format(label, values))
            if len(set(values)) != len(values):
                raise QueryError("Entries of {0} must be strictly decreasing after sorting, got repeated values in {1}".format(label, values))
        if not pos and not neg:
            raise QueryError("A query needs at least one positive or negative index")
        clash = sorted(set(pos) & set(neg))
        if clash and not allow_collision:
            raise QueryError("Colliding indices {0} appear in both pos and neg. {1}".format(clash, COLLISION_NOTE), clash)
        return cls(tuple(sorted(pos, reverse=True)), tuple(sorted(neg, reverse=True)))

    @property
    def m(self):
        return len(self.pos)

    @property
    def n(self):
        return len(self.pos) + len(self.neg)

    @property
    def collisions(self):
        return sorted(set(self.pos) & set(self.neg))

    def to_json(self):
        return dict(pos=list(self.pos), neg=list(self.neg))


InverseThetaPower = namedtuple("InverseThetaPower", ["ell", "series", "certified", "check"])


def _complete_homogeneous(steps, bounds):
    """h_A(q^step_1, ..., q^step_k) truncated at bounds[A] for every A < len(bounds)."""
    h = [QSeries.one(bounds[0])] + [QSeries.zero(bound) for bound in bounds[1:]]
    for step in steps:
        for count in range(1, len(bounds)):
            h[count] = (h[count] + h[count - 1].shift(step)).truncate(bounds[count])
    return h


def multisum_valuation(r):
    """Exponent of the all-zero term n^2/2 + sum(r_k + 1/2), in grid units."""
    n = len(r)
    return 4 * n * n + sum(4 * (2 * value + 1) for value in r)


def f_multisum(r, order):
    """
    F_r as sum over M of (-1)^M q^((n+M)^2/2 + sum(r+1/2)) h_M(q^(r_1+1/2), ...).

    Grouping the n-fold sum by M = sum(m_k) leaves complete homogeneous sums, and the
    quadratic bound (n+M)^2/2 < order ends the outer summation.

    :param r: Distinct non-negative indices. -> List
    :param order: Exclusive q-exponent bound. -> Int
    :return: The truncated coefficient series. -> QSeries
    """
    r = list(r)
    if len(set(r)) != len(r) or any(value < 0 for value in r):
        raise QueryError("Indices must be distinct and non-negative, got {0}".format(r))
    bound = exp8(order)
    n = len(r)
    base = sum(4 * (2 * value + 1) for value in r)
    bounds = []
    while bound - 4 * (n + len(bounds)) ** 2 - base > 0:
        bounds.append(bound - 4 * (n + len(bounds)) ** 2 - base)
    if not bounds:
        return QSeries.zero(bound)
    h = _complete_homogeneous([4 * (2 * value + 1) for value in r], bounds)
    total = QSeries.zero(bound)
    for count, series in enumerate(h):
        term = series.shift(4 * (n + count) ** 2 + base)
        total = total + (term if count % 2 == 0 else -term)
    return total.truncate(bound)


def g_multisum(query, order):
    """
    G_(r,s) as the a_j-sum, grouped into h_A over the positive and h_B over the negative slots.

    The quadratic (A + m - B)^2/2 can vanish, so both sums are cut by the linear valuation
    of h_A and h_B instead.
    """
    if query.m == query.n:
        return f_multisum(query.pos, order)
    bound = exp8(order)
    base = sum(4 * (2 * value + 1) for value in query.pos)
    top = bound - base
    if top <= 0:
        return QSeries.zero(bound)
    x_steps = [4 * (2 * value + 1) for value in query.pos]
    y_steps = [4 * (2 * value + 1) for value in query.neg]
    hx = _complete_homogeneous(x_steps, [top] * (top // min(x_steps) + 1 if x_steps else 1))
    hy = _complete_homogeneous(y_steps, [top] * (top // min(y_steps) + 1))
    total = QSeries.zero(top)
    for count_a, series_a in enumerate(hx):
        if series_a.is_zero():
            continue
        for count_b, series_b in enumerate(hy):
            if series_b.is_zero():
                continue
            shift = 4 * (count_a + query.m - count_b) ** 2
            if series_a.valuation + series_b.valuation + shift >= top:
                continue
            term = (series_a * series_b).shift(shift).truncate(top)
            total = total + (term if (count_a + count_b) % 2 == 0 else -term)
    return total.shift(base).truncate(bound)


def ct_integrand(query, order):
    """Constant-term integrand of the query as an explicit ZetaLaurent."""
    integrand = theta_kernel(order)
    for r in query.pos:
        integrand = integrand * geometric_factor("pos", r, order)
    for s in query.neg:
        integrand = integrand * geometric_factor("neg", s, order)
    return integrand


def _layer_accuracies(factors, top):
    """
    Truncation of every zeta-layer after each factor, walked back from sum_w X_w q^(w^2) < q^top.

    Exponents are in units of q^(1/2). A pos factor with step h sends X_v into Y_(v-k) at
    q^(k h), a neg factor sends X_v into Y_(v+k) at q^(k h), k >= 1 and k >= 0 respectively.
    """
    need = dict((w, top - w * w) for w in range(-math.isqrt(top), math.isqrt(top) + 1) if top - w * w > 0)
    stages = []
    for kind, step in reversed(factors):
        acc = dict()
        if not need:
            stages.append(acc)
            continue
        carry = 0
        if kind == "pos":
            w, last = min(need), max(need)
            while True:
                value = max(need.get(w, 0), carry)
                if value <= 0 and w > last:
                    break
                if value > 0:
                    acc[w] = value
                carry = value - step
                w += 1
            need = dict((w + 1, value - step) for w, value in acc.items() if value > step)
        else:
            w, first = max(need), min(need)
            while True:
                value = max(need.get(w, 0), carry)
                if value <= 0 and w < first:
                    break
                if value > 0:
                    acc[w] = value
                carry = value - step
                w -= 1
            need = dict(acc)
        stages.append(acc)
    stages.reverse()
    return stages


def _times_pos(layers, step, acc):
    # Y_w = x X_(w+1) - x Y_(w+1), walking down from the top layer
    result = dict()
    for w in sorted(acc, reverse=True):
        length = acc[w] - step
        if length <= 0:
            continue
        value = [a - b for a, b in zip_longest(layers.get(w + 1, [])[:length], result.get(w + 1, [])[:length], fillvalue=0)]
        if any(value):
            result[w] = [0] * step + value
    return result


def _times_neg(layers, step, acc):
    # Y_w = X_w - y Y_(w-1), walking up from the bottom layer
    result = dict()
    for w in sorted(acc):
        below = result.get(w - 1)
        shifted = ([0] * step + below)[: acc[w]] if below else []
        value = [a - b for a, b in zip_longest(layers.get(w, [])[: acc[w]], shifted, fillvalue=0)]
        if any(value):
            result[w] = value
    return result


def ct_product(query, order):
    """
    Constant term without forming the full integrand.

    The geometric factors are applied to a zeta-layered series by their defining recurrences,
    then CT(X * sum zeta^l q^(l^2/2)) = sum_w X_w q^(w^2/2). Every exponent met on the way is a
    multiple of 1/2, so the layers are integer lists on that grid, each one kept only to the
    depth the final sum still reads from it.
    """
    bound = exp8(order)
    top = -(-bound // 4)
    if top <= 0:
        return QSeries.zero(bound)
    factors = [("pos", 2 * r + 1) for r in query.pos] + [("neg", 2 * s + 1) for s in query.neg]
    layers = {0: [1]}
    for (kind, step), acc in zip(factors, _layer_accuracies(factors, top)):
        layers = _times_pos(layers, step, acc) if kind == "pos" else _times_neg(layers, step, acc)
    total = [0] * top
    for w, coeffs in layers.items():
        for e, c in enumerate(coeffs[: max(top - w * w, 0)], w * w):
            total[e] += c
    return QSeries(0, total, top).dilate(4).truncate(bound)


def ct_formula(query, order, method="product"):
    """
    Coefficient through the constant-term formula.

    :param query: The coefficient request. -> CoeffQuery
    :param order: Exclusive q-exponent bound. -> Int
    :param method: product applies factors by recurrence, integrand builds the full ZetaLaurent. -> Str
    :return: The truncated coefficient series. -> QSeries
    """
    if method == "integrand":
        return ct_zeta(ct_integrand(query, order)).truncate(exp8(order))
    if method != "product":
        raise QueryError("Unknown constant-term method '{0}'".format(method))
    return ct_product(query, order)


def _alternating(order, quadratic, linear, offset=0, start=0, sign=1):
    """Sum over l >= start of sign*(-1)^l q^(quadratic*l^2 + linear*l + offset), all in grid units."""
    terms = []
    ell = start
    while True:
        exponent = quadratic * ell * ell + linear * ell + offset
        if exponent >= order:
            if quadratic * (2 * ell + 1) + linear >= 0:
                break
        else:
            terms.append((exponent, sign * (-1) ** (ell % 2)))
        ell += 1
    return QSeries.from_terms(terms, order)


def _geometric_inverse(series, d, order):
    """series/(1 - q^d) for d in grid units, negative d normalized to -q^|d|/(1 - q^|d|)."""
    if d == 0:
        raise QueryError("Denominator 1 - q^0 vanishes")
    if d < 0:
        series = -series.shift(-d)
        d = -d
    return series.divide(QSeries.from_terms({0: 1, d: -1}), order)


def example_closed_forms(name, params, order, lower_limit=1):
    """
    Printed single-sum closed forms of the small cases.

    n1_neg(s) is sum (-1)^l q^(l^2/2 + l(s+1/2)). n2_mixed(r, s) carries the prefactor
    1/(1 - q^(r+s+1)). n2_pos(r1, r2) carries q^(r1+1/2)/(1 - q^(r1-r2)) in either index order,
    its sum starting at lower_limit.
    """
    bound = exp8(order)
    if name == "n1_neg":
        (s,) = params
        return _alternating(bound, 4, 4 * (2 * s + 1))
    if name == "n2_mixed":
        r, s = params
        shift = GRID * (r + s + 1)
        first = -_alternating(bound, 4, 4 * (2 * r + 1), start=1)
        second = _alternating(bound, 4, 4 * (2 * s + 1), offset=shift)
        return _geometric_inverse(first - second, shift, bound)
    if name == "n2_pos":
        r1, r2 = params
        d = GRID * (r1 - r2)
        if d == 0:
            raise QueryError("n2_pos needs r1 != r2, got {0} twice".format(r1))
        prefactor = 4 * (2 * r1 + 1) + (-d if d < 0 else 0)
        inner_bound = bound - prefactor
        terms = []
        ell = lower_limit
        while 4 * (ell + 1) ** 2 < inner_bound:
            sign = (-1) ** ((ell + 1) % 2)
            low = 4 * (ell + 1) ** 2 + ell * 4 * (2 * r2 + 1)
            terms.append((low, sign))
            terms.append((low + ell * d, -sign))
            ell += 1
        inner = QSeries.from_terms(terms, max(inner_bound, 0))
        return _geometric_inverse(inner.shift(4 * (2 * r1 + 1)), d, bound)
    raise QueryError("Unknown closed form '{0}'".format(name))


def coefficient_series(query, order):
    """Fastest exact path for a well-formed query."""
    if query.m == query.n:
        return f_multisum(query.pos, order)
    if query.m == 0 and query.n == 1:
        return example_closed_forms("n1_neg", query.neg, order)
    if query.m == 1 and query.n == 2 and not query.collisions:
        return example_closed_forms("n2_mixed", (query.pos[0], query.neg[0]), order)
    return ct_product(query, order)


def bilateral_f_series(half_width, order, perturb=None):
    """
    sum over j in [-J, J] of f_j t^(j+1/2), keyed by 2j+1.

    f_j is F_(j) for j >= 0 and the t^(-s-1/2) coefficient for j = -s-1.
    """
    bound = exp8(order)
    terms = dict()
    for j in range(-half_width, half_width + 1):
        if j >= 0:
            series = f_multisum([j], order)
        else:
            series = g_multisum(CoeffQuery.build(neg=[-j - 1]), order)
        if j == 0 and perturb is not None:
            series = series + perturb.truncate(bound)
        terms[2 * j + 1] = series
    return ZetaLaurent(terms, bound)


def bilateral_n1_check(half_width, order, perturb=None):
    """
    (sum f_j t^(j+1/2)) * Theta(t) = q^(1/8) (q;q)_inf^3 in the region |t| > 1.

    A cell (t^k, q^e) is compared only when every omitted f_j lands at or above q^e.

    :param half_width: J, the window of f_j indices. -> Int
    :param order: Exclusive q-exponent bound. -> Int
    :param perturb: Optional series added to f_0. -> QSeries
    :return: Check outcome with the first mismatching (t-exponent, exp8) cell. -> CheckResult
    """
    if half_width < int(math.ceil(math.sqrt(2 * order))) + 2:
        raise WindowError("Window half-width {0} is below ceil(sqrt(2*{1}))+2".format(half_width, order))
    bound = exp8(order)
    product = bilateral_f_series(half_width, order, perturb) * theta_series(order)
    target = jacobi_cube(order).shift(1).truncate(bound)
    checked = 0
    for k in range(-(half_width // 2), half_width // 2 + 1):
        certified = min(bound, 8 * (half_width + 2) + (2 * k - 2 * half_width - 3) ** 2, (2 * k + 2 * half_width + 1) ** 2)
        left = product.get(2 * k)
        right = target if k == 0 else QSeries.zero(bound)
        mismatch = left.first_mismatch(right, certified)
        checked += certified
        if mismatch is not None:
            return CheckResult(False, (k, mismatch), checked, dict(left=str(left.coefficient(mismatch)), right=str(right.coefficient(mismatch))))
    return CheckResult(True, None, checked, None)


def _unit_product(order8):
    """U = (q;q)(qt;q)(q/t;q) with t keyed in 1/2 units, complete below order8."""
    unit = ZetaLaurent.constant(euler_pochhammer(Fraction(order8, GRID)))
    step = 1
    while GRID * step < order8:
        shift = GRID * step
        unit = unit - unit.times_monomial(2, shift) - unit.times_monomial(-2, shift) + unit.times_monomial(0, 2 * shift)
        step += 1
    return unit


def _inverse_unit(unit):
    one = ZetaLaurent.constant(QSeries.one(unit.order))
    excess = one - unit
    inverse = one
    power = one
    while True:
        power = power * excess
        if not power.terms:
            break
        inverse = inverse + power
    return inverse


def inverse_theta_power(ell, window, order):
    """
    Laurent expansion of Theta(t)^-ell in the region |t| > 1.

    Theta = q^(1/8) (t^(1/2) - t^(-1/2)) U, so Theta^-ell = q^(-ell/8) t^(-ell/2) (1 - 1/t)^-ell U^-ell.
    The geometric factor is cut after the window, and a cell (t-key k, q^e) is certified when
    every dropped term lies at or above q^e. The expansion is multiplied back by Theta^ell on
    certified cells.

    :param ell: Positive power. -> Int
    :param window: Half-width W, t-exponents in [-W, W]. -> Int
    :param order: Exclusive q-exponent bound. -> Int
    :return: Series keyed by t-exponent in 1/2 units, certified bounds and the product check. -> InverseThetaPower
    """
    if ell < 1:
        raise QueryError("Theta power must be positive, got {0}".format(ell))
    bound = exp8(order)
    inner = bound + ell
    cut = max(window, 0)
    geometric = ZetaLaurent(dict((-2 * k, QSeries.monomial(0, math.comb(k + ell - 1, ell - 1), inner)) for k in range(cut + 1)), inner)

    def certified(key):
        return min(bound, 4 * (key + ell + 2 * cut + 2) - ell)

    central = -(ell % 2)
    if certified(central) < bound:
        raise WindowError("Window {0} cannot certify q^{1} for Theta^-{2}".format(window, order, ell))

    unit_power = _inverse_unit(_unit_product(inner))
    powered = ZetaLaurent.constant(QSeries.one(inner))
    for dummy in range(ell):
        powered = powered * unit_power
    full = (geometric * powered).times_monomial(-ell, -ell)
    series = ZetaLaurent(dict((key, value) for key, value in full.terms.items() if abs(key) <= 2 * window), bound)
    bounds = dict((key, certified(key)) for key in range(-2 * window, 2 * window + 1) if (key - ell) % 2 == 0)

    theta = theta_series(Fraction(bound + ell, GRID), ell)
    product = full * theta
    theta_terms = [(key, e) for key, value in theta.terms.items() for e, dummy in value.terms()]
    checked = 0
    for key in range(-2 * window, 2 * window + 1, 2):
        value = product.get(key)
        for e in range(0, bound):
            if any(certified(key - t_key) <= e - t_e for t_key, t_e in theta_terms if t_e <= e + ell):
                continue
            expected = 1 if key == 0 and e == 0 else 0
            checked += 1
            if value.coefficient(e) != expected:
                check = CheckResult(False, (key, e), checked, dict(left=str(value.coefficient(e)), right=str(expected)))
                return InverseThetaPower(ell, series, bounds, check)
    return InverseThetaPower(ell, series, bounds, CheckResult(True, None, checked, None))


def higher_level_oracle(ell, window, order):
    """
    ell-th power of the bilateral F_j series against (q^(1/8)(q;q)^3)^ell Theta^-ell.

    The rank-ell trace is the ell-th power of the rank-one function, compared on cells that
    both truncations certify.
    """
    bound = exp8(order)
    expansion = inverse_theta_power(ell, window, order)
    bilateral = bilateral_f_series(window, order)
    powered = ZetaLaurent.constant(QSeries.one(bound))
    for dummy in range(ell):
        powered = powered * bilateral
    normalization = jacobi_cube(order).shift(1) ** ell
    checked = 0
    for key, limit in sorted(expansion.certified.items()):
        cut = min(bound, limit + ell, 4 * (key + 2 * window + ell), 8 * (window + 2))
        if cut <= 0:
            continue
        left = powered.get(key)
        right = (expansion.series.get(key) * normalization).truncate(cut)
        mismatch = left.first_mismatch(right, cut)
        checked += cut
        if mismatch is not None:
            return CheckResult(False, (key, mismatch), checked, dict(left=str(left.coefficient(mismatch)), right=str(right.coefficient(mismatch))))
    return CheckResult(True, None, checked, None)
