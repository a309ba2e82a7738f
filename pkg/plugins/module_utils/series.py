# -*- coding: utf-8 -*-

# Copyright: (c) 2026, Bloch-Okounkov collection maintainers
# GNU General Public License v3.0+ (see LICENSE or https://www.gnu.org/licenses/gpl-3.0.txt)

from __future__ import absolute_import, division, print_function

__metaclass__ = type

from collections import namedtuple
from fractions import Fraction

from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.constants import GRID, INF


class BOError(Exception):
    """Base class of every error raised by the library code"""

    rc = 1

    def __init__(self, msg, obj=None):
        super(BOError, self).__init__(msg)
        self.msg = msg
        self.obj = obj


class GridError(BOError):
    pass


class QueryError(BOError):
    rc = 2


class ConsistencyError(BOError):
    rc = 3


class PrecisionError(BOError):
    pass


class WindowError(BOError):
    pass


# passed is a bool, cell is the first mismatching (key, exp8) or None
CheckResult = namedtuple("CheckResult", ["passed", "cell", "cells_checked", "detail"])


def exp8(value):
    """
    Convert a q-exponent to grid units.

    :param value: Exponent of q, an int or a Fraction with denominator dividing 8. -> Int|Fraction
    :return: The exponent measured in units of 1/8. -> Int
    """
    if value == INF:
        return INF
    scaled = Fraction(value) * GRID
    if scaled.denominator != 1:
        raise GridError("Exponent {0} is not on the 1/{1} grid".format(value, GRID))
    return int(scaled)


def _normalize(value):
    if isinstance(value, Fraction) and value.denominator == 1:
        return int(value.numerator)
    return value


def _exact_div(numerator, denominator):
    if denominator == 1:
        return numerator
    if denominator == -1:
        return -numerator
    if isinstance(numerator, int) and isinstance(denominator, int) and numerator % denominator == 0:
        return numerator // denominator
    return _normalize(Fraction(numerator) / denominator)


class QSeries(object):
    """
    Truncated series in q on the 1/8 exponent grid.

    Coefficients are stored densely from the valuation. Every coefficient strictly below
    order is exact, nothing at or beyond order is ever reported. An order of INF marks an
    exact Laurent polynomial.
    """

    __slots__ = ("valuation", "coeffs", "order")

    def __init__(self, valuation=0, coeffs=None, order=INF):
        coeffs = list(coeffs) if coeffs else []
        if order != INF:
            coeffs = coeffs[: max(0, order - valuation)]
        start = 0
        while start < len(coeffs) and coeffs[start] == 0:
            start += 1
        end = len(coeffs)
        while end > start and coeffs[end - 1] == 0:
            end -= 1
        if start == end:
            self.valuation = order
            self.coeffs = []
        else:
            self.valuation = valuation + start
            self.coeffs = [_normalize(c) for c in coeffs[start:end]]
        self.order = order

    @classmethod
    def zero(cls, order=INF):
        return cls(0, [], order)

    @classmethod
    def one(cls, order=INF):
        return cls(0, [1], order)

    @classmethod
    def monomial(cls, exponent, coeff=1, order=INF):
        """Monomial coeff*q^(exponent/8)."""
        return cls(exponent, [coeff], order)

    @classmethod
    def from_terms(cls, terms, order=INF):
        """
        Build a series from sparse terms.

        :param terms: Mapping or iterable of (exp8, coefficient) pairs, repeated exponents add up. -> Dict|List
        :param order: Exclusive truncation bound in grid units. -> Int
        :return: The canonical series. -> QSeries
        """
        items = terms.items() if isinstance(terms, dict) else terms
        kept = [(e, c) for e, c in items if c and e < order]
        if not kept:
            return cls.zero(order)
        low = min(e for e, dummy in kept)
        high = max(e for e, dummy in kept)
        dense = [0] * (high - low + 1)
        for e, c in kept:
            dense[e - low] += c
        return cls(low, dense, order)

    def is_zero(self):
        return not self.coeffs

    def is_integral(self):
        return all(isinstance(c, int) for c in self.coeffs)

    @property
    def degree(self):
        """Largest exponent carrying a nonzero coefficient."""
        if self.is_zero():
            return None
        return self.valuation + len(self.coeffs) - 1

    def coefficient(self, exponent):
        """Coefficient of q^(exponent/8), refusing exponents at or beyond the order."""
        if exponent >= self.order:
            raise GridError("Coefficient of q^({0}/{1}) lies beyond the truncation order {2}/{1}".format(exponent, GRID, self.order))
        index = exponent - self.valuation
        if self.is_zero() or index < 0 or index >= len(self.coeffs):
            return 0
        return self.coeffs[index]

    def __getitem__(self, exponent):
        return self.coefficient(exponent)

    def terms(self):
        """Yield (exp8, coefficient) for every nonzero coefficient in increasing order."""
        for index, c in enumerate(self.coeffs):
            if c:
                yield self.valuation + index, c

    def truncate(self, order):
        if order >= self.order:
            return self
        return QSeries(self.valuation, self.coeffs, order)

    def shift(self, exponent):
        """Multiply by q^(exponent/8)."""
        if self.is_zero():
            return QSeries.zero(self.order + exponent)
        return QSeries(self.valuation + exponent, self.coeffs, self.order + exponent)

    def dilate(self, factor):
        """Substitute q -> q^factor, the order scales with the exponents."""
        if self.is_zero():
            return QSeries.zero(self.order * factor)
        dense = [0] * (factor * (len(self.coeffs) - 1) + 1)
        dense[::factor] = self.coeffs
        return QSeries(self.valuation * factor, dense, self.order * factor)

    def scale(self, factor):
        if factor == 0:
            return QSeries.zero(self.order)
        return QSeries(self.valuation, [c * factor for c in self.coeffs], self.order)

    def __neg__(self):
        return self.scale(-1)

    def _combine(self, other, sign):
        if not isinstance(other, QSeries):
            other = QSeries.monomial(0, other)
        order = min(self.order, other.order)
        if other.is_zero():
            return self.truncate(order)
        if self.is_zero():
            return other.truncate(order) if sign > 0 else (-other).truncate(order)
        low = min(self.valuation, other.valuation)
        high = max(self.degree, other.degree)
        if order != INF:
            high = min(high, order - 1)
        if high < low:
            return QSeries.zero(order)
        dense = [0] * (high - low + 1)
        for source, factor in ((self, 1), (other, sign)):
            offset = source.valuation - low
            for index, c in enumerate(source.coeffs):
                if offset + index > high - low:
                    break
                dense[offset + index] += factor * c
        return QSeries(low, dense, order)

    def __add__(self, other):
        return self._combine(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        return self._combine(other, -1)

    def __rsub__(self, other):
        return (-self)._combine(other, 1)

    def __mul__(self, other):
        if not isinstance(other, QSeries):
            return self.scale(other)
        order = min(self.order + other.valuation, other.order + self.valuation)
        if self.is_zero() or other.is_zero():
            return QSeries.zero(order)
        low = self.valuation + other.valuation
        length = len(self.coeffs) + len(other.coeffs) - 1
        if order != INF:
            length = min(length, order - low)
        if length <= 0:
            return QSeries.zero(order)
        dense = [0] * length
        right = [(j, c) for j, c in enumerate(other.coeffs) if c]
        for i, a in enumerate(self.coeffs):
            if i >= length:
                break
            if not a:
                continue
            for j, b in right:
                k = i + j
                if k >= length:
                    break
                dense[k] += a * b
        return QSeries(low, dense, order)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if exponent < 0:
            raise BOError("Negative powers need an explicit order, use divide()")
        result = QSeries.one(INF)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def divide(self, other, order=None):
        """
        Series quotient self/other.

        The divisor is walked sparsely, so dividing by a pentagonal or theta type series costs
        one pass per nonzero term. Inexact integer steps promote to Fraction.

        :param other: Nonzero divisor. -> QSeries
        :param order: Optional exclusive bound for the result, required when both operands are exact and the quotient is infinite. -> Int
        :return: The quotient truncated at the propagated order. -> QSeries
        """
        if not isinstance(other, QSeries):
            return QSeries(self.valuation, [_exact_div(c, other) for c in self.coeffs], self.order)
        if other.is_zero():
            raise BOError("Division by the zero series", other)
        shift = other.valuation
        bound = min(self.order - shift, other.order - 2 * shift + (self.valuation if not self.is_zero() else self.order))
        if order is not None:
            bound = min(bound, order)
        if bound == INF:
            if len(other.coeffs) == 1:
                return QSeries(self.valuation - shift, [_exact_div(c, other.coeffs[0]) for c in self.coeffs], INF)
            raise BOError("Quotient of exact series needs an explicit order", other)
        if self.is_zero():
            return QSeries.zero(bound)
        low = self.valuation - shift
        length = bound - low
        if length <= 0:
            return QSeries.zero(bound)
        lead = other.coeffs[0]
        tail = [(k, c) for k, c in enumerate(other.coeffs) if c and k > 0]
        numerator = self.coeffs
        result = [0] * length
        for e in range(length):
            acc = numerator[e] if e < len(numerator) else 0
            for k, c in tail:
                if k > e:
                    break
                if result[e - k]:
                    acc -= c * result[e - k]
            if acc:
                result[e] = _exact_div(acc, lead)
        return QSeries(low, result, bound)

    def __truediv__(self, other):
        return self.divide(other)

    def first_mismatch(self, other, below=None):
        """
        First exponent below a bound where two series differ.

        :param other: Series to compare with. -> QSeries
        :param below: Exclusive bound, defaults to the smaller order. -> Int
        :return: The first differing exp8 or None. -> Int|None
        """
        limit = min(self.order, other.order) if below is None else below
        if limit > min(self.order, other.order):
            raise GridError("Comparison bound {0} exceeds the known orders".format(limit))
        candidates = sorted(set(e for e, dummy in self.terms() if e < limit) | set(e for e, dummy in other.terms() if e < limit))
        for e in candidates:
            if self.coefficient(e) != other.coefficient(e):
                return e
        return None

    def agrees_with(self, other, below=None):
        return self.first_mismatch(other, below) is None

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.order == other.order and self.valuation == other.valuation and self.coeffs == other.coeffs

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    def __repr__(self):
        shown = ", ".join("{0}:{1}".format(e, c) for e, c in list(self.terms())[:8])
        return "QSeries({{{0}}}, order={1})".format(shown, self.order)

    def to_json(self):
        """Serializable form {scale, valuation, order, coeffs}; INF is written as null."""
        finite = self.order != INF
        return dict(
            scale=GRID,
            valuation=self.valuation if self.valuation != INF else None,
            order=self.order if finite else None,
            coeffs=[str(c) for c in self.coeffs],
        )

    @classmethod
    def from_json(cls, data):
        order = INF if data.get("order") is None else data["order"]
        if data.get("scale", GRID) != GRID:
            raise GridError("Unsupported exponent scale {0}".format(data.get("scale")))
        if data.get("valuation") is None:
            return cls.zero(order)
        return cls(data["valuation"], [_normalize(Fraction(c)) for c in data.get("coeffs", [])], order)


class ZetaLaurent(object):
    """
    Finite map from exponents of an auxiliary variable (zeta or t, in 1/2 units) to QSeries.

    All terms share the q-order of the whole object.
    """

    __slots__ = ("terms", "order")

    def __init__(self, terms=None, order=INF):
        self.order = order
        self.terms = dict()
        for key, value in (terms or {}).items():
            value = value.truncate(order)
            if not value.is_zero():
                self.terms[key] = value

    @classmethod
    def constant(cls, series):
        return cls({0: series}, series.order)

    def keys(self):
        return sorted(self.terms)

    def get(self, key):
        return self.terms.get(key, QSeries.zero(self.order))

    def __getitem__(self, key):
        return self.get(key)

    def min_valuation(self):
        if not self.terms:
            return self.order
        return min(series.valuation for series in self.terms.values())

    def support_bound(self):
        """Smallest B with valuation(key) >= |key|/4 - B in q units, as exp8."""
        return max([abs(key) * GRID // 4 - series.valuation for key, series in self.terms.items()] or [0])

    def __add__(self, other):
        order = min(self.order, other.order)
        terms = dict()
        for key in set(self.terms) | set(other.terms):
            terms[key] = self.get(key).truncate(order) + other.get(key).truncate(order)
        return ZetaLaurent(terms, order)

    def __neg__(self):
        return ZetaLaurent(dict((k, -v) for k, v in self.terms.items()), self.order)

    def __sub__(self, other):
        return self + (-other)

    def times_monomial(self, key, exponent, coeff=1):
        """Multiply by coeff*zeta^(key/2)*q^(exponent/8)."""
        return ZetaLaurent(
            dict((k + key, v.shift(exponent).scale(coeff)) for k, v in self.terms.items()),
            self.order + exponent if exponent < 0 else self.order,
        )

    def __mul__(self, other):
        if isinstance(other, QSeries):
            other = ZetaLaurent.constant(other)
        order = min(self.order + other.min_valuation(), other.order + self.min_valuation())
        terms = dict()
        for ka, va in self.terms.items():
            for kb, vb in other.terms.items():
                if va.valuation + vb.valuation >= order:
                    continue
                product = (va * vb).truncate(order)
                key = ka + kb
                terms[key] = terms[key] + product if key in terms else product
        return ZetaLaurent(terms, order)

    def truncate(self, order):
        return ZetaLaurent(self.terms, min(order, self.order))

    def to_json(self):
        return dict(order=self.order if self.order != INF else None, terms=dict((str(k), v.to_json()) for k, v in sorted(self.terms.items())))


def ct_zeta(integrand):
    """Constant term in zeta; the zero series of the integrand's order when absent."""
    return integrand.get(0)


def euler_pochhammer(order):
    """
    (q;q)_inf to q^order through the pentagonal number theorem.

    :param order: Exclusive q-exponent bound. -> Int
    :return: The truncated product. -> QSeries
    """
    bound = exp8(order)
    terms = {0: 1}
    k = 1
    while True:
        low = k * (3 * k - 1) // 2
        if low * GRID >= bound:
            break
        sign = -1 if k % 2 else 1
        terms[low * GRID] = sign
        high = k * (3 * k + 1) // 2
        if high * GRID < bound:
            terms[high * GRID] = sign
        k += 1
    return QSeries.from_terms(terms, bound)


def partition_numbers(limit):
    """p(0), ..., p(limit) from Euler's pentagonal recurrence."""
    if limit < 0:
        raise BOError("Partition table needs a non-negative bound, got {0}".format(limit))
    table = [1] + [0] * limit
    for n in range(1, limit + 1):
        total = 0
        k = 1
        while True:
            first = n - k * (3 * k - 1) // 2
            if first < 0:
                break
            sign = 1 if k % 2 else -1
            total += sign * table[first]
            second = n - k * (3 * k + 1) // 2
            if second >= 0:
                total += sign * table[second]
            k += 1
        table[n] = total
    return table


def jacobi_cube(order):
    """(q;q)_inf^3 as sum over k >= 0 of (-1)^k (2k+1) q^(k(k+1)/2)."""
    bound = exp8(order)
    terms = dict()
    k = 0
    while k * (k + 1) // 2 * GRID < bound:
        terms[k * (k + 1) // 2 * GRID] = (-1) ** k * (2 * k + 1)
        k += 1
    return QSeries.from_terms(terms, bound)


def theta_t(window, order, sign=1):
    """
    Coefficients of Theta(t) = sum (-1)^l q^((l+1/2)^2/2) t^(l+1/2) inside a window.

    :param window: Inclusive (low, high) bounds on t-exponents in 1/2 units. -> Tuple
    :param order: Exclusive q-exponent bound. -> Int
    :return: Map from odd t-key to its monomial series, keys whose monomial is beyond the order are kept as zero series. -> Dict
    """
    bound = exp8(order)
    low, high = window
    result = dict()
    for key in range(low, high + 1):
        if key % 2 == 0:
            continue
        ell = (key - 1) // 2
        result[key] = QSeries.monomial(key * key, sign * (-1) ** (ell % 2), bound)
    return result


def theta_series(order, power=1):
    """Theta(t)^power as a ZetaLaurent in t, complete below q^order."""
    bound = exp8(order)
    base = dict()
    key = 1
    while key * key < bound:
        for signed in (key, -key):
            ell = (signed - 1) // 2
            base[signed] = QSeries.monomial(key * key, (-1) ** (ell % 2), bound)
        key += 2
    single = ZetaLaurent(base, bound)
    result = ZetaLaurent.constant(QSeries.one(bound))
    for dummy in range(power):
        result = result * single
    return result


def theta_kernel(order):
    """sum over l of zeta^l q^(l^2/2), keyed in 1/2 units."""
    bound = exp8(order)
    terms = dict()
    ell = 0
    while 4 * ell * ell < bound:
        for signed in {ell, -ell}:
            terms[2 * signed] = QSeries.monomial(4 * ell * ell, 1, bound)
        ell += 1
    return ZetaLaurent(terms, bound)


def geometric_factor(kind, value, order):
    """
    Geometric expansion of one constant-term factor in the region 1 > |zeta| > |q^(1/2)|.

    pos r gives zeta^-1 q^(r+1/2)/(1 + zeta^-1 q^(r+1/2)), neg s gives 1/(1 + zeta q^(s+1/2)).
    """
    if value < 0:
        raise QueryError("Mode index must be non-negative, got {0} {1}".format(kind, value))
    bound = exp8(order)
    step = 4 * (2 * value + 1)
    terms = dict()
    ell = 0
    if kind == "pos":
        while (ell + 1) * step < bound:
            terms[-2 * (ell + 1)] = QSeries.monomial((ell + 1) * step, (-1) ** ell, bound)
            ell += 1
    elif kind == "neg":
        while ell * step < bound:
            terms[2 * ell] = QSeries.monomial(ell * step, (-1) ** ell, bound)
            ell += 1
    else:
        raise QueryError("Unknown factor kind '{0}'".format(kind))
    return ZetaLaurent(terms, bound)


def fermion_product(order):
    """(-q^(1/2) zeta;q)_inf (-q^(1/2)/zeta;q)_inf, complete below q^order."""
    bound = exp8(order)
    product = ZetaLaurent.constant(QSeries.one(bound))
    k = 0
    while 4 * (2 * k + 1) < bound:
        half = 4 * (2 * k + 1)
        # (1 + zeta q^h)(1 + q^h/zeta) = 1 + zeta q^h + q^h/zeta + q^2h
        product = product + product.times_monomial(2, half) + product.times_monomial(-2, half) + product.times_monomial(0, 2 * half)
        k += 1
    return product


def jtp_check(order, window, perturb=None):
    """
    Jacobi triple product (q;q)(-q^(1/2)zeta;q)(-q^(1/2)/zeta;q) = sum zeta^l q^(l^2/2), cell by cell.

    :param order: Exclusive q-exponent bound. -> Int
    :param window: Inclusive (low, high) integer zeta-exponents to compare. -> Tuple
    :param perturb: Optional series added to the zeta^0 term of the product side. -> QSeries
    :return: Check outcome with the first mismatching (zeta-exponent, exp8) cell. -> CheckResult
    """
    bound = exp8(order)
    product = fermion_product(order) * euler_pochhammer(order)
    if perturb is not None:
        product = product + ZetaLaurent.constant(perturb.truncate(bound))
    kernel = theta_kernel(order)
    checked = 0
    low, high = window
    for ell in range(low, high + 1):
        left = product.get(2 * ell)
        right = kernel.get(2 * ell)
        mismatch = left.first_mismatch(right, bound)
        checked += bound
        if mismatch is not None:
            return CheckResult(False, (ell, mismatch), checked, dict(left=str(left.coefficient(mismatch)), right=str(right.coefficient(mismatch))))
    return CheckResult(True, None, checked, None)


def qs_arith(a, b, op):
    """
    Dispatch one arithmetic operation on truncated series.

    :param a: Left operand. -> QSeries
    :param b: Right operand, a QSeries for add/sub/mul, a number for scalar-mul, an exp8 int for shift. -> QSeries|Int|Fraction
    :param op: One of add, sub, mul, scalar-mul, shift. -> Str
    :return: The result with the propagated order. -> QSeries
    """
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "scalar-mul":
        return a.scale(b)
    if op == "shift":
        return a.shift(b)
    raise BOError("Unknown series operation '{0}'".format(op))
