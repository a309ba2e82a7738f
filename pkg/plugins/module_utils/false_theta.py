# -*- coding: utf-8 -*-

# Copyright: (c) 2026, Bloch-Okounkov collection maintainers
# GNU General Public License v3.0+ (see LICENSE or https://www.gnu.org/licenses/gpl-3.0.txt)

from __future__ import absolute_import, division, print_function

__metaclass__ = type

from collections import Counter, namedtuple
from fractions import Fraction

from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.constants import FALSE_THETA_PIVOTS, GRID, INF
from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.series import (
    CheckResult,
    ConsistencyError,
    GridError,
    QSeries,
    QueryError,
    exp8,
)
from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.closed_forms import CoeffQuery, coefficient_series


def laurent(terms):
    """Exact Laurent polynomial from {exp8: coefficient}."""
    return QSeries.from_terms(terms, INF)


def cyclotomic(d):
    """1 - q^(d/8) as an exact polynomial."""
    return laurent({0: 1, d: -1})


def psi(order):
    """
    Rogers' false theta function sum over l >= 0 of (-1)^l q^(l(l+1)/2).

    :param order: Exclusive q-exponent bound, an int or a Fraction on the 1/8 grid. -> Int|Fraction
    :return: The truncated series. -> QSeries
    """
    bound = exp8(order)
    terms = dict()
    ell = 0
    while 4 * ell * (ell + 1) < bound:
        terms[4 * ell * (ell + 1)] = (-1) ** (ell % 2)
        ell += 1
    return QSeries.from_terms(terms, bound)


def _partial_psi(low, high):
    """sum over low <= L < high of (-1)^L q^(L(L+1)/2), exact."""
    return laurent(dict((4 * L * (L + 1), (-1) ** (L % 2)) for L in range(low, high)))


class FalseThetaPair(namedtuple("FalseThetaPair", ["P", "Q"])):
    """P(q) Psi(q) + Q(q) with exact Laurent polynomials P and Q"""

    __slots__ = ()

    def expand(self, order):
        """P*Psi + Q known below q^order, Psi is taken deep enough to absorb negative powers of P."""
        bound = exp8(order)
        if self.P.is_zero():
            return self.Q.truncate(bound)
        depth = bound - min(self.P.valuation, 0)
        return (self.P * psi(Fraction(depth, GRID)) + self.Q).truncate(bound)

    def to_json(self):
        return dict(P=_poly_to_json(self.P), Q=_poly_to_json(self.Q))

    @classmethod
    def from_json(cls, data):
        return cls(_poly_from_json(data["P"]), _poly_from_json(data["Q"]))


def _poly_to_json(poly):
    rows = []
    for e, c in poly.terms():
        if e % 4:
            raise GridError("Exponent {0}/{1} of a false theta pair is off the half-integer grid".format(e, GRID))
        value = Fraction(c)
        rows.append([e // 4, str(value.numerator), str(value.denominator)])
    return rows


def _poly_from_json(rows):
    return laurent(dict((int(e) * 4, Fraction(int(num), int(den))) for e, num, den in rows))


def tail_to_pair(start):
    """
    sum over l >= start of (-1)^l q^(l(l+1)/2) as Psi minus the first start terms.

    :param start: First index M of the tail. -> Int
    :return: (P, Q) = (1, -partial sum). -> FalseThetaPair
    """
    if start < 0:
        raise QueryError("Tail start must be non-negative, got {0}".format(start))
    return FalseThetaPair(laurent({0: 1}), -_partial_psi(0, start))


class ShiftedFalseTheta(namedtuple("ShiftedFalseTheta", ["sign", "b", "c"])):
    """sign * sum over l >= 0 of (-1)^l q^(l^2/2 + b*l + c), b and c held in grid units"""

    __slots__ = ()

    def to_pair(self):
        """
        Rewrite through (l+k)(l+k+1)/2 - k(k+1)/2 with k = b - 1/2.

        k >= 0 leaves a tail of Psi, k < 0 adds the terms -1 >= L >= k in front of it.
        """
        if (self.b - 4) % GRID:
            raise GridError("Shift b={0}/{1} is not a half odd integer".format(self.b, GRID))
        k = (self.b - 4) // GRID
        sign = self.sign * (-1) ** (k % 2)
        offset = self.c - 4 * k * (k + 1)
        lead = laurent({offset: sign})
        if k >= 0:
            tail = tail_to_pair(k)
            return FalseThetaPair(lead * tail.P, lead * tail.Q)
        return FalseThetaPair(lead, lead * _partial_psi(k, 0))

    def series(self, order):
        bound = exp8(order)
        terms = dict()
        ell = 0
        while True:
            e = 4 * ell * ell + self.b * ell + self.c
            if e >= bound and 8 * ell + 4 + self.b > 0:
                break
            if e < bound:
                terms[e] = self.sign * (-1) ** (ell % 2)
            ell += 1
        return QSeries.from_terms(terms, bound)


class Span(namedtuple("Span", ["low", "high"])):
    """Exponent envelope of a Laurent polynomial, (None, None) when empty"""

    __slots__ = ()

    @classmethod
    def of(cls, poly):
        if poly.is_zero():
            return cls(None, None)
        return cls(poly.valuation, poly.degree)

    def is_zero(self):
        return self.low is None

    def shift(self, exponent):
        if self.is_zero():
            return self
        return Span(self.low + exponent, self.high + exponent)

    def __neg__(self):
        return self

    def __add__(self, other):
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        return Span(min(self.low, other.low), max(self.high, other.high))

    __sub__ = __add__


class RationalPair(namedtuple("RationalPair", ["P", "Q", "denominators"])):
    """
    (P Psi + Q) / prod(1 - q^d) over the denominator multiset.

    P and Q are exact Laurent polynomials, or Spans when only the exponent envelope is tracked.
    """

    __slots__ = ()

    def shift(self, exponent):
        return RationalPair(self.P.shift(exponent), self.Q.shift(exponent), self.denominators)

    def __neg__(self):
        return RationalPair(-self.P, -self.Q, self.denominators)

    def times_cyclotomic(self, d):
        return RationalPair(self.P - self.P.shift(d), self.Q - self.Q.shift(d), self.denominators)

    def extend(self, denominators):
        """Rewrite over a larger denominator multiset."""
        result = self
        missing = Counter(denominators) - Counter(self.denominators)
        for d in sorted(missing.elements()):
            result = result.times_cyclotomic(d)
        return RationalPair(result.P, result.Q, tuple(sorted(denominators)))

    def combine(self, other, sign=1):
        merged = Counter(self.denominators) | Counter(other.denominators)
        common = tuple(sorted(merged.elements()))
        left = self.extend(common)
        right = other.extend(common)
        if sign > 0:
            return RationalPair(left.P + right.P, left.Q + right.Q, common)
        return RationalPair(left.P - right.P, left.Q - right.Q, common)

    def over_cyclotomic(self, d):
        """Divide by 1 - q^d, a negative d written as -q^|d|/(1 - q^|d|)."""
        if d == 0:
            raise QueryError("Denominator 1 - q^0 vanishes")
        pair = self
        if d < 0:
            pair = -pair.shift(-d)
            d = -d
        return RationalPair(pair.P, pair.Q, tuple(sorted(pair.denominators + (d,))))


def _leaf(shifted, lift):
    pair = shifted.to_pair()
    return RationalPair(lift(pair.P), lift(pair.Q), ())


def _mixed_leaf(r, s, a, lift):
    """Single positive and negative slot, over 1 - q^(r+s+1)."""
    first = ShiftedFalseTheta(1, GRID * (a + r) + 4, 4 * a * a + 4 * (2 * r + 1)).to_pair()
    second = ShiftedFalseTheta(1, GRID * (s - a) + 12, 4 * a * a - GRID * a + GRID * (r + s) + 12).to_pair()
    return RationalPair(lift(first.P - second.P), lift(first.Q - second.Q), (GRID * (r + s + 1),))


def _node(pos, neg, a, lift, cache):
    key = (pos, neg)
    if key in cache:
        return cache[key]
    if len(pos) >= 2:
        r1, r2 = pos[0], pos[1]
        first = _node(pos[1:], neg, a, lift, cache)
        second = _node((r1,) + pos[2:], neg, a, lift, cache)
        result = first.combine(second, -1).shift(4 * (2 * r1 + 1)).over_cyclotomic(GRID * (r1 - r2))
    elif len(neg) >= 2:
        s1, s2 = neg[0], neg[1]
        d = GRID * (s1 - s2)
        first = _node(pos, neg[1:], a, lift, cache)
        second = _node(pos, (s1,) + neg[2:], a, lift, cache)
        result = first.combine(second.shift(d), -1).over_cyclotomic(d)
    elif pos and neg:
        result = _mixed_leaf(pos[0], neg[0], a, lift)
    elif pos:
        r = pos[0]
        result = _leaf(ShiftedFalseTheta(1, GRID * (a + r) + 4, 4 * a * a + 4 * (2 * r + 1)), lift)
    else:
        s = neg[0]
        result = _leaf(ShiftedFalseTheta(1, GRID * (s - a) + 4, 4 * a * a), lift)
    cache[key] = result
    return result


def _ordered(values, rule):
    return tuple(sorted(values, reverse=(rule == "descending")))


def _rational_pair(query, pivots, lift):
    if pivots not in FALSE_THETA_PIVOTS:
        raise QueryError("Unknown pivot order '{0}', expected one of {1}".format(pivots, sorted(FALSE_THETA_PIVOTS)))
    pos_rule, neg_rule = FALSE_THETA_PIVOTS[pivots]
    return _node(_ordered(query.pos, pos_rule), _ordered(query.neg, neg_rule), query.m, lift, dict())


def clearing_factors(query):
    """Exponents d (grid units) of the factors 1 - q^d that clear the coefficient of the query."""
    factors = [GRID * (r + s + 1) for r in query.pos for s in query.neg]
    for values in (query.pos, query.neg):
        ordered = sorted(values, reverse=True)
        factors.extend(GRID * (ordered[j] - ordered[k]) for j in range(len(ordered)) for k in range(j + 1, len(ordered)))
    return sorted(factors)


def full_product(query):
    result = laurent({0: 1})
    for d in clearing_factors(query):
        result = result * cyclotomic(d)
    return result


def cleared_series(query, order):
    """The coefficient series multiplied by its clearing polynomial."""
    return (full_product(query) * coefficient_series(query, order)).truncate(exp8(order))


def _exact_quotient(poly, d):
    if poly.is_zero():
        return poly
    quotient = dict()
    for e in range(poly.valuation, poly.degree - d + 1):
        value = poly.coefficient(e) + quotient.get(e - d, 0)
        if value:
            quotient[e] = value
    result = laurent(quotient)
    if result * cyclotomic(d) != poly:
        raise ConsistencyError("Clearing by 1 - q^({0}/{1}) leaves a nonzero remainder".format(d, GRID), dict(factor=d, numerator=poly.to_json()))
    return result


def decompose(query, pivots="default"):
    """
    Unique (P, Q) with clearing polynomial times coefficient = P Psi + Q.

    The recursion runs over RationalPair nodes; the final division by the collected
    denominators must leave no remainder.

    :param query: Well-formed coefficient request. -> CoeffQuery
    :param pivots: Key of FALSE_THETA_PIVOTS choosing the recursion order. -> Str
    :return: The cleared pair. -> FalseThetaPair
    """
    if query.collisions:
        raise QueryError("False theta decomposition needs r_j != s_k, got collisions {0}".format(query.collisions))
    node = _rational_pair(query, pivots, lambda poly: poly)
    full = full_product(query)
    P = node.P * full
    Q = node.Q * full
    for d in node.denominators:
        P = _exact_quotient(P, d)
        Q = _exact_quotient(Q, d)
    return FalseThetaPair(P, Q)


def decompose_F(r, pivots="default"):
    r = list(r)
    if not r:
        raise QueryError("decompose_F needs at least one index")
    return decompose(CoeffQuery.build(pos=r), pivots)


def decompose_G(query, pivots="default"):
    """Mixed queries; a query without negative indices is the same as decompose_F."""
    if query.m == query.n:
        return decompose_F(query.pos, pivots)
    return decompose(query, pivots)


def exponent_bounds(query, pivots="default"):
    """
    Envelope of the exponents of P and Q, from the recursion without coefficients.

    :param query: Well-formed coefficient request. -> CoeffQuery
    :return: {P: (low, high), Q: (low, high)} in grid units, None for an empty envelope. -> Dict
    """
    node = _rational_pair(query, pivots, Span.of)
    growth = sum(clearing_factors(query)) - sum(node.denominators)
    bounds = dict()
    for name, span in (("P", node.P), ("Q", node.Q)):
        bounds[name] = None if span.is_zero() else (span.low, span.high + growth)
    return bounds


def verify_pair(pair, target, order):
    """
    Compare P Psi + Q with a series below q^order.

    :param pair: Candidate pair. -> FalseThetaPair
    :param target: Cleared coefficient series. -> QSeries
    :param order: Exclusive q-exponent bound. -> Int
    :return: Check outcome with the first differing exp8. -> CheckResult
    """
    bound = exp8(order)
    expansion = pair.expand(order)
    mismatch = expansion.first_mismatch(target, bound)
    if mismatch is None:
        return CheckResult(True, None, bound, None)
    return CheckResult(False, mismatch, bound, dict(left=str(expansion.coefficient(mismatch)), right=str(target.coefficient(mismatch))))


def single_index_pair(r):
    """((-1)^(r+1) q^(-r(r+1)/2), -(-1)^(r+1) q^(-r(r+1)/2) sum_(l<=r) (-1)^l q^(l(l+1)/2))."""
    lead = laurent({-4 * r * (r + 1): (-1) ** ((r + 1) % 2)})
    return FalseThetaPair(lead, -lead * _partial_psi(0, r + 1))
