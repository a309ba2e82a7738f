# -*- coding: utf-8 -*-

# Copyright: (c) 2026, Bloch-Okounkov collection maintainers
# GNU General Public License v3.0+ (see LICENSE or https://www.gnu.org/licenses/gpl-3.0.txt)

from __future__ import absolute_import, division, print_function

__metaclass__ = type

from collections import namedtuple
from concurrent.futures import ThreadPoolExecutor

from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.constants import GRID
from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.series import (
    CheckResult,
    QSeries,
    QueryError,
    euler_pochhammer,
    exp8,
)
from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.closed_forms import CoeffQuery, ct_formula


class FockState(namedtuple("FockState", ["S", "T"])):
    """Occupied psi modes S and psi* modes T, both sorted tuples of non-negative integers"""

    __slots__ = ()

    @property
    def charge(self):
        return len(self.S) - len(self.T)

    @property
    def weight2(self):
        """Weight in units of 1/2."""
        return sum(2 * a + 1 for a in self.S) + sum(2 * b + 1 for b in self.T)


class ExponentSpec(namedtuple("ExponentSpec", ["entries"])):
    """Ordered (kind, index) requests, kind being pos for t^(r+1/2) and neg for t^(-s-1/2)"""

    __slots__ = ()

    @property
    def pos(self):
        return [value for kind, value in self.entries if kind == "pos"]

    @property
    def neg(self):
        return [value for kind, value in self.entries if kind == "neg"]

    @property
    def collisions(self):
        return sorted(set(self.pos) & set(self.neg))

    def is_well_formed(self):
        return len(set(self.pos)) == len(self.pos) and len(set(self.neg)) == len(self.neg)


CollisionReport = namedtuple("CollisionReport", ["r", "oracle", "ct_path", "vanishing_claim", "paths_agree"])


def spec_from_lists(pos=None, neg=None):
    return ExponentSpec(tuple([("pos", r) for r in pos or []] + [("neg", s) for s in neg or []]))


def compress(raw):
    """
    Collapse repeated insertions, keeping the order of first occurrence.

    Occupation projectors are idempotent, so the trace is unchanged.

    :param raw: Iterable of (kind, index) pairs or an ExponentSpec. -> List|ExponentSpec
    :return: Spec without repeated entries. -> ExponentSpec
    """
    entries = raw.entries if isinstance(raw, ExponentSpec) else raw
    seen = set()
    kept = []
    for kind, value in entries:
        if kind not in ("pos", "neg"):
            raise QueryError("Unknown mode request '{0}'".format(kind))
        if value < 0:
            raise QueryError("Mode index must be non-negative, got {0} {1}".format(kind, value))
        if (kind, value) in seen:
            continue
        seen.add((kind, value))
        kept.append((kind, value))
    return ExponentSpec(tuple(kept))


def _mode_sets(count, limit2):
    """All count-element sets of modes with weight2 below limit2, grouped by weight2."""
    layers = dict()

    def walk(start, remaining, chosen, weight2):
        if remaining == 0:
            layers.setdefault(weight2, []).append(tuple(chosen))
            return
        # the cheapest completion uses the next `remaining` consecutive modes
        mode = start
        while weight2 + remaining * (2 * mode + 1) + remaining * (remaining - 1) < limit2:
            chosen.append(mode)
            walk(mode + 1, remaining - 1, chosen, weight2 + 2 * mode + 1)
            chosen.pop()
            mode += 1

    walk(0, count, [], 0)
    return layers


def _layer_table(limit2):
    table = dict()
    count = 0
    while 2 * count * count < limit2:
        table[count] = _mode_sets(count, limit2 - count * count)
        count += 1
    return table


def _layer_states(table, weight2):
    states = []
    for count, layers in table.items():
        for left, left_sets in layers.items():
            right_sets = layers.get(weight2 - left)
            if not right_sets:
                continue
            for S in left_sets:
                for T in right_sets:
                    states.append(FockState(S, T))
    states.sort()
    return states


def enumerate_states(order):
    """
    Stream every charge-zero state of weight below q^order.

    States come by weight, then lexicographically on (S, T).
    """
    limit2 = 2 * order
    table = _layer_table(limit2)
    for weight2 in range(0, limit2):
        for state in _layer_states(table, weight2):
            yield state


def _admits(state, pos, neg):
    T = set(state.T)
    S = set(state.S)
    return all(r in T for r in pos) and not any(s in S for s in neg)


def _count_layers(table, layers, pos, neg):
    counts = dict()
    for weight2 in layers:
        counts[weight2] = sum(1 for state in _layer_states(table, weight2) if _admits(state, pos, neg))
    return counts


def raw_trace(spec, order, shards=1):
    """
    Graded trace over charge zero without the (q;q)_inf factor.

    Weight layers are split across shards and merged back in weight order.

    :param spec: Requested modes. -> ExponentSpec
    :param order: Exclusive q-exponent bound. -> Int
    :param shards: Number of worker threads. -> Int
    :return: Sum of q^weight over admitted states. -> QSeries
    """
    spec = compress(spec)
    limit2 = 2 * order
    table = _layer_table(limit2)
    pos, neg = spec.pos, spec.neg
    layers = list(range(limit2))
    shards = max(1, int(shards))
    if shards == 1:
        merged = _count_layers(table, layers, pos, neg)
    else:
        chunks = [layers[index::shards] for index in range(shards)]
        with ThreadPoolExecutor(max_workers=shards) as executor:
            partials = list(executor.map(lambda chunk: _count_layers(table, chunk, pos, neg), chunks))
        merged = dict()
        for partial in partials:
            merged.update(partial)
    terms = [(weight2 * GRID // 2, merged[weight2]) for weight2 in sorted(merged)]
    return QSeries.from_terms(terms, exp8(order))


def state_count_series(order, shards=1):
    """Sum of q^weight over all charge-zero states, which is 1/(q;q)_inf."""
    return raw_trace(ExponentSpec(()), order, shards)


def oracle_coefficient(spec, order, shards=1):
    """
    Literal trace for a mode request, times (q;q)_inf.

    A pos r insertion projects onto states with r occupied in T, a neg s insertion onto
    states with s empty in S. Colliding requests are computed as they stand.

    :param spec: Requested modes, repeated entries are compressed first. -> ExponentSpec
    :param order: Exclusive q-exponent bound. -> Int
    :param shards: Number of worker threads for the enumeration. -> Int
    :return: The coefficient series. -> QSeries
    """
    return raw_trace(spec, order, shards) * euler_pochhammer(order)


def collision_report(r, order, shards=1):
    """
    Coefficient of t^(r+1/2) t^(-r-1/2) computed two ways, next to the vanishing claim.

    The second path evaluates the constant-term formula at s = r.
    """
    if r < 0:
        raise QueryError("Mode index must be non-negative, got {0}".format(r))
    oracle = oracle_coefficient(spec_from_lists([r], [r]), order, shards)
    ct_path = ct_formula(CoeffQuery.build([r], [r], allow_collision=True), order)
    agree = oracle.agrees_with(ct_path, exp8(order))
    return CollisionReport(r, oracle, ct_path, QSeries.zero(exp8(order)), agree)


def _strict_odd_table(limit, excluded=()):
    """table[length][size] counts partitions into distinct odd parts below limit avoiding excluded parts."""
    table = [[0] * limit for dummy in range(1)]
    table[0][0] = 1
    for part in range(1, limit, 2):
        if part in excluded:
            continue
        table.append([0] * limit)
        for length in range(len(table) - 1, 0, -1):
            previous = table[length - 1]
            current = table[length]
            for size in range(limit - 1, part - 1, -1):
                if previous[size - part]:
                    current[size] += previous[size - part]
    return table


def partition_pair_count(r, order):
    """
    Pairs (pi, pi') of partitions into distinct odd parts with len(pi) - len(pi') = n.

    pi' avoids every part 2r_j+1 and a pair weighs (|pi| + |pi'|)/2 + sum(r_j + 1/2).
    The generating function equals the pos-r oracle divided by (q;q)_inf.

    :param r: Distinct non-negative indices. -> List
    :param order: Exclusive q-exponent bound. -> Int
    :return: The pair counting series. -> QSeries
    """
    r = list(r)
    if len(set(r)) != len(r) or any(value < 0 for value in r):
        raise QueryError("Indices must be distinct and non-negative, got {0}".format(r))
    n = len(r)
    base2 = sum(2 * value + 1 for value in r)
    limit = 2 * order - base2
    if limit <= 0:
        return QSeries.zero(exp8(order))
    free = _strict_odd_table(limit)
    avoiding = _strict_odd_table(limit, set(2 * value + 1 for value in r))
    counts = [0] * limit
    for length in range(len(avoiding)):
        if length + n >= len(free):
            break
        for size_a, count_a in enumerate(avoiding[length]):
            if not count_a:
                continue
            for size_b in range(0, limit - size_a):
                count_b = free[length + n][size_b]
                if count_b:
                    counts[size_a + size_b] += count_a * count_b
    terms = [((size + base2) * GRID // 2, count) for size, count in enumerate(counts) if count]
    return QSeries.from_terms(terms, exp8(order))


def check_partition_pairs(r, order):
    """Compare partition_pair_count with the oracle divided by (q;q)_inf."""
    pairs = partition_pair_count(r, order)
    quotient = oracle_coefficient(spec_from_lists(r), order).divide(euler_pochhammer(order))
    mismatch = pairs.first_mismatch(quotient, exp8(order))
    return CheckResult(mismatch is None, None if mismatch is None else (list(r), mismatch), exp8(order), None)
