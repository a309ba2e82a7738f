# -*- coding: utf-8 -*-

# Copyright: (c) 2026, Bloch-Okounkov collection maintainers
# GNU General Public License v3.0+ (see LICENSE or https://www.gnu.org/licenses/gpl-3.0.txt)

from __future__ import absolute_import, division, print_function

__metaclass__ = type

from collections import namedtuple
from fractions import Fraction
from itertools import permutations

from mpmath import mp, mpf

from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.constants import (
    ASYM_DEFAULT_TERMS,
    ASYM_DEFAULT_Y,
    FALSE_THETA_PIVOTS,
    GOLDEN_EXAMPLES,
    GRID,
    SCAN_CHECKPOINTS,
    TABLE_COEFFICIENTS,
    TABLE_QUERY,
    VERIFY_PROPERTIES,
)
from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.series import (
    BOError,
    QSeries,
    ct_zeta,
    euler_pochhammer,
    exp8,
    fermion_product,
    jtp_check,
    partition_numbers,
    theta_t,
)
from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.fock import (
    check_partition_pairs,
    collision_report,
    compress,
    enumerate_states,
    oracle_coefficient,
    spec_from_lists,
    state_count_series,
    ExponentSpec,
)
from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.closed_forms import (
    CoeffQuery,
    coefficient_series,
    ct_formula,
    f_multisum,
    g_multisum,
    higher_level_oracle,
    inverse_theta_power,
    multisum_valuation,
    bilateral_n1_check,
)
from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.false_theta import (
    cleared_series,
    decompose,
    decompose_F,
    exponent_bounds,
    psi,
    single_index_pair,
    verify_pair,
)
from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.asymptotics import (
    asym_F,
    asym_G,
    coefficient_ratio_scan,
    euler_recurrence,
    euler_values,
    numeric_eval,
    order_of_accuracy,
    predicted_c1,
    required_order,
    scan_summary,
    tail_bound,
    theta_transform_check,
)
from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.utils import format_laurent

PropertyResult = namedtuple("PropertyResult", ["name", "passed", "detail"])

# small grids keeping the whole suite at desk scale
SUITE_QUERIES = [
    ([0], []),
    ([1, 0], []),
    ([2], [0]),
    ([0], [1]),
    ([], [0]),
    ([], [2, 0]),
    ([3, 1], [0]),
    ([2], [3, 1]),
]
SUITE_ORDER = 12


def _queries():
    return [CoeffQuery.build(pos, neg) for pos, neg in SUITE_QUERIES]


def _order_propagation(shards):
    a = f_multisum([0], 10)
    b = euler_pochhammer(6)
    product = a * b
    total = a + b
    reference = f_multisum([0], 20) * euler_pochhammer(12)
    expected = min(a.order + b.valuation, b.order + a.valuation)
    passed = product.order == expected and total.order == exp8(6) and product.agrees_with(reference, product.order)
    return passed, dict(product_order=product.order, expected=expected)


def _pochhammer_inverse(shards):
    order = 60
    inverse = QSeries.one(exp8(order)).divide(euler_pochhammer(order))
    product = inverse * euler_pochhammer(order)
    return product.agrees_with(QSeries.one(), exp8(order)), dict(order=order)


def _partition_recurrence(shards):
    limit = 100
    table = partition_numbers(limit)
    inverse = QSeries.one(exp8(limit + 1)).divide(euler_pochhammer(limit + 1))
    mismatched = [n for n in range(limit + 1) if inverse.coefficient(GRID * n) != table[n]]
    return not mismatched and table[100] == 190569292, dict(mismatched=mismatched)


def _triple_product(shards):
    result = jtp_check(50, (-8, 8))
    return result.passed, dict(cell=result.cell)


def _state_closure(shards):
    order = 8
    states = list(enumerate_states(order))
    charge = all(state.charge == 0 for state in states)
    weights = [state.weight2 for state in states]
    ordered = weights == sorted(weights) and all(w < 2 * order for w in weights)
    unique = len(set(states)) == len(states)
    return charge and ordered and unique, dict(states=len(states))


def _state_generating_function(shards):
    order = 20
    counted = state_count_series(order, shards)
    product = ct_zeta(fermion_product(order))
    mismatch = counted.first_mismatch(product, exp8(order))
    return mismatch is None, dict(mismatch=mismatch)


def _oracle_diagonality(shards):
    spec = spec_from_lists([2, 0], [1])
    reference = oracle_coefficient(spec, SUITE_ORDER, shards)
    for entries in permutations(spec.entries):
        if oracle_coefficient(ExponentSpec(entries), SUITE_ORDER, shards) != reference:
            return False, dict(entries=list(entries))
    return True, dict(permutations=6)


def _compress_idempotence(shards):
    raw = [("pos", 1), ("neg", 1), ("pos", 1), ("neg", 2), ("neg", 2)]
    once = compress(raw)
    twice = compress(once)
    same = oracle_coefficient(ExponentSpec(tuple(raw)), SUITE_ORDER, shards) == oracle_coefficient(once, SUITE_ORDER, shards)
    return once == twice and same, dict(compressed=list(once.entries))


def _partition_pairs(shards):
    for r in ([0], [2], [1, 0], [3, 1]):
        result = check_partition_pairs(r, SUITE_ORDER)
        if not result.passed:
            return False, dict(r=r, cell=result.cell)
    return True, None


def _three_way(shards):
    bound = exp8(SUITE_ORDER)
    for query in _queries():
        oracle = oracle_coefficient(spec_from_lists(query.pos, query.neg), SUITE_ORDER, shards)
        ct = ct_formula(query, SUITE_ORDER)
        multisum = g_multisum(query, SUITE_ORDER)
        if not (oracle.agrees_with(ct, bound) and ct.agrees_with(multisum, bound)):
            return False, dict(query=query.to_json())
    return True, dict(queries=len(SUITE_QUERIES))


def _multisum_valuation(shards):
    for r in ([0], [3], [1, 0], [4, 2, 1]):
        series = f_multisum(r, 40)
        if series.valuation != multisum_valuation(r):
            return False, dict(r=r, valuation=series.valuation)
    return True, None


def _bilateral_n1(shards):
    control = bilateral_n1_check(10, 20, perturb=QSeries.monomial(GRID))
    result = bilateral_n1_check(10, 20)
    return result.passed and not control.passed, dict(cells_checked=result.cells_checked)


def _inverse_theta(shards):
    for ell in (1, 2):
        result = inverse_theta_power(ell, 8, 6).check
        if not result.passed or not result.cells_checked:
            return False, dict(ell=ell, cell=result.cell)
    return True, None


def _higher_level(shards):
    result = higher_level_oracle(2, 8, 6)
    return result.passed, dict(cells_checked=result.cells_checked)


def _false_theta_round_trip(shards):
    order = 60
    for query in _queries():
        result = verify_pair(decompose(query), cleared_series(query, order), order)
        if not result.passed:
            return False, dict(query=query.to_json(), cell=result.cell)
    return True, None


def _false_theta_uniqueness(shards):
    for query in _queries():
        reference = decompose(query)
        for pivots in FALSE_THETA_PIVOTS:
            if decompose(query, pivots) != reference:
                return False, dict(query=query.to_json(), pivots=pivots)
    return True, None


def _false_theta_bounds(shards):
    for query in _queries():
        pair = decompose(query)
        bounds = exponent_bounds(query)
        for name, poly in (("P", pair.P), ("Q", pair.Q)):
            if poly.is_zero():
                continue
            low, high = bounds[name]
            if poly.valuation < low or poly.degree > high:
                return False, dict(query=query.to_json(), part=name)
    return True, None


def _false_theta_single(shards):
    for r in range(11):
        if decompose_F([r]) != single_index_pair(r):
            return False, dict(r=r)
    return True, None


def _c1_check(queries):
    for query in queries:
        expansion = asym_F(query.pos, 2) if query.m == query.n else asym_G(query, 2)
        if expansion.coeffs[0] != Fraction(1, 2 ** query.n) or expansion.normalized()[1] != predicted_c1(query):
            return False, dict(query=query.to_json(), c1=str(expansion.normalized()[1]))
    return True, None


def _c1_pure(shards):
    return _c1_check([q for q in _queries() if q.m == q.n] + [CoeffQuery.build(TABLE_QUERY)])


def _c1_mixed(shards):
    return _c1_check([q for q in _queries() if q.m != q.n])


def _euler_identities(shards):
    table = euler_values(12)
    passed = table.at_zero == euler_recurrence(12) and table.at_one[2] == 0 and table.at_one[3] == Fraction(-1, 4)
    return passed, None


def _order_of_accuracy(shards):
    K = ASYM_DEFAULT_TERMS
    orders = dict()
    for pos, neg in (([0], []), ([1, 0], []), ([0], [1])):
        query = CoeffQuery.build(pos, neg)
        report = order_of_accuracy(query, K, ASYM_DEFAULT_Y)
        label = "{0}/{1}".format(list(query.pos), list(query.neg))
        orders[label] = [mp.nstr(value, 6) for value in report.orders]
        if any(value < K + mpf("0.7") for value in report.orders):
            return False, dict(query=query.to_json(), orders=orders[label])
    return True, dict(orders=orders)


def _theta_transform(shards):
    for z in ("0", "0.1", "0.25", "-0.3"):
        for y in ("0.5", "0.1", "0.05"):
            check = theta_transform_check(z, y)
            if not check.passed:
                return False, dict(z=z, y=y, error=mp.nstr(check.error, 5), bound=mp.nstr(check.bound, 5))
    return True, None


def _numeric_agreement(shards):
    # oracle and multisum share the truncation, the converged value lies within its tail
    y = "0.1"
    order = 20
    for pos, neg in (([0], []), ([0], [1])):
        query = CoeffQuery.build(pos, neg)
        oracle = numeric_eval(oracle_coefficient(spec_from_lists(query.pos, query.neg), order, shards), y, tolerance="inf").value
        multisum = numeric_eval(g_multisum(query, order), y, tolerance="inf").value
        converged = numeric_eval(coefficient_series(query, required_order(y)), y).value
        tail = tail_bound(exp8(order), y)
        if abs(oracle - multisum) > mpf(10) ** -40 or abs(oracle - converged) > tail:
            return False, dict(query=query.to_json(), oracle=mp.nstr(oracle, 20), multisum=mp.nstr(multisum, 20), converged=mp.nstr(converged, 20))
    return True, dict(order=order, y=y)


def _ratio_positivity(shards):
    limit = SCAN_CHECKPOINTS[-1]
    deviations = dict()
    for r in ([0], [1, 0]):
        summary = scan_summary(coefficient_ratio_scan(CoeffQuery.build(r), limit))
        deviations[str(r)] = dict((point, mp.nstr(mpf(value.numerator) / value.denominator, 6)) for point, value in summary["deviations"].items())
        shrinking = summary["deviations"][limit] < summary["deviations"][SCAN_CHECKPOINTS[0]]
        if summary["first_negative"] is not None or not shrinking or summary["deviations"][limit] >= Fraction(15, 100):
            return False, dict(r=r, first_negative=summary["first_negative"], deviations=deviations[str(r)])
    return True, dict(deviations=deviations)


def _collision_paths(shards):
    for r in range(3):
        report = collision_report(r, 10, shards)
        if not report.paths_agree:
            return False, dict(r=r)
    return True, None


PROPERTY_CHECKS = dict(
    order_propagation=_order_propagation,
    pochhammer_inverse=_pochhammer_inverse,
    partition_recurrence=_partition_recurrence,
    triple_product=_triple_product,
    state_closure=_state_closure,
    state_generating_function=_state_generating_function,
    oracle_diagonality=_oracle_diagonality,
    compress_idempotence=_compress_idempotence,
    partition_pairs=_partition_pairs,
    three_way=_three_way,
    multisum_valuation=_multisum_valuation,
    bilateral_n1=_bilateral_n1,
    inverse_theta=_inverse_theta,
    higher_level=_higher_level,
    false_theta_round_trip=_false_theta_round_trip,
    false_theta_uniqueness=_false_theta_uniqueness,
    false_theta_bounds=_false_theta_bounds,
    false_theta_single=_false_theta_single,
    c1_pure=_c1_pure,
    c1_mixed=_c1_mixed,
    euler_identities=_euler_identities,
    order_of_accuracy=_order_of_accuracy,
    theta_transform=_theta_transform,
    numeric_agreement=_numeric_agreement,
    ratio_positivity=_ratio_positivity,
    collision_paths=_collision_paths,
)


def verify(properties=None, shards=1):
    """
    Run the invariant suite.

    A library error inside a property marks it failed with the error message as detail.

    :param properties: Names from VERIFY_PROPERTIES, all of them when None. -> List
    :param shards: Worker threads for oracle enumerations. -> Int
    :return: One result per property in suite order. -> List
    """
    names = VERIFY_PROPERTIES if not properties else [name for name in VERIFY_PROPERTIES if name in properties]
    results = []
    for name in names:
        try:
            passed, detail = PROPERTY_CHECKS[name](shards)
        except BOError as error:
            passed, detail = False, dict(error=error.msg)
        results.append(PropertyResult(name, bool(passed), detail))
    return results


def _coefficients(series, exponents):
    return dict((str(e), str(series.coefficient(GRID * e))) for e in exponents)


def _regenerate(name):
    if name == "pochhammer_q6":
        return _coefficients(euler_pochhammer(6), [0, 1, 2, 5])
    if name == "pentagonal_signs":
        return _coefficients(euler_pochhammer(16), [7, 12, 15])
    if name == "partitions":
        table = partition_numbers(10)
        return dict((str(n), str(table[n])) for n in (0, 5, 10))
    if name == "theta_terms":
        terms = theta_t((-1, 3), 2)
        return dict((str(Fraction(key, 2)), format_laurent(terms[key])) for key in (1, -1, 3))
    if name == "triple_product":
        return dict(passed=str(jtp_check(50, (-8, 8)).passed).lower())
    if name == "f_single_zero":
        return _coefficients(f_multisum([0], 11), [1, 3, 6, 10])
    if name == "psi":
        return _coefficients(psi(11), [0, 1, 3, 6, 10])
    if name == "negative_single_zero":
        return _coefficients(g_multisum(CoeffQuery.build(neg=[0]), 8), [0, 1, 3, 6])
    if name == "collision_claim":
        return dict(vanishing_claim=format_laurent(collision_report(0, 6).vanishing_claim))
    if name == "bilateral_n1":
        return dict(("{0}/{1}".format(J, N), str(bilateral_n1_check(J, N).passed).lower()) for J, N in ((10, 20), (14, 40)))
    if name == "coefficient_table":
        return _coefficients(f_multisum(TABLE_QUERY, 900), sorted(TABLE_COEFFICIENTS))
    if name == "false_theta_zero":
        pair = decompose_F([0])
        return dict(P=format_laurent(pair.P), Q=format_laurent(pair.Q))
    if name == "euler_values":
        table = euler_values(2)
        return dict((str(v), str(table.at_one[v])) for v in range(3))
    if name == "c1_pure":
        return dict(c1=str(asym_F(TABLE_QUERY, 1).normalized()[1]))
    if name == "c1_mixed":
        return dict(c1=str(asym_G(CoeffQuery.build([0], [1]), 1).normalized()[1]))
    raise BOError("No regeneration rule for example '{0}'".format(name))


def examples(names=None):
    """
    Regenerate every printed value and diff it against the embedded golden data.

    :param names: Subset of example names, all when None. -> List
    :return: Records with name, description, expected, actual and passed. -> List
    """
    records = []
    for golden in GOLDEN_EXAMPLES:
        if names and golden["name"] not in names:
            continue
        actual = _regenerate(golden["name"])
        diff = dict((key, dict(expected=value, actual=actual.get(key))) for key, value in golden["expected"].items() if actual.get(key) != value)
        records.append(dict(name=golden["name"], description=golden["description"], expected=golden["expected"], actual=actual, diff=diff, passed=not diff))
    return records
