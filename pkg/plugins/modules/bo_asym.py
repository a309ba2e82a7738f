#!/usr/bin/python
# -*- coding: utf-8 -*-

# Copyright: (c) 2026, Bloch-Okounkov collection maintainers
# GNU General Public License v3.0+ (see LICENSE or https://www.gnu.org/licenses/gpl-3.0.txt)

from __future__ import absolute_import, division, print_function

__metaclass__ = type

ANSIBLE_METADATA = {"metadata_version": "1.1", "status": ["preview"], "supported_by": "community"}

DOCUMENTATION = r"""
---
module: bo_asym
short_description: Asymptotic expansion of a coefficient at q = e^(-2 pi y)
description:
- Compute the exact rational coefficients c_0 .. c_K of the expansion in powers of pi y as y tends to 0.
- Optionally evaluate the coefficient series numerically at each y, with a rigorous truncation tail,
  and report the error of the truncated expansion and its empirical order.
author:
- Bloch-Okounkov collection maintainers
options:
  pos:
    description:
    - Indices r of the positive exponents.
    type: list
    elements: int
    default: []
  neg:
    description:
    - Indices s of the negative exponents.
    type: list
    elements: int
    default: []
  allow_collision:
    description:
    - Accept colliding indices.
    type: bool
    default: false
  terms:
    description:
    - Last order K of the expansion.
    type: int
    default: 3
  ys:
    description:
    - Decreasing evaluation points y, given as decimal strings.
    type: list
    elements: str
    default: [ "0.1", "0.05", "0.025" ]
  numeric:
    description:
    - Compare the expansion with the numerically evaluated series.
    type: bool
    default: true
  tolerance:
    description:
    - Largest admissible truncation tail of a numeric evaluation.
    type: str
    default: "1e-30"
  pair_path:
    description:
    - Also evaluate the cleared false theta pair divided by its clearing polynomial.
    type: bool
    default: false
  theta_z:
    description:
    - Check the modular transformation of the Jacobi theta function at this z for every y.
    type: str
extends_documentation_fragment: qseries.bloch_okounkov.modules
"""

EXAMPLES = r"""
- name: Expansion of F_(2,3,4,5)
  qseries.bloch_okounkov.bo_asym:
    pos: [2, 3, 4, 5]
    numeric: false

- name: Error decay of a mixed query at 50 digits
  qseries.bloch_okounkov.bo_asym:
    pos: [0]
    neg: [1]
    terms: 3
    ys: ["0.1", "0.05", "0.025"]
    precision: 50
"""

RETURN = r"""
current:
  description: Expansion and numeric comparison.
  returned: always
  type: dict
  contains:
    coefficients:
      description: c_k as exact fractions.
      type: list
    normalized:
      description: 2^n c_k as exact fractions.
      type: list
    expansion:
      description: K and every c_k as numerator and denominator decimal strings.
      type: dict
    c1:
      description: Computed and predicted 2^n c_1.
      type: dict
    numeric:
      description: Per y the series value, the expansion value, the error and the tail bound, plus the empirical orders.
      type: dict
      returned: when numeric is set
    theta:
      description: Both sides of the theta transformation per y.
      type: list
      returned: when theta_z is set
"""

from ansible.module_utils.basic import AnsibleModule
from mpmath import mp
from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.bo import BOModule, bo_argument_spec, bo_query_spec
from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.constants import ASYM_DEFAULT_TERMS, ASYM_DEFAULT_Y, NUMERIC_TOLERANCE, RC_QUERY
from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.series import BOError, ConsistencyError, QueryError
from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.false_theta import decompose
from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.utils import format_exponent
from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.asymptotics import (
    asym_F,
    asym_G,
    predicted_c1,
    numeric_eval,
    numeric_pair_eval,
    order_of_accuracy,
    theta_transform_check,
)


def main():
    argument_spec = bo_argument_spec()
    argument_spec.update(bo_query_spec())
    argument_spec.update(
        terms=dict(type="int", default=ASYM_DEFAULT_TERMS),
        ys=dict(type="list", elements="str", default=ASYM_DEFAULT_Y),
        numeric=dict(type="bool", default=True),
        tolerance=dict(type="str", default=NUMERIC_TOLERANCE),
        pair_path=dict(type="bool", default=False),
        theta_z=dict(type="str"),
    )

    module = AnsibleModule(argument_spec=argument_spec, supports_check_mode=True)

    bo = BOModule(module)

    query = bo.validate_query()
    K = module.params.get("terms")
    ys = module.params.get("ys")
    precision = module.params.get("precision")
    tolerance = module.params.get("tolerance")

    if K < 0:
        bo.fail_json(msg="Parameter 'terms' must be non-negative, got {0}".format(K))

    try:
        with bo.timed("expansion"):
            expansion = asym_F(query.pos, K) if query.m == query.n else asym_G(query, K)
        normalized = expansion.normalized()
        bo.existing = dict(
            query=query.to_json(),
            coefficients=[str(c) for c in expansion.coeffs],
            normalized=[str(c) for c in normalized],
            expansion=expansion.to_json(),
        )
        if K >= 1:
            predicted = predicted_c1(query)
            bo.existing["c1"] = dict(computed=str(normalized[1]), predicted=str(predicted), agree=normalized[1] == predicted)
            if normalized[1] != predicted:
                raise ConsistencyError("2^n c_1 differs from its closed form", bo.existing["c1"])

        if module.params.get("numeric"):
            if any(mp.mpf(y) <= 0 for y in ys):
                raise QueryError("Evaluation points must be positive, got {0}".format(ys))
            with bo.timed("numeric"):
                report = order_of_accuracy(query, K, ys, precision, tolerance)
                series = report.series
                pair = decompose(query) if module.params.get("pair_path") and not query.collisions else None
                rows = []
                for y, error in zip(ys, report.errors):
                    value = numeric_eval(series, y, precision, tolerance)
                    row = dict(
                        y=y,
                        series=mp.nstr(value.value, precision),
                        expansion=mp.nstr(expansion.value(y, precision), precision),
                        error=mp.nstr(error, 10),
                        tail=mp.nstr(value.tail, 5),
                    )
                    if pair is not None:
                        row["pair"] = mp.nstr(numeric_pair_eval(pair, query, y, precision), precision)
                    rows.append(row)
            bo.existing["numeric"] = dict(order=format_exponent(series.order), rows=rows, orders=[mp.nstr(value, 6) for value in report.orders])
            bo.log("empirical orders {0}".format(bo.existing["numeric"]["orders"]))

        if module.params.get("theta_z") is not None:
            checks = [theta_transform_check(module.params.get("theta_z"), y, precision) for y in ys]
            bo.existing["theta"] = [
                dict(y=y, lhs=mp.nstr(check.lhs, precision), rhs=mp.nstr(check.rhs, precision), error=mp.nstr(check.error, 5), passed=check.passed)
                for y, check in zip(ys, checks)
            ]
    except BOError as error:
        bo.fail_from_exception(error)
    except ValueError as error:
        bo.fail_json(msg="Cannot read evaluation point: {0}".format(error), rc=RC_QUERY)

    bo.render(["k", "c_k", "normalized"], [(k, str(c), str(normalized[k])) for k, c in enumerate(expansion.coeffs)])
    bo.export("asym.json")
    bo.exit_json()


if __name__ == "__main__":
    main()
