#!/usr/bin/python
# -*- coding: utf-8 -*-

# Copyright: (c) 2026, Bloch-Okounkov collection maintainers
# GNU General Public License v3.0+ (see LICENSE or https://www.gnu.org/licenses/gpl-3.0.txt)

from __future__ import absolute_import, division, print_function

__metaclass__ = type

ANSIBLE_METADATA = {"metadata_version": "1.1", "status": ["preview"], "supported_by": "community"}

DOCUMENTATION = r"""
---
module: bo_coeff
short_description: Compute a Fourier coefficient of the n-point function
description:
- Compute the coefficient of t_1^(r_1+1/2) ... t_m^(r_m+1/2) t_(m+1)^(-s_1-1/2) ... t_n^(-s_(n-m)-1/2)
  of the n-point function as a truncated q-series.
- The constant-term formula, the explicit integrand, the multisum and the printed closed forms are available,
  C(all) runs every applicable path and fails when they disagree.
author:
- Bloch-Okounkov collection maintainers
options:
  pos:
    description:
    - Indices r of the positive exponents r+1/2, distinct and non-negative.
    - The order is irrelevant, the list is sorted in decreasing order.
    type: list
    elements: int
    default: []
  neg:
    description:
    - Indices s of the negative exponents -s-1/2, distinct and non-negative.
    type: list
    elements: int
    default: []
  allow_collision:
    description:
    - Compute a query with r_j == s_k literally instead of rejecting it.
    - A single colliding pair also returns the collision report.
    type: bool
    default: false
  method:
    description:
    - Computation path.
    - C(ct) applies the constant-term factors by recurrence.
    - C(integrand) expands the whole constant-term integrand.
    - C(multisum) uses the grouped multisum.
    - C(closed_form) uses the printed single-sum formula of the query shape.
    - C(all) runs every applicable path and compares them.
    type: str
    choices: [ ct, integrand, multisum, closed_form, all ]
    default: ct
  lower_limit:
    description:
    - First summation index of the two-index positive closed form.
    - Only used by the C(closed_form) path for two positive indices.
    type: int
    default: 1
  exponents:
    description:
    - Exponents whose coefficients are reported explicitly, written as exact fractions such as C(7/2).
    type: list
    elements: str
extends_documentation_fragment: qseries.bloch_okounkov.modules
"""

EXAMPLES = r"""
- name: Coefficient table of F_(2,3,4,5)
  qseries.bloch_okounkov.bo_coeff:
    pos: [2, 3, 4, 5]
    q_order: 900
    exponents: [43, 100, 153, 245, 538, 713, 894]
  register: coefficient_table

- name: Compare every path for a mixed query
  qseries.bloch_okounkov.bo_coeff:
    pos: [1]
    neg: [0]
    method: all
    q_order: 24

- name: Export the terms as CSV
  qseries.bloch_okounkov.bo_coeff:
    neg: [2, 0]
    output: csv
    output_dir: /tmp/bo
"""

RETURN = r"""
current:
  description: The computed coefficient.
  returned: always
  type: dict
  contains:
    query:
      description: The normalized query.
      type: dict
    method:
      description: The path that produced C(series).
      type: str
    series:
      description: order, valuation, nonzero terms and requested coefficients, exponents as exact fractions.
      type: dict
    paths:
      description: Paths compared by C(all) and whether they agreed.
      type: dict
      returned: when method is all
    collision:
      description: Both oracle paths and the vanishing claim for a colliding pair.
      type: dict
      returned: when allow_collision is set and the query is a single colliding pair
stdout:
  description: CSV with columns exp and coeff when output is csv.
  returned: when output is csv or pretty
  type: str
"""

from ansible.module_utils.basic import AnsibleModule
from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.bo import BOModule, bo_argument_spec, bo_query_spec
from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.constants import COEFF_METHODS
from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.series import BOError, ConsistencyError, QueryError, exp8
from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.closed_forms import ct_formula, example_closed_forms, g_multisum
from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.fock import collision_report
from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.utils import format_exponent, parse_exponent, series_payload


CLOSED_FORM_SHAPES = [(0, 1), (1, 2), (2, 2)]


def closed_form(query, order, lower_limit):
    if query.m == 0 and query.n == 1:
        return example_closed_forms("n1_neg", query.neg, order)
    if query.m == 1 and query.n == 2:
        return example_closed_forms("n2_mixed", (query.pos[0], query.neg[0]), order)
    if query.m == 2 and query.n == 2:
        return example_closed_forms("n2_pos", query.pos, order, lower_limit)
    raise QueryError("No closed form for a query with {0} positive and {1} negative indices".format(query.m, query.n - query.m))


def compute(bo, query, method, order):
    if method == "ct":
        return ct_formula(query, order)
    if method == "integrand":
        return ct_formula(query, order, method="integrand")
    if method == "multisum":
        return g_multisum(query, order)
    return closed_form(query, order, bo.params.get("lower_limit"))


def main():
    argument_spec = bo_argument_spec()
    argument_spec.update(bo_query_spec())
    argument_spec.update(
        method=dict(type="str", default="ct", choices=COEFF_METHODS),
        lower_limit=dict(type="int", default=1),
        exponents=dict(type="list", elements="str"),
    )

    module = AnsibleModule(argument_spec=argument_spec, supports_check_mode=True)

    bo = BOModule(module)

    query = bo.validate_query()
    method = module.params.get("method")
    order = module.params.get("q_order")
    bound = exp8(order)

    try:
        exponents = [parse_exponent(value) for value in module.params.get("exponents") or []]
        if method == "all":
            paths = dict()
            for name in ("ct", "integrand", "multisum", "closed_form"):
                if name == "closed_form" and ((query.m, query.n) not in CLOSED_FORM_SHAPES or query.collisions):
                    continue
                with bo.timed(name):
                    paths[name] = compute(bo, query, name, order)
            series = paths["ct"]
            disagreeing = dict(
                (name, format_exponent(value.first_mismatch(series, bound))) for name, value in paths.items() if not value.agrees_with(series, bound)
            )
            if disagreeing:
                raise ConsistencyError("Computation paths disagree with the constant-term formula", dict(query=query.to_json(), first_mismatch=disagreeing))
            bo.existing = dict(query=query.to_json(), method="ct", series=series_payload(series, exponents), paths=dict(compared=sorted(paths), agree=True))
        else:
            with bo.timed(method):
                series = compute(bo, query, method, order)
            bo.existing = dict(query=query.to_json(), method=method, series=series_payload(series, exponents))

        if query.collisions and query.n == 2 and query.m == 1:
            report = collision_report(query.pos[0], order, module.params.get("shards"))
            bo.existing["collision"] = dict(
                r=report.r,
                oracle=series_payload(report.oracle),
                ct_path=series_payload(report.ct_path),
                vanishing_claim=series_payload(report.vanishing_claim),
                paths_agree=report.paths_agree,
            )
    except BOError as error:
        bo.fail_from_exception(error)

    bo.log("{0} nonzero terms below q^{1}".format(len(list(series.terms())), order))
    bo.render(["exp", "coeff"], [(format_exponent(e), c) for e, c in series.terms()])
    bo.export("coeff.json")
    bo.exit_json()


if __name__ == "__main__":
    main()
