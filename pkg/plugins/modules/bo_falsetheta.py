#!/usr/bin/python
# -*- coding: utf-8 -*-

# Copyright: (c) 2026, Bloch-Okounkov collection maintainers
# GNU General Public License v3.0+ (see LICENSE or https://www.gnu.org/licenses/gpl-3.0.txt)

from __future__ import absolute_import, division, print_function

__metaclass__ = type

ANSIBLE_METADATA = {"metadata_version": "1.1", "status": ["preview"], "supported_by": "community"}

DOCUMENTATION = r"""
---
module: bo_falsetheta
short_description: Decompose a cleared coefficient into Laurent polynomials and Rogers' false theta function
description:
- Multiply the coefficient of a query by its clearing polynomial, the product of 1 - q^(r_j + s_k + 1),
  1 - q^(r_j - r_k) and 1 - q^(s_j - s_k), and write the result as P(q) Psi(q) + Q(q).
- The pair is certified by expanding it against the cleared series below q^q_order.
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
    - Accepted for symmetry with the other modules, a colliding query cannot be decomposed and fails.
    type: bool
    default: false
  pivots:
    description:
    - Order in which the recursion removes positive and negative indices.
    - Every choice yields the same pair.
    type: str
    choices: [ default, reversed, descending, ascending ]
    default: default
  pair:
    description:
    - A previously returned C(current.pair) to certify against the query instead of decomposing it.
    type: dict
  certify:
    description:
    - Compare the expanded pair with the cleared coefficient series.
    type: bool
    default: true
  bounds:
    description:
    - Return the exponent envelope of P and Q.
    type: bool
    default: false
extends_documentation_fragment: qseries.bloch_okounkov.modules
"""

EXAMPLES = r"""
- name: Pair of F_(0)
  qseries.bloch_okounkov.bo_falsetheta:
    pos: [0]
  register: single

- name: Mixed query with the reversed pivot order, certified to q^300
  qseries.bloch_okounkov.bo_falsetheta:
    pos: [3, 1]
    neg: [0]
    pivots: reversed
    q_order: 300
    bounds: true

- name: Certify an exported pair
  qseries.bloch_okounkov.bo_falsetheta:
    pos: [0]
    pair: "{{ single.current.pair }}"
"""

RETURN = r"""
current:
  description: Decomposition result.
  returned: always
  type: dict
  contains:
    query:
      description: The normalized query.
      type: dict
    pair:
      description: P and Q as rows [exponent in 1/2 units, numerator, denominator].
      type: dict
    readable:
      description: P and Q as text.
      type: dict
    clearing_factors:
      description: Exponents d of the factors 1 - q^d.
      type: list
    certificate:
      description: Outcome of the expansion check, with the first differing exponent.
      type: dict
      returned: when certify is set
    bounds:
      description: Exponent envelope of P and Q.
      type: dict
      returned: when bounds is set
"""

from ansible.module_utils.basic import AnsibleModule
from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.bo import BOModule, bo_argument_spec, bo_query_spec
from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.constants import FALSE_THETA_PIVOTS
from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.series import BOError, ConsistencyError
from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.false_theta import (
    FalseThetaPair,
    cleared_series,
    clearing_factors,
    decompose,
    exponent_bounds,
    verify_pair,
)
from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.utils import check_payload, format_exponent, format_laurent


def main():
    argument_spec = bo_argument_spec()
    argument_spec.update(bo_query_spec())
    argument_spec.update(
        pivots=dict(type="str", default="default", choices=sorted(FALSE_THETA_PIVOTS)),
        pair=dict(type="dict"),
        certify=dict(type="bool", default=True),
        bounds=dict(type="bool", default=False),
    )

    module = AnsibleModule(argument_spec=argument_spec, supports_check_mode=True)

    bo = BOModule(module)

    query = bo.validate_query()
    order = module.params.get("q_order")
    pivots = module.params.get("pivots")

    try:
        with bo.timed("decompose"):
            if module.params.get("pair"):
                pair = FalseThetaPair.from_json(module.params.get("pair"))
            else:
                pair = decompose(query, pivots)
        bo.existing = dict(
            query=query.to_json(),
            pair=pair.to_json(),
            readable=dict(P=format_laurent(pair.P), Q=format_laurent(pair.Q)),
            clearing_factors=[format_exponent(d) for d in clearing_factors(query)],
        )

        if module.params.get("bounds"):
            bounds = exponent_bounds(query, pivots)
            bo.existing["bounds"] = dict((name, None if span is None else [format_exponent(e) for e in span]) for name, span in bounds.items())

        if module.params.get("certify"):
            with bo.timed("certify"):
                result = verify_pair(pair, cleared_series(query, order), order)
            bo.existing["certificate"] = check_payload(result, format_exponent)
            bo.log("certificate {0} on {1} grid cells".format("passed" if result.passed else "failed", result.cells_checked))
            if not result.passed:
                raise ConsistencyError("False theta pair does not reproduce the cleared coefficient", bo.existing)
    except (BOError, KeyError, ValueError, TypeError) as error:
        if isinstance(error, BOError):
            bo.fail_from_exception(error)
        bo.fail_json(msg="Malformed pair: {0}".format(error))

    bo.render()
    bo.export("falsetheta.json")
    bo.exit_json()


if __name__ == "__main__":
    main()
