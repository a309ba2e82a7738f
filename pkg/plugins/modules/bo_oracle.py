#!/usr/bin/python
# -*- coding: utf-8 -*-

# Copyright: (c) 2026, Bloch-Okounkov collection maintainers
# GNU General Public License v3.0+ (see LICENSE or https://www.gnu.org/licenses/gpl-3.0.txt)

from __future__ import absolute_import, division, print_function

__metaclass__ = type

ANSIBLE_METADATA = {"metadata_version": "1.1", "status": ["preview"], "supported_by": "community"}

DOCUMENTATION = r"""
---
module: bo_oracle
short_description: Coefficient by literal enumeration of the charge-zero Fock space
description:
- Enumerate every charge-zero state below the requested weight and sum the admitted ones.
- The result times (q;q)_inf is the coefficient, independent of any closed form.
author:
- Bloch-Okounkov collection maintainers
options:
  pos:
    description:
    - Indices r of the positive exponents, a state is admitted when every r is occupied in T.
    type: list
    elements: int
    default: []
  neg:
    description:
    - Indices s of the negative exponents, a state is admitted when no s is occupied in S.
    type: list
    elements: int
    default: []
  allow_collision:
    description:
    - Enumerate a query with r_j == s_k as it stands.
    - A single colliding pair returns the collision report next to the vanishing claim.
    type: bool
    default: false
  compare:
    description:
    - Also compute the constant-term formula and the multisum and require all three to agree.
    type: bool
    default: false
  raw:
    description:
    - Return the state sum without the (q;q)_inf factor as well.
    type: bool
    default: false
  partition_pairs:
    description:
    - Check the state sum of a purely positive query against pairs of partitions into distinct odd parts.
    type: bool
    default: false
extends_documentation_fragment: qseries.bloch_okounkov.modules
"""

EXAMPLES = r"""
- name: Three-way check of a mixed query
  qseries.bloch_okounkov.bo_oracle:
    pos: [3, 1]
    neg: [0]
    q_order: 24
    compare: true
    shards: 4

- name: Collision ledger for r = s = 2
  qseries.bloch_okounkov.bo_oracle:
    pos: [2]
    neg: [2]
    allow_collision: true
    q_order: 20
"""

RETURN = r"""
current:
  description: Oracle result.
  returned: always
  type: dict
  contains:
    query:
      description: The normalized query.
      type: dict
    oracle:
      description: The enumerated coefficient series.
      type: dict
    raw:
      description: State sum before multiplying by (q;q)_inf.
      type: dict
      returned: when raw is set
    compare:
      description: First mismatching exponent of the constant-term formula and of the multisum, null when they agree.
      type: dict
      returned: when compare is set
    partition_pairs:
      description: Outcome of the partition pair count.
      type: dict
      returned: when partition_pairs is set
    collision:
      description: Both oracle paths and the vanishing claim.
      type: dict
      returned: when the query is a single colliding pair
"""

from ansible.module_utils.basic import AnsibleModule
from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.bo import BOModule, bo_argument_spec, bo_query_spec
from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.series import BOError, ConsistencyError, exp8
from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.closed_forms import ct_formula, g_multisum
from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.fock import (
    check_partition_pairs,
    collision_report,
    oracle_coefficient,
    raw_trace,
    spec_from_lists,
)
from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.utils import check_payload, format_exponent, series_payload


def main():
    argument_spec = bo_argument_spec()
    argument_spec.update(bo_query_spec())
    argument_spec.update(
        compare=dict(type="bool", default=False),
        raw=dict(type="bool", default=False),
        partition_pairs=dict(type="bool", default=False),
    )

    module = AnsibleModule(argument_spec=argument_spec, supports_check_mode=True)

    bo = BOModule(module)

    query = bo.validate_query()
    order = module.params.get("q_order")
    shards = module.params.get("shards")
    spec = spec_from_lists(query.pos, query.neg)
    bound = exp8(order)

    try:
        with bo.timed("oracle"):
            oracle = oracle_coefficient(spec, order, shards)
        bo.existing = dict(query=query.to_json(), oracle=series_payload(oracle))

        if module.params.get("raw"):
            bo.existing["raw"] = series_payload(raw_trace(spec, order, shards))

        if module.params.get("compare"):
            with bo.timed("compare"):
                paths = dict(ct=ct_formula(query, order), multisum=g_multisum(query, order))
            mismatches = dict((name, format_exponent(value.first_mismatch(oracle, bound))) for name, value in paths.items())
            bo.existing["compare"] = mismatches
            if any(value is not None for value in mismatches.values()) and not query.collisions:
                raise ConsistencyError("Oracle and formula paths disagree", dict(query=query.to_json(), first_mismatch=mismatches))

        if module.params.get("partition_pairs"):
            if query.neg:
                module.warn("Partition pairs only count purely positive queries, skipping the check.")
            else:
                bo.existing["partition_pairs"] = check_payload(check_partition_pairs(query.pos, order))

        if query.collisions and query.m == 1 and query.n == 2:
            report = collision_report(query.pos[0], order, shards)
            bo.existing["collision"] = dict(
                r=report.r,
                oracle=series_payload(report.oracle),
                ct_path=series_payload(report.ct_path),
                vanishing_claim=series_payload(report.vanishing_claim),
                paths_agree=report.paths_agree,
            )
    except BOError as error:
        bo.fail_from_exception(error)

    bo.render(["exp", "coeff"], [(format_exponent(e), c) for e, c in oracle.terms()])
    bo.export("oracle.json")
    bo.exit_json()


if __name__ == "__main__":
    main()
