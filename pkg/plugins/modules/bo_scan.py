#!/usr/bin/python
# -*- coding: utf-8 -*-

# Copyright: (c) 2026, Bloch-Okounkov collection maintainers
# GNU General Public License v3.0+ (see LICENSE or https://www.gnu.org/licenses/gpl-3.0.txt)

from __future__ import absolute_import, division, print_function

__metaclass__ = type

ANSIBLE_METADATA = {"metadata_version": "1.1", "status": ["preview"], "supported_by": "community"}

DOCUMENTATION = r"""
---
module: bo_scan
short_description: Scan coefficient ratios against the partition numbers
description:
- For a purely positive query, list the coefficients b_l of F_r/(q;q)_inf and the ratio 2^n b_l/p(l).
- For a mixed query, list the q^l coefficients of G and the ratio with p(l/2) at even l,
  or with C(euler_quotient) the coefficients of G/(q;q)_inf against p(l).
- Deviations |ratio - 1| are reported at the checkpoints together with the first negative coefficient.
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
  limit:
    description:
    - Largest l of the scan, clamped to C(scan_limit).
    - Defaults to C(scan_limit).
    type: int
  checkpoints:
    description:
    - Values of l where the deviation from 1 is reported.
    type: list
    elements: int
    default: [ 1000, 2000, 4000 ]
  euler_quotient:
    description:
    - Divide a mixed coefficient by (q;q)_inf and compare with p(l).
    type: bool
    default: false
extends_documentation_fragment: qseries.bloch_okounkov.modules
"""

EXAMPLES = r"""
- name: Ratio scan of F_(2,3,4,5) to l = 4000 as CSV
  qseries.bloch_okounkov.bo_scan:
    pos: [2, 3, 4, 5]
    output: csv
    output_dir: "{{ playbook_dir }}/scans"

- name: Short scan of a mixed query
  qseries.bloch_okounkov.bo_scan:
    pos: [0]
    neg: [1]
    limit: 200
    checkpoints: [100, 200]
"""

RETURN = r"""
current:
  description: Scan summary.
  returned: always
  type: dict
  contains:
    limit:
      description: Last l scanned.
      type: int
    deviations:
      description: Absolute deviation of the ratio from 1 per checkpoint, as decimal strings.
      type: dict
    first_negative:
      description: First l with a negative coefficient, null when none.
      type: int
    checkpoints:
      description: Rows at the checkpoints.
      type: list
stdout:
  description: CSV with columns l, coefficient, p, ratio.
  returned: when output is csv
  type: str
"""

from ansible.module_utils.basic import AnsibleModule
from mpmath import mp, mpf
from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.bo import BOModule, bo_argument_spec, bo_query_spec
from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.constants import SCAN_CHECKPOINTS, SCAN_CSV_COLUMNS
from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.series import BOError
from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.asymptotics import coefficient_ratio_scan, scan_summary


def decimal(value, digits=20):
    if value is None:
        return None
    with mp.workdps(digits + 5):
        return mp.nstr(mpf(value.numerator) / value.denominator, digits)


def main():
    argument_spec = bo_argument_spec()
    argument_spec.update(bo_query_spec())
    argument_spec.update(
        limit=dict(type="int"),
        checkpoints=dict(type="list", elements="int", default=SCAN_CHECKPOINTS),
        euler_quotient=dict(type="bool", default=False),
    )

    module = AnsibleModule(argument_spec=argument_spec, supports_check_mode=True)

    bo = BOModule(module)

    query = bo.validate_query()
    scan_limit = module.params.get("scan_limit")
    limit = module.params.get("limit")
    if limit is None:
        limit = scan_limit
    if limit > scan_limit:
        module.warn("Scan limit {0} exceeds scan_limit, clamped to {1}.".format(limit, scan_limit))
        limit = scan_limit
    if limit < 1:
        bo.fail_json(msg="Parameter 'limit' must be a positive integer, got {0}".format(limit))

    try:
        with bo.timed("scan"):
            rows = coefficient_ratio_scan(query, limit, module.params.get("euler_quotient"))
    except BOError as error:
        bo.fail_from_exception(error)

    summary = scan_summary(rows, module.params.get("checkpoints"))
    by_l = dict((row.l, row) for row in rows)
    bo.existing = dict(
        query=query.to_json(),
        limit=limit,
        euler_quotient=module.params.get("euler_quotient"),
        deviations=dict((str(point), decimal(value)) for point, value in summary["deviations"].items()),
        first_negative=summary["first_negative"],
        checkpoints=[
            dict(l=point, coefficient=str(by_l[point].coefficient), p=None if by_l[point].p is None else str(by_l[point].p), ratio=decimal(by_l[point].ratio))
            for point in module.params.get("checkpoints")
            if point in by_l
        ],
    )
    bo.log("scanned {0} coefficients, first negative at {1}".format(len(rows), summary["first_negative"]))

    csv_rows = [(row.l, row.coefficient, row.p, decimal(row.ratio)) for row in rows]
    bo.render(SCAN_CSV_COLUMNS, csv_rows)
    if module.params.get("output") == "csv":
        bo.export("scan.csv", bo.stdout)
    else:
        bo.export("scan.json")
    bo.exit_json()


if __name__ == "__main__":
    main()
