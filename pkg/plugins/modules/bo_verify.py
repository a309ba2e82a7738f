#!/usr/bin/python
# -*- coding: utf-8 -*-

# Copyright: (c) 2026, Bloch-Okounkov collection maintainers
# GNU General Public License v3.0+ (see LICENSE or https://www.gnu.org/licenses/gpl-3.0.txt)

from __future__ import absolute_import, division, print_function

__metaclass__ = type

ANSIBLE_METADATA = {"metadata_version": "1.1", "status": ["preview"], "supported_by": "community"}

DOCUMENTATION = r"""
---
module: bo_verify
short_description: Run the invariant suite
description:
- Run every identity the collection relies on, from the series arithmetic up to the asymptotic corollaries,
  and report pass or fail per property.
- The module fails with rc 3 when a property fails, unless C(fail_on_error) is disabled.
author:
- Bloch-Okounkov collection maintainers
options:
  properties:
    description:
    - Subset of properties to run, all of them when omitted.
    type: list
    elements: str
    choices:
    - order_propagation
    - pochhammer_inverse
    - partition_recurrence
    - triple_product
    - state_closure
    - state_generating_function
    - oracle_diagonality
    - compress_idempotence
    - partition_pairs
    - three_way
    - multisum_valuation
    - bilateral_n1
    - inverse_theta
    - higher_level
    - false_theta_round_trip
    - false_theta_uniqueness
    - false_theta_bounds
    - false_theta_single
    - c1_pure
    - c1_mixed
    - euler_identities
    - order_of_accuracy
    - theta_transform
    - numeric_agreement
    - ratio_positivity
    - collision_paths
  fail_on_error:
    description:
    - Fail the task when a property does not hold.
    type: bool
    default: true
extends_documentation_fragment: qseries.bloch_okounkov.modules
"""

EXAMPLES = r"""
- name: Full invariant suite
  qseries.bloch_okounkov.bo_verify:
  register: suite

- name: Only the false theta properties, on four shards
  qseries.bloch_okounkov.bo_verify:
    properties:
    - false_theta_round_trip
    - false_theta_uniqueness
    shards: 4
"""

RETURN = r"""
current:
  description: Suite outcome.
  returned: always
  type: dict
  contains:
    passed:
      description: Whether every selected property holds.
      type: bool
    results:
      description: name, passed and detail per property.
      type: list
    failed_properties:
      description: Names of the failing properties.
      type: list
"""

from ansible.module_utils.basic import AnsibleModule
from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.bo import BOModule, bo_argument_spec
from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.constants import RC_CONSISTENCY, VERIFY_PROPERTIES
from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.verification import verify


def main():
    argument_spec = bo_argument_spec()
    argument_spec.update(
        properties=dict(type="list", elements="str", choices=VERIFY_PROPERTIES),
        fail_on_error=dict(type="bool", default=True),
    )

    module = AnsibleModule(argument_spec=argument_spec, supports_check_mode=True)

    bo = BOModule(module)

    properties = module.params.get("properties")
    bo.proposed = dict(properties=properties or VERIFY_PROPERTIES)

    results = []
    with bo.timed("suite"):
        for result in verify(properties, module.params.get("shards")):
            bo.log("{0}: {1}".format(result.name, "passed" if result.passed else "failed"), level="info" if result.passed else "warning")
            results.append(result)

    failed = [result.name for result in results if not result.passed]
    bo.existing = dict(
        passed=not failed,
        results=[dict(name=result.name, passed=result.passed, detail=result.detail) for result in results],
        failed_properties=failed,
    )

    bo.render(["property", "passed"], [(result.name, result.passed) for result in results])
    bo.export("verify.json")
    if failed and module.params.get("fail_on_error"):
        bo.fail_json(msg="Properties failed: {0}".format(", ".join(failed)), rc=RC_CONSISTENCY)
    bo.exit_json()


if __name__ == "__main__":
    main()
