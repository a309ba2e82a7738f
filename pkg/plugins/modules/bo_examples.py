#!/usr/bin/python
# -*- coding: utf-8 -*-

# Copyright: (c) 2026, Bloch-Okounkov collection maintainers
# GNU General Public License v3.0+ (see LICENSE or https://www.gnu.org/licenses/gpl-3.0.txt)

from __future__ import absolute_import, division, print_function

__metaclass__ = type

ANSIBLE_METADATA = {"metadata_version": "1.1", "status": ["preview"], "supported_by": "community"}

DOCUMENTATION = r"""
---
module: bo_examples
short_description: Regenerate the printed values and diff them against the golden data
description:
- Recompute every printed instance shipped with the collection and compare it with the embedded expected value.
author:
- Bloch-Okounkov collection maintainers
options:
  names:
    description:
    - Subset of example names, all of them when omitted.
    type: list
    elements: str
  fail_on_diff:
    description:
    - Fail the task when a regenerated value differs from the golden data.
    type: bool
    default: true
extends_documentation_fragment: qseries.bloch_okounkov.modules
"""

EXAMPLES = r"""
- name: Regenerate every example
  qseries.bloch_okounkov.bo_examples:

- name: Only the coefficient table, exported
  qseries.bloch_okounkov.bo_examples:
    names: [coefficient_table]
    output_dir: /tmp/bo
"""

RETURN = r"""
current:
  description: Regeneration outcome.
  returned: always
  type: dict
  contains:
    passed:
      description: Whether every example matches.
      type: bool
    examples:
      description: name, description, expected, actual, diff and passed per example.
      type: list
"""

from ansible.module_utils.basic import AnsibleModule
from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.bo import BOModule, bo_argument_spec
from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.constants import GOLDEN_EXAMPLES, RC_CONSISTENCY, RC_QUERY
from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.series import BOError
from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.verification import examples


def main():
    argument_spec = bo_argument_spec()
    argument_spec.update(
        names=dict(type="list", elements="str"),
        fail_on_diff=dict(type="bool", default=True),
    )

    module = AnsibleModule(argument_spec=argument_spec, supports_check_mode=True)

    bo = BOModule(module)

    names = module.params.get("names")
    known = [golden["name"] for golden in GOLDEN_EXAMPLES]
    unknown = sorted(set(names or []) - set(known))
    if unknown:
        bo.fail_json(msg="Unknown examples {0}, expected a subset of {1}".format(unknown, known), rc=RC_QUERY)
    bo.proposed = dict(names=names or known)

    try:
        with bo.timed("examples"):
            records = examples(names)
    except BOError as error:
        bo.fail_from_exception(error)

    for record in records:
        if not record["passed"]:
            bo.log("{0} differs: {1}".format(record["name"], record["diff"]), level="warning")

    failed = [record["name"] for record in records if not record["passed"]]
    bo.existing = dict(passed=not failed, examples=records)

    bo.render(["name", "passed"], [(record["name"], record["passed"]) for record in records])
    bo.export("examples.json")
    if failed and module.params.get("fail_on_diff"):
        bo.fail_json(msg="Examples differ from the golden data: {0}".format(", ".join(failed)), rc=RC_CONSISTENCY)
    bo.exit_json()


if __name__ == "__main__":
    main()
