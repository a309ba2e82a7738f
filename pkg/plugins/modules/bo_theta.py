#!/usr/bin/python
# -*- coding: utf-8 -*-

# Copyright: (c) 2026, Bloch-Okounkov collection maintainers
# GNU General Public License v3.0+ (see LICENSE or https://www.gnu.org/licenses/gpl-3.0.txt)

from __future__ import absolute_import, division, print_function

__metaclass__ = type

ANSIBLE_METADATA = {"metadata_version": "1.1", "status": ["preview"], "supported_by": "community"}

DOCUMENTATION = r"""
---
module: bo_theta
short_description: Check the theta identities inside a t-window
description:
- Check the n=1 bilateral identity, expand Theta(t)^-ell in the region |t| > 1, or compare the ell-th power of the
  bilateral series with its theta form, all on the t-exponents in [-t_window, t_window] and below q^q_order.
- A cell is compared only when the window certifies it, the module fails with rc 3 when a certified cell differs.
- The bilateral identity needs t_window >= ceil(sqrt(2 q_order)) + 2, smaller windows fail with the required size.
author:
- Bloch-Okounkov collection maintainers
options:
  identity:
    description:
    - C(bilateral_n1) multiplies sum f_j t^(j+1/2) by Theta(t) and compares with q^(1/8) (q;q)_inf^3.
    - C(inverse_theta) returns the certified expansion of Theta(t)^-ell and checks it against Theta(t)^ell.
    - C(higher_level) compares the ell-th power of the bilateral series with (q^(1/8) (q;q)_inf^3)^ell Theta(t)^-ell.
    type: str
    choices: [ bilateral_n1, inverse_theta, higher_level ]
    default: bilateral_n1
  ell:
    description:
    - Power of Theta for C(inverse_theta) and C(higher_level).
    type: int
    default: 1
extends_documentation_fragment: qseries.bloch_okounkov.modules
"""

EXAMPLES = r"""
- name: Bilateral identity below q^20
  qseries.bloch_okounkov.bo_theta:
    identity: bilateral_n1
    t_window: 10
    q_order: 20

- name: Theta(t)^-2 on t-exponents in [-8, 8]
  qseries.bloch_okounkov.bo_theta:
    identity: inverse_theta
    ell: 2
    t_window: 8
    q_order: 6
    output: csv
"""

RETURN = r"""
current:
  description: Outcome of the identity.
  returned: always
  type: dict
  contains:
    identity:
      description: The identity that was checked.
      type: str
    t_window:
      description: Half-width of the t-window.
      type: int
    q_order:
      description: Exclusive q-exponent bound.
      type: int
    check:
      description: passed, the first mismatching cell as exact t and q exponents, cells_checked and both sides at the mismatch.
      type: dict
    series:
      description: Terms of Theta(t)^-ell keyed by t-exponent, each with the series payload, and the raw ZetaLaurent form.
      type: dict
      returned: when identity is inverse_theta
    certified:
      description: Exclusive q-exponent below which each t-exponent is exact.
      type: dict
      returned: when identity is inverse_theta
stdout:
  description: CSV with columns t, exp and coeff of the expansion, or identity, passed and cells_checked.
  returned: when output is csv or pretty
  type: str
"""

from fractions import Fraction

from ansible.module_utils.basic import AnsibleModule
from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.bo import BOModule, bo_argument_spec
from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.constants import THETA_IDENTITIES
from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.series import BOError, ConsistencyError
from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.closed_forms import bilateral_n1_check, higher_level_oracle, inverse_theta_power
from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.utils import check_payload, format_exponent, half_key_cell, laurent_payload, t_key_cell


def main():
    argument_spec = bo_argument_spec()
    argument_spec.update(
        identity=dict(type="str", default="bilateral_n1", choices=THETA_IDENTITIES),
        ell=dict(type="int", default=1),
    )

    module = AnsibleModule(argument_spec=argument_spec, supports_check_mode=True)

    bo = BOModule(module)

    identity = module.params.get("identity")
    ell = module.params.get("ell")
    window = module.params.get("t_window")
    order = module.params.get("q_order")
    bo.proposed = dict(identity=identity, ell=ell, t_window=window, q_order=order)

    rows = []
    try:
        with bo.timed(identity):
            if identity == "bilateral_n1":
                result = bilateral_n1_check(window, order)
                check = check_payload(result, t_key_cell)
            elif identity == "inverse_theta":
                expansion = inverse_theta_power(ell, window, order)
                result = expansion.check
                check = check_payload(result, half_key_cell)
            else:
                result = higher_level_oracle(ell, window, order)
                check = check_payload(result, half_key_cell)
        bo.existing = dict(identity=identity, t_window=window, q_order=order, check=check)
        if identity != "bilateral_n1":
            bo.existing["ell"] = ell
        if identity == "inverse_theta":
            bo.existing["series"] = laurent_payload(expansion.series)
            bo.existing["certified"] = dict((str(Fraction(key, 2)), format_exponent(value)) for key, value in sorted(expansion.certified.items()))
            rows = [(str(Fraction(key, 2)), format_exponent(e), c) for key, value in sorted(expansion.series.terms.items()) for e, c in value.terms()]
        bo.log("{0} compared {1} cells".format(identity, result.cells_checked))
        if not result.passed:
            raise ConsistencyError("Identity {0} fails at a certified cell".format(identity), check)
    except BOError as error:
        bo.fail_from_exception(error)

    if rows:
        bo.render(["t", "exp", "coeff"], rows)
    else:
        bo.render(["identity", "passed", "cells_checked"], [(identity, result.passed, result.cells_checked)])
    bo.export("theta.json")
    bo.exit_json()


if __name__ == "__main__":
    main()
