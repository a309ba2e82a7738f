# -*- coding: utf-8 -*-

# Copyright: (c) 2026, Bloch-Okounkov collection maintainers
# GNU General Public License v3.0+ (see LICENSE or https://www.gnu.org/licenses/gpl-3.0.txt)

from __future__ import absolute_import, division, print_function

__metaclass__ = type


class ModuleDocFragment(object):
    # Run configuration shared by every bo_ module
    DOCUMENTATION = r"""
options:
  q_order:
    description:
    - Exclusive q-exponent bound N, every reported coefficient below q^N is exact.
    type: int
    default: 100
  t_window:
    description:
    - Half-width of the t-window used by bilateral and inverse theta checks.
    type: int
    default: 12
  scan_limit:
    description:
    - Largest q-exponent a coefficient scan may reach.
    - Requests beyond it are clamped with a warning.
    type: int
    default: 4000
  precision:
    description:
    - Decimal digits used for numeric evaluations.
    type: int
    default: 50
  shards:
    description:
    - Number of worker threads for Fock space enumerations.
    - The result does not depend on this value.
    type: int
    default: 1
  output:
    description:
    - Format of the C(stdout) rendering next to the JSON result.
    - C(json) returns the structured result only.
    - C(csv) adds a CSV table when the module has tabular output.
    - C(pretty) adds a YAML rendering of C(current).
    type: str
    choices: [ json, csv, pretty ]
    default: json
  output_level:
    description:
    - Influence the output of this module.
    - C(normal) means the standard output, incl. C(current) dict
    - C(info) adds informational output, incl. C(config) and C(proposed) dicts
    - C(debug) adds debugging output, incl. C(bo_logs) and C(timings) information
    type: str
    choices: [ debug, info, normal ]
    default: normal
  output_dir:
    description:
    - Directory receiving an export of the result.
    - The file is rewritten only when its content changes, which sets C(changed).
    - If the value is not specified in the task, the value of environment variable C(BO_OUTPUT_DIR) will be used instead.
    type: path
requirements:
- mpmath
notes:
- Exponents are reported as exact fractions, for example C(7/2), never as floats.
- Queries must satisfy r_j != s_k for every positive index r_j and negative index s_k.
"""
