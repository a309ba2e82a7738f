# -*- coding: utf-8 -*-

# Copyright: (c) 2026, Bloch-Okounkov collection maintainers
# GNU General Public License v3.0+ (see LICENSE or https://www.gnu.org/licenses/gpl-3.0.txt)

from __future__ import absolute_import, division, print_function

__metaclass__ = type

import csv
import io
from fractions import Fraction

from ansible.module_utils.common.yaml import yaml_dump

from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.constants import GRID, INF
from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.series import GridError, exp8


def format_exponent(value):
    """
    Format an exponent held in grid units as an exact fraction.

    :param value: Exponent in units of 1/8, INF for an exact series. -> Int
    :return: String such as "7/2", "-1" or "1/8", None for INF. -> Str|None
    """
    if value is None or value == INF:
        return None
    return str(Fraction(value, GRID))


def parse_exponent(text):
    """Inverse of format_exponent, accepting "7/2", "894" or "-1/2"."""
    try:
        return exp8(Fraction(str(text).strip()))
    except (ValueError, ZeroDivisionError):
        raise GridError("Cannot read exponent '{0}'".format(text))


def format_number(value):
    if value is None:
        return None
    if isinstance(value, bool):
        return str(value).lower()
    return str(value)


def format_laurent(poly, variable="q"):
    """Human readable form of a Laurent polynomial, e.g. -q^(-1) + 1."""
    if poly.is_zero():
        return "0"
    parts = []
    for e, c in poly.terms():
        power = "" if e == 0 else (variable if e == GRID else "{0}^({1})".format(variable, format_exponent(e)))
        if power and c in (1, -1):
            text = power if c == 1 else "-" + power
        elif power:
            text = "{0}*{1}".format(c, power)
        else:
            text = str(c)
        parts.append(text)
    return " + ".join(parts).replace("+ -", "- ")


def series_payload(series, exponents=None):
    """
    JSON payload of a truncated series.

    :param series: Series to export. -> QSeries
    :param exponents: Optional exp8 values to report explicitly, zero coefficients included. -> List
    :return: order, valuation, the nonzero terms, the requested coefficients and the raw grid form. -> Dict
    """
    payload = dict(
        order=format_exponent(series.order),
        valuation=None if series.is_zero() else format_exponent(series.valuation),
        terms=[dict(exp=format_exponent(e), coeff=str(c)) for e, c in series.terms()],
        raw=series.to_json(),
    )
    if exponents:
        payload["coefficients"] = dict((format_exponent(e), str(series.coefficient(e))) for e in exponents)
    return payload


def laurent_payload(zeta_laurent):
    """Per-key payloads of a ZetaLaurent, keys written as exact t-exponents."""
    return dict(
        order=format_exponent(zeta_laurent.order),
        terms=dict((str(Fraction(key, 2)), series_payload(value)) for key, value in sorted(zeta_laurent.terms.items())),
        raw=zeta_laurent.to_json(),
    )


def check_payload(result, cell_format=None):
    cell = result.cell
    if cell is not None and cell_format is not None:
        cell = cell_format(cell)
    return dict(passed=bool(result.passed), cell=cell, cells_checked=result.cells_checked, detail=result.detail)


def half_key_cell(cell):
    """(key in 1/2 units, exp8) as exact strings."""
    key, e = cell
    return dict(key=str(Fraction(key, 2)), exp=format_exponent(e))


def t_key_cell(cell):
    key, e = cell
    return dict(key=str(key), exp=format_exponent(e))


def render_csv(columns, rows):
    """CSV text with a header row, every value passed through format_number."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow(["" if value is None else format_number(value) for value in row])
    return buffer.getvalue()


def render_pretty(payload):
    return yaml_dump(payload, default_flow_style=False, sort_keys=True)
