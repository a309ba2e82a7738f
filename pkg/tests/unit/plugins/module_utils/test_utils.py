# -*- coding: utf-8 -*-

# Copyright: (c) 2026, Bloch-Okounkov collection maintainers
# GNU General Public License v3.0+ (see LICENSE or https://www.gnu.org/licenses/gpl-3.0.txt)

from __future__ import absolute_import, division, print_function

__metaclass__ = type

import pytest

from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.constants import INF
from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.series import CheckResult, GridError, QSeries, ZetaLaurent
from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.false_theta import laurent
from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.utils import (
    check_payload,
    format_exponent,
    format_laurent,
    format_number,
    half_key_cell,
    laurent_payload,
    parse_exponent,
    render_csv,
    render_pretty,
    series_payload,
    t_key_cell,
)


class TestExponents:
    @pytest.mark.parametrize("value, text", [(28, "7/2"), (-8, "-1"), (1, "1/8"), (7152, "894")])
    def test_format(self, value, text):
        assert format_exponent(value) == text
        assert parse_exponent(text) == value

    def test_exact_series_has_no_order(self):
        assert format_exponent(INF) is None

    @pytest.mark.parametrize("text", ["1/16", "abc", "1/0"])
    def test_unreadable(self, text):
        with pytest.raises(GridError):
            parse_exponent(text)


class TestFormatting:
    def test_laurent_polynomial(self):
        assert format_laurent(laurent({-8: -1, 0: 1})) == "-q^(-1) + 1"
        assert format_laurent(laurent({8: 1, 16: -3})) == "q - 3*q^(2)"
        assert format_laurent(laurent({})) == "0"

    def test_numbers(self):
        assert format_number(True) == "true"
        assert format_number(None) is None

    def test_series_payload(self):
        payload = series_payload(QSeries.from_terms({4: 1, 8: -2}, 24), [4, 12])
        assert payload["order"] == "3"
        assert payload["valuation"] == "1/2"
        assert payload["terms"] == [dict(exp="1/2", coeff="1"), dict(exp="1", coeff="-2")]
        assert payload["coefficients"] == {"1/2": "1", "3/2": "0"}
        assert payload["raw"] == dict(scale=8, valuation=4, order=24, coeffs=["1", "0", "0", "0", "-2"])

    def test_laurent_payload_keys_are_t_exponents(self):
        payload = laurent_payload(ZetaLaurent({-1: QSeries.monomial(1, 1, 16)}, 16))
        assert list(payload["terms"]) == ["-1/2"]
        assert payload["order"] == "2"
        assert payload["raw"] == dict(order=16, terms={"-1": dict(scale=8, valuation=1, order=16, coeffs=["1"])})

    def test_check_payload(self):
        payload = check_payload(CheckResult(False, (-3, 12), 5, None), half_key_cell)
        assert payload == dict(passed=False, cell=dict(key="-3/2", exp="3/2"), cells_checked=5, detail=None)

    def test_integer_t_cell(self):
        assert t_key_cell((-4, 89)) == dict(key="-4", exp="89/8")


class TestRender:
    def test_csv(self):
        assert render_csv(["exp", "coeff"], [("1/2", 1), (None, True)]) == "exp,coeff\n1/2,1\n,true\n"

    def test_pretty_sorts_keys(self):
        text = render_pretty(dict(b=1, a="x"))
        assert text.index("a:") < text.index("b:")
