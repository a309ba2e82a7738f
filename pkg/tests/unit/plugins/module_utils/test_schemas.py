# -*- coding: utf-8 -*-

# Copyright: (c) 2026, Bloch-Okounkov collection maintainers
# GNU General Public License v3.0+ (see LICENSE or https://www.gnu.org/licenses/gpl-3.0.txt)

from __future__ import absolute_import, division, print_function

__metaclass__ = type

import json
import os
import re

import pytest

from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.series import QSeries, ZetaLaurent
from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.closed_forms import CoeffQuery, f_multisum
from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.false_theta import FalseThetaPair, decompose, decompose_F
from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.asymptotics import asym_G

HERE = os.path.dirname(os.path.abspath(__file__))
FIXTURES = os.path.join(HERE, "fixtures")
SCHEMAS = os.path.join(os.path.dirname(os.path.dirname(os.path.dirname(os.path.dirname(HERE)))), "docs", "schemas")


def load(directory, name):
    with open(os.path.join(directory, name)) as handle:
        return json.load(handle)


def read(directory, name):
    with open(os.path.join(directory, name)) as handle:
        return handle.read()


def assert_qseries(data, schema):
    assert sorted(data) == sorted(schema["required"])
    assert data["scale"] == schema["properties"]["scale"]["const"]
    pattern = re.compile(schema["properties"]["coeffs"]["items"]["pattern"])
    assert all(pattern.match(value) for value in data["coeffs"])


class TestGoldenFiles:
    def test_series_is_byte_exact(self):
        series = f_multisum([0], 11)
        assert read(FIXTURES, "f_single_zero.json") == json.dumps(series.to_json(), sort_keys=True) + "\n"
        assert QSeries.from_json(load(FIXTURES, "f_single_zero.json")) == series

    def test_single_index_pairs(self):
        golden = load(FIXTURES, "false_theta_n1.json")
        assert sorted(golden, key=int) == [str(r) for r in range(11)]
        for r in range(11):
            pair = decompose_F([r])
            assert pair.to_json() == golden[str(r)]
            assert FalseThetaPair.from_json(golden[str(r)]) == pair
        assert read(FIXTURES, "false_theta_n1.json") == json.dumps(dict((str(r), decompose_F([r]).to_json()) for r in range(11)), sort_keys=True) + "\n"


class TestSchemas:
    def test_series(self):
        schema = load(SCHEMAS, "qseries.json")
        assert_qseries(QSeries.from_terms({4: 1, 12: -3}, 40).to_json(), schema)
        exact = QSeries.zero().to_json()
        assert sorted(exact) == sorted(schema["required"])
        assert exact["order"] is None and exact["valuation"] is None

    def test_zeta_laurent(self):
        schema = load(SCHEMAS, "zeta_laurent.json")
        series_schema = load(SCHEMAS, "qseries.json")
        data = ZetaLaurent({-3: QSeries.monomial(9, -1, 24), 1: QSeries.monomial(1, 1, 24)}, 24).to_json()
        assert sorted(data) == sorted(schema["required"])
        key_pattern = re.compile(schema["properties"]["terms"]["propertyNames"]["pattern"])
        assert sorted(data["terms"]) == ["-3", "1"]
        for key, value in data["terms"].items():
            assert key_pattern.match(key)
            assert_qseries(value, series_schema)

    @pytest.mark.parametrize("pos, neg", [([2], [0]), ([3, 1], [0]), ([], [2, 0])])
    def test_false_theta_pair(self, pos, neg):
        schema = load(SCHEMAS, "false_theta_pair.json")
        items = schema["definitions"]["polynomial"]["items"]["items"]
        numerator, denominator = re.compile(items[1]["pattern"]), re.compile(items[2]["pattern"])
        data = decompose(CoeffQuery.build(pos, neg)).to_json()
        assert sorted(data) == sorted(schema["required"])
        for rows in data.values():
            assert [row[0] for row in rows] == sorted(row[0] for row in rows)
            for exponent, num, den in rows:
                assert isinstance(exponent, int)
                assert numerator.match(num) and denominator.match(den)

    def test_asym_expansion(self):
        schema = load(SCHEMAS, "asym_expansion.json")
        coeff_schema = schema["properties"]["coeffs"]["items"]
        data = asym_G(CoeffQuery.build([0], [1]), 2).to_json()
        assert sorted(data) == sorted(schema["required"])
        assert len(data["coeffs"]) == data["K"] + 1
        for value in data["coeffs"]:
            assert sorted(value) == sorted(coeff_schema["required"])
            assert re.match(coeff_schema["properties"]["denominator"]["pattern"], value["denominator"])
        assert data["coeffs"][0] == dict(numerator="1", denominator="4")
