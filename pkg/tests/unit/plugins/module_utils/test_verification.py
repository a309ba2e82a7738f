# -*- coding: utf-8 -*-

# Copyright: (c) 2026, Bloch-Okounkov collection maintainers
# GNU General Public License v3.0+ (see LICENSE or https://www.gnu.org/licenses/gpl-3.0.txt)

from __future__ import absolute_import, division, print_function

__metaclass__ = type

import pytest

from ansible_collections.qseries.bloch_okounkov.plugins.module_utils import verification
from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.constants import GOLDEN_EXAMPLES, VERIFY_PROPERTIES
from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.series import ConsistencyError, QSeries, exp8


class TestSuite:
    @pytest.mark.parametrize("name", VERIFY_PROPERTIES)
    def test_property_holds(self, name):
        (result,) = verification.verify([name])
        assert result.name == name
        assert result.passed, result.detail

    def test_results_follow_suite_order(self):
        results = verification.verify(["euler_identities", "order_propagation"])
        assert [result.name for result in results] == ["order_propagation", "euler_identities"]

    def test_every_property_has_a_check(self):
        assert sorted(verification.PROPERTY_CHECKS) == sorted(VERIFY_PROPERTIES)

    def test_library_error_marks_the_property_failed(self, monkeypatch):
        def broken(shards):
            raise ConsistencyError("broken identity")

        monkeypatch.setitem(verification.PROPERTY_CHECKS, "euler_identities", broken)
        (result,) = verification.verify(["euler_identities"])
        assert not result.passed
        assert result.detail == dict(error="broken identity")

    def test_accuracy_detail_names_each_query(self):
        (result,) = verification.verify(["order_of_accuracy"])
        assert sorted(result.detail["orders"]) == ["[0]/[1]", "[0]/[]", "[1, 0]/[]"]

    def test_numeric_agreement_catches_a_wrong_path(self, monkeypatch):
        monkeypatch.setattr(verification, "g_multisum", lambda query, order: QSeries.zero(exp8(order)))
        (result,) = verification.verify(["numeric_agreement"])
        assert not result.passed
        assert result.detail["query"] == dict(pos=[0], neg=[])


class TestGoldenExamples:
    @pytest.mark.parametrize("name", [golden["name"] for golden in GOLDEN_EXAMPLES])
    def test_example_regenerates(self, name):
        (record,) = verification.examples([name])
        assert record["passed"], record["diff"]

    def test_diff_reports_expected_and_actual(self, monkeypatch):
        golden = [dict(name="psi", description="Psi", expected={"1": "1"})]
        monkeypatch.setattr(verification, "GOLDEN_EXAMPLES", golden)
        (record,) = verification.examples()
        assert not record["passed"]
        assert record["diff"] == {"1": dict(expected="1", actual="-1")}
