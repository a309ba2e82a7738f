# -*- coding: utf-8 -*-

# Copyright: (c) 2026, Bloch-Okounkov collection maintainers
# GNU General Public License v3.0+ (see LICENSE or https://www.gnu.org/licenses/gpl-3.0.txt)

from __future__ import absolute_import, division, print_function

__metaclass__ = type

import hashlib
import json
import os

import pytest

from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.bo import BOModule, bo_argument_spec, bo_query_spec
from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.constants import RC_CONSISTENCY, RC_QUERY
from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.series import ConsistencyError, PrecisionError, QueryError


class ModuleExit(Exception):
    pass


class ModuleFail(Exception):
    pass


class FakeModule(object):
    """Just enough of AnsibleModule for BOModule."""

    def __init__(self, tmpdir, check_mode=False, **params):
        spec = bo_argument_spec()
        spec.update(bo_query_spec())
        self.params = dict((name, option.get("default")) for name, option in spec.items())
        self.params.update(params)
        self.check_mode = check_mode
        self.tmpdir = tmpdir
        self._debug = False
        self.warnings = []
        self.logged = []

    def warn(self, warning):
        self.warnings.append(warning)

    def log(self, msg):
        self.logged.append(msg)

    def sha1(self, path):
        with open(path, "rb") as handle:
            return hashlib.sha1(handle.read()).hexdigest()

    def exit_json(self, **kwargs):
        raise ModuleExit(kwargs)

    def fail_json(self, **kwargs):
        raise ModuleFail(kwargs)


@pytest.fixture
def fake(tmp_path):
    def build(**params):
        return FakeModule(str(tmp_path), **params)

    return build


class TestParameters:
    def test_non_positive_order(self, fake):
        with pytest.raises(ModuleFail) as failure:
            BOModule(fake(q_order=0))
        assert "q_order" in failure.value.args[0]["msg"]

    def test_negative_window(self, fake):
        with pytest.raises(ModuleFail):
            BOModule(fake(t_window=-1))

    def test_config_keeps_run_settings(self, fake):
        bo = BOModule(fake(q_order=40))
        assert bo.config["q_order"] == 40
        assert bo.config["output"] == "json"


class TestQuery:
    def test_sorted_query(self, fake):
        bo = BOModule(fake(pos=[0, 2], neg=[1]))
        query = bo.validate_query()
        assert query.pos == (2, 0)
        assert bo.proposed == dict(query=dict(pos=[2, 0], neg=[1]))

    def test_collision_fails_with_query_rc(self, fake):
        bo = BOModule(fake(pos=[1], neg=[1]))
        with pytest.raises(ModuleFail) as failure:
            bo.validate_query()
        payload = failure.value.args[0]
        assert payload["rc"] == RC_QUERY
        assert payload["offending_object"] == [1]
        assert "r_j != s_k" in payload["note"]

    def test_allowed_collision_warns(self, fake):
        module = fake(pos=[1], neg=[1], allow_collision=True)
        query = BOModule(module).validate_query()
        assert query.collisions == [1]
        assert module.warnings

    def test_optional_query(self, fake):
        assert BOModule(fake()).validate_query(required=False) is None


class TestFailures:
    @pytest.mark.parametrize(
        "error, rc",
        [(QueryError("bad"), RC_QUERY), (ConsistencyError("differs", dict(cell=3)), RC_CONSISTENCY), (PrecisionError("short"), 1)],
    )
    def test_rc_mapping(self, fake, error, rc):
        bo = BOModule(fake())
        with pytest.raises(ModuleFail) as failure:
            bo.fail_from_exception(error)
        payload = failure.value.args[0]
        assert payload["rc"] == rc
        assert payload["msg"] == error.msg
        assert payload["error_type"] == type(error).__name__


class TestOutput:
    def test_debug_level_returns_logs(self, fake):
        bo = BOModule(fake(output_level="debug"))
        with bo.timed("work"):
            bo.log("step")
        with pytest.raises(ModuleExit) as done:
            bo.exit_json()
        result = done.value.args[0]
        assert "work" in result["timings"]
        assert dict(level="info", message="step") in result["bo_logs"]

    def test_csv_render(self, fake):
        bo = BOModule(fake(output="csv"))
        bo.render(["exp", "coeff"], [("1", "2")])
        assert bo.stdout == "exp,coeff\n1,2\n"

    def test_export_rewrites_only_on_change(self, fake, tmp_path):
        target = tmp_path / "out"
        bo = BOModule(fake(output_dir=str(target)))
        bo.existing = dict(value="1")
        dest = bo.export("payload.json")
        assert bo.result["changed"]
        with open(dest) as handle:
            assert json.load(handle) == dict(value="1")

        again = BOModule(fake(output_dir=str(target)))
        again.existing = dict(value="1")
        again.export("payload.json")
        assert not again.result["changed"]

    def test_export_in_check_mode_leaves_no_file(self, tmp_path):
        target = tmp_path / "missing"
        bo = BOModule(FakeModule(str(tmp_path), check_mode=True, output_dir=str(target)))
        bo.export("payload.json")
        assert bo.result["changed"]
        assert not os.path.exists(str(target))
