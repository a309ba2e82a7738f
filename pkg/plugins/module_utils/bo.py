# -*- coding: utf-8 -*-

# Copyright: (c) 2026, Bloch-Okounkov collection maintainers
# GNU General Public License v3.0+ (see LICENSE or https://www.gnu.org/licenses/gpl-3.0.txt)

from __future__ import absolute_import, division, print_function

__metaclass__ = type

import os
import shutil
import tempfile
import time
from contextlib import contextmanager

from ansible.module_utils.basic import env_fallback, json
from ansible.module_utils._text import to_bytes, to_native
from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.constants import (
    COLLISION_NOTE,
    OUTPUT_DIR_ENV,
    OUTPUT_FORMATS,
    OUTPUT_LEVELS,
    RC_CONSISTENCY,
    RC_QUERY,
    RUN_CONFIG_DEFAULTS,
)
from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.series import BOError, ConsistencyError, QueryError
from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.closed_forms import CoeffQuery
from ansible_collections.qseries.bloch_okounkov.plugins.module_utils.utils import render_csv, render_pretty


def bo_argument_spec():
    return dict(
        q_order=dict(type="int", default=RUN_CONFIG_DEFAULTS["q_order"]),
        t_window=dict(type="int", default=RUN_CONFIG_DEFAULTS["t_window"]),
        scan_limit=dict(type="int", default=RUN_CONFIG_DEFAULTS["scan_limit"]),
        precision=dict(type="int", default=RUN_CONFIG_DEFAULTS["precision"]),
        shards=dict(type="int", default=RUN_CONFIG_DEFAULTS["shards"]),
        output=dict(type="str", default=RUN_CONFIG_DEFAULTS["output"], choices=OUTPUT_FORMATS),
        output_level=dict(type="str", default="normal", choices=OUTPUT_LEVELS),
        output_dir=dict(type="path", fallback=(env_fallback, OUTPUT_DIR_ENV)),
    )


def bo_query_spec():
    return dict(
        pos=dict(type="list", elements="int", default=[]),
        neg=dict(type="list", elements="int", default=[]),
        allow_collision=dict(type="bool", default=False),
    )


def write_file(module, dest, content, tmpsrc=None):
    """
    Copy content to dest through a temporary file, only when the checksum differs.

    :return: True when dest was (or in check mode would be) rewritten. -> Bool
    """
    if tmpsrc is None:
        fd, tmpsrc = tempfile.mkstemp(dir=module.tmpdir)
        f = os.fdopen(fd, "wb")
        try:
            f.write(to_bytes(content))
        except Exception as e:
            f.close()
            os.remove(tmpsrc)
            module.fail_json(msg="Failed to create temporary content file: {0}".format(to_native(e)))
        f.close()

    checksum_src = module.sha1(tmpsrc)
    checksum_dest = None

    if os.path.exists(dest):
        if not os.access(dest, os.W_OK):
            os.remove(tmpsrc)
            module.fail_json(msg="Destination '{0}' not writable".format(dest))
        if not os.access(dest, os.R_OK):
            os.remove(tmpsrc)
            module.fail_json(msg="Destination '{0}' not readable".format(dest))
        checksum_dest = module.sha1(dest)
    elif not os.access(os.path.dirname(dest) or ".", os.W_OK):
        os.remove(tmpsrc)
        module.fail_json(msg="Destination dir '{0}' not writable".format(os.path.dirname(dest)))

    changed = checksum_src != checksum_dest
    if changed and not module.check_mode:
        try:
            shutil.copyfile(tmpsrc, dest)
        except Exception as e:
            os.remove(tmpsrc)
            module.fail_json(msg="failed to copy {0} to {1}: {2}".format(tmpsrc, dest, to_native(e)))

    os.remove(tmpsrc)
    return changed


class BOModule(object):
    def __init__(self, module):
        self.module = module
        self.params = module.params
        self.result = dict(changed=False)

        # normal output
        self.existing = dict()
        self.stdout = None

        # info output
        self.proposed = dict()

        # debug output
        self.bo_logs = list()
        self.timings = dict()

        if self.module._debug:
            self.module.warn("Enable debug output because ANSIBLE_DEBUG was set.")
            self.params["output_level"] = "debug"

        for name in ("q_order", "shards", "precision"):
            if self.params.get(name) is not None and self.params.get(name) < 1:
                self.fail_json(msg="Parameter '{0}' must be a positive integer, got {1}".format(name, self.params.get(name)))
        if self.params.get("t_window") is not None and self.params.get("t_window") < 0:
            self.fail_json(msg="Parameter 't_window' must be non-negative, got {0}".format(self.params.get("t_window")))

    def log(self, message, level="info"):
        """Keep a log line for debug output and forward it to the system log."""
        self.bo_logs.append(dict(level=level, message=message))
        self.module.log("[{0}] {1}".format(level, message))

    @contextmanager
    def timed(self, label):
        start = time.perf_counter()
        try:
            yield
        finally:
            self.timings[label] = round(time.perf_counter() - start, 6)
            self.log("{0} finished in {1}s".format(label, self.timings[label]), level="debug")

    @property
    def config(self):
        return dict((key, self.params.get(key)) for key in RUN_CONFIG_DEFAULTS)

    def validate_query(self, required=True):
        """Build the CoeffQuery from pos/neg, failing with rc 2 on a malformed request."""
        pos = self.params.get("pos") or []
        neg = self.params.get("neg") or []
        if not pos and not neg and not required:
            return None
        try:
            query = CoeffQuery.build(pos, neg, allow_collision=self.params.get("allow_collision"))
        except QueryError as error:
            self.fail_from_exception(error)
        if query.collisions:
            self.module.warn("Computing colliding indices {0} literally. {1}".format(query.collisions, COLLISION_NOTE))
        self.proposed = dict(query=query.to_json())
        self.log("query pos={0} neg={1}".format(list(query.pos), list(query.neg)))
        return query

    def fail_from_exception(self, error):
        """Map library errors to the failure payload, rc 2 for queries and rc 3 for consistency failures."""
        if isinstance(error, QueryError):
            rc = RC_QUERY
        elif isinstance(error, ConsistencyError):
            rc = RC_CONSISTENCY
        else:
            rc = 1
        kwargs = dict(rc=rc, error_type=type(error).__name__)
        if isinstance(error, BOError) and error.obj is not None:
            kwargs["offending_object"] = error.obj
        if isinstance(error, QueryError):
            kwargs["note"] = COLLISION_NOTE
        self.fail_json(msg=to_native(error.msg if isinstance(error, BOError) else error), **kwargs)

    def render(self, columns=None, rows=None):
        """Fill stdout for the csv and pretty output formats."""
        output = self.params.get("output")
        if output == "csv" and columns is not None:
            self.stdout = render_csv(columns, rows or [])
        elif output == "pretty":
            self.stdout = render_pretty(self.existing)

    def export(self, name, content=None):
        """Write the payload (or given text) to output_dir/name when an output directory is set."""
        output_dir = self.params.get("output_dir")
        if not output_dir:
            return None
        if content is None:
            content = json.dumps(self.existing, sort_keys=True, indent=2) + "\n"
        dest = os.path.join(output_dir, name)
        if not os.path.isdir(output_dir):
            if self.module.check_mode:
                self.result["changed"] = True
                return dest
            os.makedirs(output_dir)
        if write_file(self.module, dest, content):
            self.result["changed"] = True
        self.result["dest"] = dest
        return dest

    def exit_json(self, **kwargs):
        """Custom written method to exit from module."""
        if self.stdout:
            self.result["stdout"] = self.stdout

        if self.params.get("output_level") in ("debug", "info"):
            self.result["config"] = self.config
            self.result["proposed"] = self.proposed

        # Return the gory details when we need it
        if self.params.get("output_level") == "debug":
            self.result["bo_logs"] = self.bo_logs
            self.result["timings"] = self.timings

        self.result["current"] = self.existing

        self.result.update(**kwargs)
        self.module.exit_json(**self.result)

    def fail_json(self, msg, **kwargs):
        """Custom written method to return info on failure."""
        if self.stdout:
            self.result["stdout"] = self.stdout

        if self.params.get("output_level") in ("debug", "info"):
            self.result["config"] = self.config
            self.result["proposed"] = self.proposed

        if self.params.get("output_level") == "debug":
            self.result["bo_logs"] = self.bo_logs
            self.result["timings"] = self.timings

        self.result["current"] = self.existing

        self.result.update(**kwargs)
        self.module.fail_json(msg=msg, **self.result)
