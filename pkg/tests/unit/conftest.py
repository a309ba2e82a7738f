# -*- coding: utf-8 -*-

# Copyright: (c) 2026, Bloch-Okounkov collection maintainers
# GNU General Public License v3.0+ (see LICENSE or https://www.gnu.org/licenses/gpl-3.0.txt)

from __future__ import absolute_import, division, print_function

__metaclass__ = type

import importlib
import os
import sys
import tempfile

REPO = os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
COLLECTION = ("ansible_collections", "qseries", "bloch_okounkov")


def _collections_root():
    """Directory holding ansible_collections/qseries/bloch_okounkov, linked into a temporary tree for a plain checkout."""
    parts = REPO.split(os.sep)
    if tuple(parts[-3:]) == COLLECTION:
        return os.sep.join(parts[:-3]) or os.sep
    root = tempfile.mkdtemp(prefix="bo-collections-")
    namespace = os.path.join(root, *COLLECTION[:2])
    os.makedirs(namespace)
    os.symlink(REPO, os.path.join(namespace, COLLECTION[2]))
    return root


def _ensure_importable():
    try:
        importlib.import_module("ansible_collections.qseries.bloch_okounkov.plugins.module_utils.constants")
        return
    except ImportError:
        pass
    sys.path.insert(0, _collections_root())
    for name in [name for name in sys.modules if name == "ansible_collections" or name.startswith("ansible_collections.")]:
        del sys.modules[name]
    importlib.invalidate_caches()


_ensure_importable()
