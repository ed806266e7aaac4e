"""Seifert matrix S-calculus, link diagrams and Milnor invariants.

Matrices, move sequences, diagrams and bundles are plain dicts in the same
JSON layout the ``gbl`` command-line tool reads and writes (1-based indices).
"""

import json
import os
from pathlib import Path

_packaged_catalog = Path(__file__).resolve().parent / "catalog"
if "GBL_CATALOG_DIR" not in os.environ and (_packaged_catalog / "manifest.json").exists():
    os.environ["GBL_CATALOG_DIR"] = str(_packaged_catalog)

from . import _core
from ._core import GblError

__version__ = _core.__version__

__all__ = [
    "GblError",
    "catalog_entry",
    "catalog_names",
    "certify",
    "good_basis",
    "homotopy",
    "ht_plus",
    "l_beta_bundle",
    "mu_bar",
    "normalize",
    "reduce_to_null",
    "replay",
    "validate",
    "whitehead_double_matrix",
]


def _text(doc):
    return doc if isinstance(doc, str) else json.dumps(doc)


def validate(matrix):
    return json.loads(_core.validate(_text(matrix)))


def whitehead_double_matrix(components, eps):
    return json.loads(_core.whitehead_double_matrix(components, list(eps)))


def reduce_to_null(matrix, budget=1_000_000):
    """Search result dict: status is "found", "exhausted" or "budget-exceeded"."""
    return json.loads(_core.reduce_to_null(_text(matrix), budget))


def good_basis(matrix):
    """Staircase ordering of the basis pairs, or None."""
    found = _core.good_basis(_text(matrix))
    return None if found is None else json.loads(found)


def replay(moves):
    """End matrix of a move sequence {"start": ..., "moves": [...]}."""
    return json.loads(_core.replay(_text(moves)))


def normalize(moves):
    return json.loads(_core.normalize(_text(moves)))


def mu_bar(diagram, index, depth=0):
    """Milnor invariant for a 1-based multi-index such as "123" or [1, 2, 3]."""
    if isinstance(index, str):
        index = [int(c) for c in index.replace(",", "").replace(" ", "")]
    return json.loads(_core.mu_bar(_text(diagram), list(index), depth))


def homotopy(diagram, depth=0):
    return json.loads(_core.homotopy(_text(diagram), depth))


def ht_plus(diagram, sublink=(), depth=0):
    return json.loads(_core.ht_plus(_text(diagram), list(sublink), depth))


def certify(bundle, depth=0, budget=1_000_000):
    return json.loads(_core.certify(_text(bundle), depth, budget))


def l_beta_bundle(beta):
    return json.loads(_core.l_beta_bundle(_text(beta)))


def catalog_names():
    return list(_core.catalog_names())


def catalog_entry(name, directory=""):
    return json.loads(_core.catalog_entry(name, str(directory)))
