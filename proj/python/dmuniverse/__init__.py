"""Verification and classification engine for the Deligne-Mostow pair universe."""

import json

from . import _dmu
from ._dmu import DmuError, discriminant

__all__ = [
    "DmuError",
    "catalog",
    "certify",
    "check",
    "discriminant",
    "hasse",
    "polystable",
    "reduce",
    "run_cli",
    "transversality",
    "verify",
]


def catalog(field="all"):
    """Catalog rows as dicts, in table order."""
    return json.loads(_dmu.catalog_json(field))


def verify(mode="strict"):
    """Full audit report."""
    return json.loads(_dmu.verify_json(mode))


def check(weights, s):
    """INT, Sigma-INT and (T) for weights given as "p/q" strings and a 1-based S."""
    return json.loads(_dmu.conditions_json([str(w) for w in weights], list(s)))


def polystable(row_id):
    return json.loads(_dmu.polystable_json(row_id))


def transversality(m):
    return json.loads(_dmu.transversality_json(m))


def certify(row_id):
    return json.loads(_dmu.certify_json(row_id))


def hasse(mode="strict", field="all", int_only=False):
    return json.loads(_dmu.hasse_json(mode, field, int_only))


def reduce(row_id, mode="strict"):
    return json.loads(_dmu.reduce_json(row_id, mode))


def run_cli(args):
    """Runs the command line in-process; returns (exit_code, stdout, stderr)."""
    return _dmu.run_cli(list(args))
