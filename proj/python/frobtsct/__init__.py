"""Trivial source character tables of (C_p x C_p) : C_m Frobenius groups.

Thin wrapper over the C++ core: tables come back as plain dicts (parsed from
the canonical JSON the command-line tool emits), character values as exact
atom strings like "E(8)^3" or "3/2".
"""

import json as _json

from ._core import Cyclotomic, render, verify_ok, __version__

__all__ = [
    "Cyclotomic",
    "render",
    "verify_ok",
    "chartab",
    "decomposition",
    "projectives",
    "tsct",
    "verify",
    "__version__",
]


def _doc(p, m, case, target, oracle_cap=2000):
    return _json.loads(render(p, m, case, target, "json", oracle_cap))


def chartab(p, m, case):
    """Ordinary character table of (C_p x C_p) : C_m."""
    return _doc(p, m, case, "chartab")


def decomposition(p, m, case):
    """p-decomposition matrix of the group."""
    return _doc(p, m, case, "dec")


def projectives(p, m, case):
    """Table of projective indecomposable characters."""
    return _doc(p, m, case, "proj")


def tsct(p, m, case):
    """Trivial source character table, as blocks T_{i,v}."""
    return _doc(p, m, case, "tsct")


def verify(p, m, case, oracle_cap=2000):
    """Full verification report (dict with "ok" and per-check results)."""
    return _doc(p, m, case, "verify", oracle_cap)
