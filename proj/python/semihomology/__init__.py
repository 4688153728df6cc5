"""Exact homology of semisimplicial, semicubical and augmented modules.

Matrices cross the boundary as strings and come back as ``fractions.Fraction``.
"""

import json
from fractions import Fraction

from ._core import (
    CategoryError,
    FormatError,
    Module,
    ModuleError,
    TransportError,
    direct_sum,
    homology,
    induce,
    parse_module,
    representable,
    restrict_v,
    tor,
    zero,
)
from . import _core

__all__ = [
    "CategoryError",
    "FormatError",
    "Module",
    "ModuleError",
    "TransportError",
    "action",
    "battery",
    "counterexample",
    "direct_sum",
    "homology",
    "induce",
    "load_module",
    "parse_module",
    "representable",
    "restrict_v",
    "tor",
    "weak_equivalence",
    "zero",
]


def action(module, token):
    """Matrix of the generator ``token`` (e.g. ``"cube 1 0 1"``) as Fractions."""
    return [[Fraction(x) for x in row] for row in module.action(token)]


def load_module(path):
    with open(path, encoding="utf-8") as f:
        return parse_module(f.read())


def weak_equivalence(map_document):
    """Verdict for a module map given as a ``semihomology-map/1`` document."""
    if not isinstance(map_document, str):
        map_document = json.dumps(map_document)
    return json.loads(_core.weak_equivalence_json(map_document))


def counterexample():
    return json.loads(_core.counterexample_json())


def battery(seed=1, truncation=5, threads=1):
    return json.loads(_core.battery_json(seed, truncation, threads))
