"""Exact Toledo constants and period-domain lifting checks."""

import json

from . import _core
from ._core import DivisionByZero, FieldElem, ParseError, PreconditionError, run_cli, selftest

__version__ = _core.__version__


def _strs(v):
    return [str(x) for x in v]


def pullback(embedding, n=2):
    return json.loads(_core.pullback_json(embedding, n))


def classify(embedding, n=2):
    return json.loads(_core.classify_json(embedding, n))


def twistor_check(a):
    return json.loads(_core.twistor_check_json(_strs(a)))


def holomorphy_check(a):
    return json.loads(_core.holomorphy_check_json(_strs(a)))


def horizontality(v0, w):
    return json.loads(_core.horizontality_json(_strs(v0), _strs(w)))


def period_triple(v):
    return json.loads(_core.period_triple_json(_strs(v)))


__all__ = [
    "DivisionByZero",
    "FieldElem",
    "ParseError",
    "PreconditionError",
    "classify",
    "holomorphy_check",
    "horizontality",
    "period_triple",
    "pullback",
    "run_cli",
    "selftest",
    "twistor_check",
]
