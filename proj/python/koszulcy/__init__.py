"""Exact computations with quadratic algebras, their duals and Calabi-Yau checks."""

import json
from fractions import Fraction

from ._core import (
    DEFAULT_WORD_CAP,
    DimensionError,
    KoszulcyError,
    ParseError,
    PreconditionError,
    ResourceGuardError,
    commands,
)
from . import _core

__all__ = [
    "DEFAULT_WORD_CAP",
    "DimensionError",
    "KoszulcyError",
    "ParseError",
    "PreconditionError",
    "ResourceGuardError",
    "canonicalize",
    "commands",
    "dual",
    "hilbert",
    "nakayama",
    "run",
]


def _text(document):
    if isinstance(document, (dict, list)):
        return json.dumps(document)
    return document


def run(command, document, *, max_degree=5, seed=0, sigma="nakayama", word_cap=DEFAULT_WORD_CAP):
    """Run a CLI command; returns (exit_code, report dict)."""
    code, body = _core.run(command, _text(document), max_degree, seed, sigma, word_cap)
    return code, json.loads(body)


def canonicalize(document):
    return _core.canonicalize(_text(document))


def dual(document):
    return json.loads(_core.dual(_text(document)))


def hilbert(document, max_degree=5, word_cap=DEFAULT_WORD_CAP):
    return _core.hilbert(_text(document), max_degree, word_cap)


def nakayama(document, bound=5):
    return [[Fraction(x) for x in row] for row in _core.nakayama(_text(document), bound)]
