"""Exact Clebsch-Gordan engine for the Jordanian deformations of sl(2) and su(1,1)."""

import json

from . import _core
from ._core import alpha_table, decomposition, render, verify_sl2

__version__ = _core.__version__

__all__ = [
    "CommandError",
    "alpha_table",
    "cgtable",
    "decompose",
    "decomposition",
    "eigvec",
    "render",
    "run",
    "verify",
    "verify_sl2",
]


class CommandError(Exception):
    def __init__(self, exit_code, message, document=None):
        super().__init__(message)
        self.exit_code = exit_code
        self.document = document


def run(command, family, **options):
    """Same semantics as the jordan-cg CLI; returns the parsed JSON document.

    Rejected input raises ValueError. A failed identity or cross-check raises
    CommandError carrying the document.
    """
    options = {k: v for k, v in options.items() if v is not None}
    code, text, message = _core.run(command, family, options)
    doc = json.loads(text) if text else None
    if code == 2:
        raise ValueError(message)
    if code != 0:
        raise CommandError(code, message, doc)
    return doc


def verify(family, **options):
    return run("verify", family, **options)


def decompose(family, **options):
    return run("decompose", family, **options)


def eigvec(family, **options):
    return run("eigvec", family, **options)


def cgtable(family="sl2", **options):
    return run("cgtable", family, **options)
