"""Interval decomposition and homological algebra for continuous type-A quivers.

Every function takes JSON documents (as strings or plain Python objects) and
returns decoded JSON.
"""

import json as _json

from . import _core
from ._core import InputError, InternalError

__all__ = [
    "InputError",
    "InternalError",
    "decompose",
    "scramble",
    "is_indecomposable",
    "hom_dim",
    "ext_dim",
    "present",
    "projectives",
    "projectives_text",
    "ar",
]


def _text(doc):
    return doc if isinstance(doc, str) else _json.dumps(doc)


def decompose(document):
    return _json.loads(_core.decompose(_text(document)))


def scramble(document, seed):
    return _json.loads(_core.scramble(_text(document), seed))


def is_indecomposable(document):
    return _core.is_indecomposable(_text(document))


def hom_dim(orientation, i, j):
    return _core.hom_dim(_text(orientation), i, j)


def ext_dim(orientation, v, w):
    return _core.ext_dim(_text(orientation), v, w)


def present(orientation, interval, field="Q"):
    return _json.loads(_core.present(_text(orientation), interval, field))


def projectives(orientation, injective=False, range=None):
    return _json.loads(_core.projectives(_text(orientation), injective, range))


def projectives_text(orientation, injective=False):
    return _core.projectives_text(_text(orientation), injective)


def ar(orientation, interval, starting=False, verify=True):
    return _json.loads(_core.ar(_text(orientation), interval, starting, verify))
