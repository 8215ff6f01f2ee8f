"""Blocks, characters and category-level data for the Lie superalgebras F(4) and G(3).

Thin wrapper over the C++ extension: structured results are decoded from the
same JSON documents (schema 1) the ``fg`` command-line tool prints.  Rationals
are passed as strings such as ``"5/2"``; weights as text such as
``"(3,2,1|2)"``; blocks as ``"1,1"`` (F4) or ``"3"`` (G3).
"""

import json

from . import _fg
from ._fg import SCHEMA, ConsistencyError, atypicality, block_of, is_dominant, is_dominant_kac, sdim, weyl_order

__all__ = [
    "SCHEMA",
    "ConsistencyError",
    "atypicality",
    "block_of",
    "blocks_list",
    "bwb",
    "character",
    "is_dominant",
    "is_dominant_kac",
    "projectives",
    "quiver",
    "quiver_dot",
    "relations",
    "root_system",
    "sdim",
    "translate",
    "verify",
    "weight_character",
    "weyl_order",
]


def _c(x):
    return str(x)


def root_system(algebra):
    return json.loads(_fg.root_system(algebra))


def blocks_list(algebra, block, c_min=-3, c_max=6):
    return json.loads(_fg.blocks_list(algebra, block, _c(c_min), _c(c_max)))


def character(algebra, block, c, method="direct", with_terms=True):
    return json.loads(_fg.character(algebra, block, _c(c), method, with_terms))


def weight_character(algebra, weight, method="direct", with_terms=True):
    return json.loads(_fg.weight_character(algebra, weight, method, with_terms))


def quiver(algebra, block, c_max=6):
    return json.loads(_fg.quiver(algebra, block, _c(c_max), "json"))


def quiver_dot(algebra, block, c_max=6):
    return _fg.quiver(algebra, block, _c(c_max), "dot")


def relations(algebra, block, c_max=6):
    return json.loads(_fg.relations(algebra, block, _c(c_max)))


def bwb(algebra, block, c_max=6):
    return json.loads(_fg.bwb(algebra, block, _c(c_max)))


def projectives(algebra, block, c_max=6):
    return json.loads(_fg.projectives(algebra, block, _c(c_max)))


def translate(algebra, source, c_max=6):
    return json.loads(_fg.translate(algebra, source, _c(c_max)))


def verify(suite="all"):
    """Run a cross-validation suite; returns (passed, report text)."""
    return _fg.verify(suite)
