"""Crooked-graph constructions of triangle-free diameter-2 graphs, with exact certification."""

import json as _json

from . import _core
from ._core import (
    FieldCtx,
    FunctionTable,
    Graph,
    build_crooked_graph,
    build_w3,
    build_w5,
    build_w7,
    fixture,
    is_apn,
    is_crooked,
    legendre,
    make_field,
    tabulate_power_map,
)

__all__ = [
    "FieldCtx",
    "FunctionTable",
    "Graph",
    "build_crooked_graph",
    "build_w3",
    "build_w5",
    "build_w7",
    "certify",
    "check_wood",
    "fixture",
    "is_apn",
    "is_crooked",
    "legendre",
    "make_field",
    "tabulate_power_map",
    "turan_report",
]


def check_wood(graph, t, workers=1):
    """Wood-class certificate of ``graph`` for parameter ``t`` as a dict."""
    return _json.loads(_core.check_wood_json(graph, t, workers))


def certify(family, **params):
    """Run the full certification battery; returns ``(certificate, exit_code)``.

    Parameter errors raise ``ValueError``.
    """
    cert, code = _core.certify_json(family, params)
    return (_json.loads(cert) if cert else None), code


def turan_report(e_values, workers=1):
    return _json.loads(_core.turan_report_json(list(e_values), workers))
