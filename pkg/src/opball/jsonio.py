"""JSON documents for spaces, operators, and verdicts.

All numbers travel as rational strings "p" or "p/q"; anything else is a
schema error. Output serialization is deterministic (sorted keys, fixed
separators) so identical inputs give byte-identical reports.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .extremality import ExtremalityVerdict
from .linalg import Mat, RationalFormatError, Vec, format_rational, parse_rational
from .operators import LinearOperator
from .polytopes import SymmetricPolytope, from_vertices
from .spaces import (
    L1,
    L2,
    LINF,
    POLYTOPAL,
    NormedSpace,
    l1_space,
    l2_space,
    linf_space,
    polytopal_space,
)


class SchemaError(ValueError):
    """Input document does not match the expected schema."""


_P_TO_KIND = {"1": L1, "2": L2, "inf": LINF}
_KIND_TO_P = {v: k for k, v in _P_TO_KIND.items()}


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise SchemaError(message)


def _parse_vector(entries, dim: int, what: str) -> Vec:
    _require(isinstance(entries, list) and len(entries) == dim, f"{what}: expected {dim} entries")
    try:
        return tuple(parse_rational(e) for e in entries)
    except RationalFormatError as exc:
        raise SchemaError(f"{what}: {exc}") from exc


def space_from_json(doc) -> NormedSpace:
    _require(isinstance(doc, dict), "space: expected an object")
    dim = doc.get("dim")
    _require(isinstance(dim, int) and dim >= 1, "space: dim must be a positive integer")
    kind = doc.get("kind")
    if kind == "lp":
        p = doc.get("p")
        _require(p in _P_TO_KIND, 'space: p must be "1", "2", or "inf"')
        return NormedSpace(_P_TO_KIND[p], dim)
    if kind == "polytopal":
        vertices = doc.get("vertices")
        _require(isinstance(vertices, list) and vertices, "space: vertices must be a nonempty list")
        points = [_parse_vector(v, dim, "space vertex") for v in vertices]
        return polytopal_space(from_vertices(points))
    raise SchemaError('space: kind must be "lp" or "polytopal"')


def space_to_json(space: NormedSpace) -> dict:
    if space.kind == POLYTOPAL:
        return {
            "dim": space.dim,
            "kind": "polytopal",
            "vertices": [[format_rational(x) for x in v] for v in space.ball.vertices],
        }
    return {"dim": space.dim, "kind": "lp", "p": _KIND_TO_P[space.kind]}


def operator_from_json(doc) -> LinearOperator:
    _require(isinstance(doc, dict), "operator: expected an object")
    _require("domain" in doc and "codomain" in doc and "matrix" in doc,
             "operator: needs domain, codomain, and matrix")
    domain = space_from_json(doc["domain"])
    codomain = space_from_json(doc["codomain"])
    rows = doc["matrix"]
    _require(isinstance(rows, list) and len(rows) == codomain.dim,
             f"operator: matrix must have {codomain.dim} rows")
    matrix = tuple(_parse_vector(r, domain.dim, "operator matrix row") for r in rows)
    return LinearOperator(matrix, domain, codomain)


def operator_to_json(T: LinearOperator) -> dict:
    return {
        "domain": space_to_json(T.domain),
        "codomain": space_to_json(T.codomain),
        "matrix": [[format_rational(x) for x in row] for row in T.matrix],
    }


def _matrix_to_json(M: Mat | None):
    if M is None:
        return None
    return [[format_rational(x) for x in row] for row in M]


def verdict_to_json(verdict: ExtremalityVerdict) -> dict:
    att = verdict.evidence
    return {
        "decision": verdict.decision,
        "method": verdict.method,
        "operator_norm": format_rational(att.operator_norm.value),
        "norm_squared": att.operator_norm.squared,
        "attaining": [[format_rational(x) for x in v] for v in att.attaining_extremes],
        "span_rank": att.span_rank,
        "witness": _matrix_to_json(verdict.witness),
    }


def dumps(doc) -> str:
    """Deterministic serialization: sorted keys, fixed separators, newline."""
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"
