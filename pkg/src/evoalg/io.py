"""JSON algebra files.

An algebra file looks like::

    {
      "field": {"kind": "prime", "p": 5},
      "dim": 2,
      "structure_matrix": [
        ["1", "1"],
        ["4", "4"]
      ]
    }

Row ``i`` of the structure matrix holds the coordinates of ``e_i^2``.
Entries are strings so that rationals stay exact.  :func:`dumps` always
writes scalars in canonical form, so ``dumps(loads(dumps(E))) == dumps(E)``.
"""
from __future__ import annotations

import json
from pathlib import Path

from .algebra import EvolutionAlgebra
from .errors import FieldError, ParseError
from .linalg import Subspace
from .scalars import Field


def field_from_dict(d) -> Field:
    if not isinstance(d, dict) or "kind" not in d:
        raise ParseError("field must be an object with a 'kind'")
    if d["kind"] == "rational":
        return Field()
    if d["kind"] == "prime":
        p = d.get("p")
        if not isinstance(p, int) or isinstance(p, bool):
            raise ParseError("prime field needs an integer 'p'")
        return Field(p)
    raise ParseError(f"unknown field kind {d['kind']!r}")


def field_to_dict(F: Field) -> dict:
    return {"kind": "rational"} if F.p is None else {"kind": "prime", "p": F.p}


def algebra_from_dict(d) -> EvolutionAlgebra:
    if not isinstance(d, dict):
        raise ParseError("algebra file must hold a JSON object")
    for key in ("field", "dim", "structure_matrix"):
        if key not in d:
            raise ParseError(f"missing key {key!r}")
    F = field_from_dict(d["field"])
    n = d["dim"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ParseError("dim must be a non-negative integer")
    M = d["structure_matrix"]
    if not isinstance(M, list) or len(M) != n or any(not isinstance(r, list) or len(r) != n for r in M):
        raise ParseError(f"structure_matrix must be {n} x {n}")
    rows = []
    for r in M:
        row = []
        for a in r:
            if not isinstance(a, str):
                raise ParseError(f"matrix entries must be strings, got {a!r}")
            row.append(F.parse(a))
        rows.append(tuple(row))
    return EvolutionAlgebra(F, tuple(rows))


def algebra_to_dict(E: EvolutionAlgebra) -> dict:
    return {
        "field": field_to_dict(E.field),
        "dim": E.dim,
        "structure_matrix": [[E.field.fmt(a) for a in r] for r in E.matrix],
    }


def loads(text: str) -> EvolutionAlgebra:
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    try:
        return algebra_from_dict(d)
    except FieldError as exc:
        raise ParseError(str(exc)) from exc


def dumps(E: EvolutionAlgebra) -> str:
    d = algebra_to_dict(E)
    rows = [json.dumps(r) for r in d["structure_matrix"]]
    body = ",\n    ".join(rows)
    matrix = "[\n    " + body + "\n  ]" if rows else "[]"
    return (
        "{\n"
        f'  "field": {json.dumps(d["field"])},\n'
        f'  "dim": {d["dim"]},\n'
        f'  "structure_matrix": {matrix}\n'
        "}\n"
    )


def load_algebra(path) -> EvolutionAlgebra:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    return loads(text)


def save_algebra(E: EvolutionAlgebra, path) -> None:
    Path(path).write_text(dumps(E))


def subspace_rows(U: Subspace | None):
    """Canonical RREF rows as lists of scalar strings (None passes through)."""
    return None if U is None else U.to_strings()
