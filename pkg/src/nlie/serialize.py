"""JSON formats for algebras, subspaces and reports.

Algebra file::

    {"arity": n, "dim": d, "basis": ["e1", ...],
     "brackets": [{"args": [i1, ..., in], "value": {"j": "p/q", ...}}]}

Indices are zero-based, ``args`` strictly increasing, omitted coordinates are
zero.  Subspace file: ``{"ambient": d, "rows": [["1", "0", "-1/2"], ...]}``.
Rationals are written as ``"p"`` or ``"p/q"``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from .algebra import NLieAlgebra, StructureError
from .linalg import Subspace, format_scalar, parse_scalar, span


class FormatError(ValueError):
    """Input that does not follow the file formats."""


def sparse_vector_to_json(v: Sequence) -> dict:
    return {str(j): format_scalar(x) for j, x in enumerate(v) if x}


def sparse_vector_from_json(obj, d: int) -> tuple:
    if not isinstance(obj, dict):
        raise FormatError(f"expected an object of coordinates, got {obj!r}")
    out = [Fraction(0)] * d
    for key, val in obj.items():
        try:
            j = int(key)
        except (TypeError, ValueError):
            raise FormatError(f"bad coordinate index {key!r}") from None
        if not 0 <= j < d:
            raise FormatError(f"coordinate index {j} out of range for dimension {d}")
        try:
            out[j] = parse_scalar(val)
        except ValueError as exc:
            raise FormatError(str(exc)) from None
    return tuple(out)


def _require_int(data: dict, key: str) -> int:
    val = data.get(key)
    if not isinstance(val, int) or isinstance(val, bool):
        raise FormatError(f"field {key!r} must be an integer")
    return val


def algebra_from_json(data, name: str = "") -> NLieAlgebra:
    if not isinstance(data, dict):
        raise FormatError("algebra file must contain a JSON object")
    n = _require_int(data, "arity")
    d = _require_int(data, "dim")
    basis = data.get("basis", [])
    if not isinstance(basis, list) or not all(isinstance(b, str) for b in basis):
        raise FormatError("field 'basis' must be a list of strings")
    entries = data.get("brackets", [])
    if not isinstance(entries, list):
        raise FormatError("field 'brackets' must be a list")
    structure = {}
    for entry in entries:
        if not isinstance(entry, dict) or "args" not in entry:
            raise FormatError(f"bad bracket entry {entry!r}")
        args = entry["args"]
        if not isinstance(args, list) or not all(isinstance(i, int) and not isinstance(i, bool) for i in args):
            raise FormatError(f"bracket args must be a list of integers, got {args!r}")
        key = tuple(args)
        if key in structure:
            raise FormatError(f"duplicate bracket entry for args {list(key)}")
        structure[key] = sparse_vector_from_json(entry.get("value", {}), d)
    try:
        return NLieAlgebra(n, d, structure, tuple(basis), name)
    except StructureError as exc:
        raise FormatError(str(exc)) from None


def algebra_to_json(g: NLieAlgebra) -> dict:
    return {
        "arity": g.arity,
        "dim": g.dim,
        "basis": list(g.basis_names),
        "brackets": [
            {"args": list(k), "value": sparse_vector_to_json(v)} for k, v in g.structure.items()
        ],
    }


def _read_json(path) -> object:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None


def load_algebra(path) -> NLieAlgebra:
    return algebra_from_json(_read_json(path), name=str(path))


def subspace_from_json(data, d: int | None = None) -> Subspace:
    if not isinstance(data, dict):
        raise FormatError("subspace file must contain a JSON object")
    ambient = _require_int(data, "ambient")
    if d is not None and ambient != d:
        raise FormatError(f"subspace lives in dimension {ambient}, algebra has dimension {d}")
    rows = data.get("rows", [])
    if not isinstance(rows, list):
        raise FormatError("field 'rows' must be a list")
    vecs = []
    for row in rows:
        if not isinstance(row, list) or len(row) != ambient:
            raise FormatError(f"row {row!r} does not have length {ambient}")
        try:
            vecs.append([parse_scalar(x) for x in row])
        except ValueError as exc:
            raise FormatError(str(exc)) from None
    return span(vecs, ambient)


def subspace_to_json(s: Subspace) -> dict:
    return {"ambient": s.ambient_dim, "rows": [[format_scalar(x) for x in r] for r in s.basis]}


def load_subspace(path, d: int | None = None) -> Subspace:
    return subspace_from_json(_read_json(path), d)


def dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)
