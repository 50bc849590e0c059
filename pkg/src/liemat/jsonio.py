"""JSON interchange for fields, matrices, subspaces, and algebra maps.

Formats (all exact, text-based scalars):

* field:     {"kind": "Q"} | {"kind": "GF", "p": 5}
             | {"kind": "GFext", "p": 2, "m": 2, "modulus": [1, 1, 1]}
* scalar:    rationals "a/b" or "a"; prime fields a decimal residue;
             extension fields "[c0,c1,...]" in ascending degree
* matrix:    {"field": ..., "rows": r, "cols": c,
              "entries": [[scalar, ...], ...]}  (row-major)
* subspace:  {"ambient": {"field": ..., "rows": r, "cols": c},
              "basis": [matrix, ...]}  (canonical on output; any
             generating set accepted on input)
* twist:     {"kind": "identity"} | {"kind": "frobenius", "e": 1}
* map:       {"n": ..., "field": ..., "twist": ...,
              "images": {"i,j": matrix, ...}}

Schema violations raise :class:`MalformedJSON`.
"""

from __future__ import annotations

import json
from typing import Any

from .errors import MalformedJSON
from .fields import ExtensionField, Field, FieldAutomorphism, PrimeField, Rationals
from .matrices import Matrix
from .recovery import AlgebraMap
from .subspaces import Subspace


def _expect(cond: bool, msg: str) -> None:
    if not cond:
        raise MalformedJSON(msg)


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedJSON(f"invalid JSON: {exc}") from exc


def load_path(path) -> Any:
    with open(path, "r", encoding="utf-8") as fh:
        return loads(fh.read())


# -- fields -------------------------------------------------------------------

def field_to_json(field: Field) -> dict:
    if isinstance(field, Rationals):
        return {"kind": "Q"}
    if isinstance(field, PrimeField):
        return {"kind": "GF", "p": field.p}
    if isinstance(field, ExtensionField):
        return {
            "kind": "GFext",
            "p": field.p,
            "m": field.m,
            "modulus": list(field.modulus),
        }
    raise MalformedJSON(f"unknown field type {type(field).__name__}")


def field_from_json(obj: Any) -> Field:
    _expect(isinstance(obj, dict) and "kind" in obj, "field must be an object with 'kind'")
    kind = obj["kind"]
    try:
        if kind == "Q":
            return Rationals()
        if kind == "GF":
            return PrimeField(int(obj["p"]))
        if kind == "GFext":
            modulus = obj.get("modulus")
            return ExtensionField(
                int(obj["p"]),
                int(obj["m"]),
                None if modulus is None else [int(c) for c in modulus],
            )
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedJSON(f"bad field descriptor: {exc}") from exc
    raise MalformedJSON(f"unknown field kind {kind!r}")


def parse_field_flag(text: str) -> Field:
    """CLI shorthand: q | gf:p | gfext:p:m[:c0,c1,...,cm]."""
    parts = text.strip().lower().split(":")
    try:
        if parts[0] == "q" and len(parts) == 1:
            return Rationals()
        if parts[0] == "gf" and len(parts) == 2:
            return PrimeField(int(parts[1]))
        if parts[0] == "gfext" and len(parts) in (3, 4):
            modulus = None
            if len(parts) == 4:
                modulus = [int(c) for c in parts[3].split(",")]
            return ExtensionField(int(parts[1]), int(parts[2]), modulus)
    except ValueError as exc:
        raise MalformedJSON(f"bad field flag {text!r}: {exc}") from exc
    raise MalformedJSON(f"bad field flag {text!r}")


# -- automorphisms --------------------------------------------------------------

def automorphism_to_json(f: FieldAutomorphism) -> dict:
    if f.kind == "identity":
        return {"kind": "identity"}
    return {"kind": "frobenius", "e": f.power}


def automorphism_from_json(obj: Any) -> FieldAutomorphism:
    if obj is None:
        return FieldAutomorphism.identity()
    _expect(isinstance(obj, dict) and "kind" in obj, "twist must be an object with 'kind'")
    if obj["kind"] == "identity":
        return FieldAutomorphism.identity()
    if obj["kind"] == "frobenius":
        try:
            return FieldAutomorphism.frobenius(int(obj["e"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedJSON(f"bad frobenius twist: {exc}") from exc
    raise MalformedJSON(f"unknown twist kind {obj['kind']!r}")


# -- matrices -------------------------------------------------------------------

def matrix_to_json(m: Matrix) -> dict:
    fmt = m.field.format_scalar
    return {
        "field": field_to_json(m.field),
        "rows": m.nrows,
        "cols": m.ncols,
        "entries": [[fmt(a) for a in row] for row in m.entries],
    }


def matrix_from_json(obj: Any, field: Field | None = None) -> Matrix:
    _expect(isinstance(obj, dict), "matrix must be an object")
    if field is None:
        _expect("field" in obj, "matrix needs a 'field'")
        field = field_from_json(obj["field"])
    try:
        entries = obj["entries"]
        rows = int(obj.get("rows", len(entries)))
        cols = int(obj.get("cols", len(entries[0])))
    except (KeyError, TypeError, IndexError) as exc:
        raise MalformedJSON(f"bad matrix object: {exc}") from exc
    _expect(
        isinstance(entries, list) and len(entries) == rows, "entry grid does not match 'rows'"
    )
    parsed = []
    for row in entries:
        _expect(isinstance(row, list) and len(row) == cols, "entry grid does not match 'cols'")
        try:
            parsed.append([field.parse_scalar(str(v)) for v in row])
        except (ValueError, TypeError) as exc:
            raise MalformedJSON(f"bad scalar text: {exc}") from exc
    return Matrix(field, parsed)


def matrix_list_from_json(obj: Any) -> list[Matrix]:
    _expect(isinstance(obj, list) and obj, "expected a nonempty JSON array of matrices")
    return [matrix_from_json(entry) for entry in obj]


# -- subspaces ---------------------------------------------------------------------

def subspace_to_json(s: Subspace) -> dict:
    return {
        "ambient": {
            "field": field_to_json(s.field),
            "rows": s.shape[0],
            "cols": s.shape[1],
        },
        "basis": [matrix_to_json(b) for b in s.basis],
    }


def subspace_from_json(obj: Any) -> Subspace:
    _expect(isinstance(obj, dict) and "ambient" in obj, "subspace needs an 'ambient'")
    amb = obj["ambient"]
    _expect(isinstance(amb, dict), "'ambient' must be an object")
    try:
        field = field_from_json(amb["field"])
        shape = (int(amb["rows"]), int(amb["cols"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedJSON(f"bad ambient: {exc}") from exc
    gens = [matrix_from_json(b, field) for b in obj.get("basis", [])]
    return Subspace.span(gens, field=field, shape=shape)


# -- algebra maps ---------------------------------------------------------------------

def algebra_map_to_json(m: AlgebraMap) -> dict:
    return {
        "n": m.n,
        "field": field_to_json(m.field),
        "twist": automorphism_to_json(m.twist),
        "images": {
            f"{i},{j}": matrix_to_json(m.image(i, j))
            for i in range(1, m.n + 1)
            for j in range(1, m.n + 1)
        },
    }


def algebra_map_from_json(obj: Any) -> AlgebraMap:
    _expect(isinstance(obj, dict), "map must be an object")
    try:
        n = int(obj["n"])
        field = field_from_json(obj["field"])
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedJSON(f"bad map object: {exc}") from exc
    twist = automorphism_from_json(obj.get("twist"))
    raw_images = obj.get("images")
    _expect(isinstance(raw_images, dict), "map needs an 'images' object")
    images = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            key = f"{i},{j}"
            _expect(key in raw_images, f"missing image for unit {key}")
            img = matrix_from_json(raw_images[key], field)
            _expect(
                img.nrows == n and img.ncols == n, f"image {key} is not {n}x{n}"
            )
            images.append(img)
    return AlgebraMap(n, field, tuple(images), twist)
