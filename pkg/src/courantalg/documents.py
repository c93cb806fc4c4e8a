"""The JSON document format: parsing, validation, canonical serialization.

A document is a single JSON object.  Allowed top-level keys:

  field           "Q" or "Fp:<prime>"  (required unless a default is given)
  algebra         {"basis": [...], "brackets": [{left, right, value}, ...]}
  representation  {"basis": [...], "left_action": {...}, "right_action": {...}}
  cochains        [{"name": ..., "degree": n, "values": [{args, value}, ...]}]
  differential    dense square matrix over the algebra section
  courant         {"total": <algebra>, "base": <algebra>, "projection": [[...]]}

Structure constants, cochain tables and action maps are sparse: omitted
slots are zero.  Scalars are strings ("-3/4", "2"); every matrix is a
dense list of rows of scalar strings.  ``serialize_document`` emits a
canonical form (fixed key order, index-sorted sparse records, scalars in
lowest terms, zero records dropped) and ``parse_document`` of that form
returns an equal document, byte-identical after one canonicalization.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import product

from .errors import (
    BadScalarError,
    DocumentSyntaxError,
    DuplicateEntryError,
    UnknownBasisNameError,
)
from .linalg import Field, LinearMap, Matrix, field_from_string
from .algebra import AlgebraPresentation, Representation
from .cohomology import DEFAULT_MAX_DEGREE, Cochain
from .courant import CourantAlgebra


@dataclass(frozen=True)
class NamedCochain:
    name: str
    cochain: Cochain


@dataclass(frozen=True)
class Document:
    """Everything a single input file can carry."""

    field: Field
    algebra: AlgebraPresentation | None = None
    representation: Representation | None = None
    cochains: tuple = ()
    differential: LinearMap | None = None
    courant: CourantAlgebra | None = None

    def cochain(self, name: str) -> Cochain:
        for entry in self.cochains:
            if entry.name == name:
                return entry.cochain
        raise KeyError(name)


_TOP_KEYS = ("field", "algebra", "representation", "cochains", "differential", "courant")


def _require_object(value, where: str) -> dict:
    if not isinstance(value, dict):
        raise DocumentSyntaxError(f"{where}: expected an object")
    return value


def _require_list(value, where: str) -> list:
    if not isinstance(value, list):
        raise DocumentSyntaxError(f"{where}: expected a list")
    return value


def _check_keys(obj: dict, allowed, where: str):
    unknown = [k for k in obj if k not in allowed]
    if unknown:
        raise DocumentSyntaxError(f"{where}: unknown key {unknown[0]!r}")


def _parse_scalar(field: Field, value, where: str):
    if not isinstance(value, str):
        raise BadScalarError(f"{where}: scalars must be strings, got {value!r}")
    try:
        return field.parse(value)
    except ValueError as exc:
        raise BadScalarError(f"{where}: {exc}") from None


def _parse_basis(obj: dict, where: str) -> tuple:
    names = _require_list(obj.get("basis"), f"{where}.basis")
    for n in names:
        if not isinstance(n, str) or not n:
            raise DocumentSyntaxError(f"{where}.basis: names must be nonempty strings")
    if len(set(names)) != len(names):
        raise DocumentSyntaxError(f"{where}.basis: names must be distinct")
    return tuple(names)


def _parse_coordinate_map(field: Field, value, names, where: str) -> tuple:
    value = _require_object(value, where)
    index = {n: i for i, n in enumerate(names)}
    out = [field.zero] * len(names)
    for name, scalar in value.items():
        if name not in index:
            raise UnknownBasisNameError(f"{where}: unknown basis name {name!r}")
        out[index[name]] = _parse_scalar(field, scalar, f"{where}.{name}")
    return tuple(out)


def _parse_algebra(field: Field, obj, where: str) -> AlgebraPresentation:
    obj = _require_object(obj, where)
    _check_keys(obj, ("basis", "brackets"), where)
    names = _parse_basis(obj, where)
    index = {n: i for i, n in enumerate(names)}
    n = len(names)
    table = [[list((field.zero,) * n) for _ in range(n)] for _ in range(n)]
    seen = set()
    for pos, record in enumerate(_require_list(obj.get("brackets", []), f"{where}.brackets")):
        rwhere = f"{where}.brackets[{pos}]"
        record = _require_object(record, rwhere)
        _check_keys(record, ("left", "right", "value"), rwhere)
        try:
            left, right = record["left"], record["right"]
        except KeyError as exc:
            raise DocumentSyntaxError(f"{rwhere}: missing key {exc.args[0]!r}") from None
        for name in (left, right):
            if name not in index:
                raise UnknownBasisNameError(f"{rwhere}: unknown basis name {name!r}")
        pair = (index[left], index[right])
        if pair in seen:
            raise DuplicateEntryError(f"{rwhere}: bracket ({left!r}, {right!r}) given twice")
        seen.add(pair)
        value = _parse_coordinate_map(
            field, record.get("value", {}), names, f"{rwhere}.value"
        )
        table[pair[0]][pair[1]] = list(value)
    return AlgebraPresentation(
        field, names, tuple(tuple(tuple(cell) for cell in row) for row in table)
    )


def _parse_matrix(field: Field, rows, nrows: int, ncols: int, where: str) -> Matrix:
    rows = _require_list(rows, where)
    if len(rows) != nrows:
        raise DocumentSyntaxError(f"{where}: expected {nrows} rows, got {len(rows)}")
    parsed = []
    for i, row in enumerate(rows):
        row = _require_list(row, f"{where}[{i}]")
        if len(row) != ncols:
            raise DocumentSyntaxError(f"{where}[{i}]: expected {ncols} entries, got {len(row)}")
        parsed.append(tuple(_parse_scalar(field, x, f"{where}[{i}][{j}]") for j, x in enumerate(row)))
    return Matrix(field, tuple(parsed), nrows=nrows, ncols=ncols)


def _parse_actions(field: Field, obj, alg: AlgebraPresentation, h: int, where: str) -> tuple:
    obj = _require_object(obj, where)
    index = {n: i for i, n in enumerate(alg.basis_names)}
    out = [Matrix.zeros(field, h, h)] * alg.dim
    for name, rows in obj.items():
        if name not in index:
            raise UnknownBasisNameError(f"{where}: unknown basis name {name!r}")
        out[index[name]] = _parse_matrix(field, rows, h, h, f"{where}.{name}")
    return tuple(out)


def _parse_representation(field: Field, obj, alg, where: str) -> Representation:
    if alg is None:
        raise DocumentSyntaxError(f"{where}: requires an algebra section")
    obj = _require_object(obj, where)
    _check_keys(obj, ("basis", "left_action", "right_action"), where)
    names = _parse_basis(obj, where)
    h = len(names)
    left = _parse_actions(field, obj.get("left_action", {}), alg, h, f"{where}.left_action")
    right = _parse_actions(field, obj.get("right_action", {}), alg, h, f"{where}.right_action")
    return Representation(alg, names, left, right)


def _parse_cochains(field: Field, value, rep, where: str, max_degree: int) -> tuple:
    if rep is None:
        raise DocumentSyntaxError(f"{where}: requires a representation section")
    out = []
    names_seen = set()
    g_index = {n: i for i, n in enumerate(rep.algebra.basis_names)}
    for pos, record in enumerate(_require_list(value, where)):
        rwhere = f"{where}[{pos}]"
        record = _require_object(record, rwhere)
        _check_keys(record, ("name", "degree", "values"), rwhere)
        name = record.get("name")
        if not isinstance(name, str) or not name:
            raise DocumentSyntaxError(f"{rwhere}: missing or empty name")
        if name in names_seen:
            raise DuplicateEntryError(f"{rwhere}: cochain name {name!r} given twice")
        names_seen.add(name)
        degree = record.get("degree")
        if not isinstance(degree, int) or degree < 0:
            raise DocumentSyntaxError(f"{rwhere}: degree must be a nonnegative integer")
        if degree > max_degree:
            raise DocumentSyntaxError(
                f"{rwhere}: degree {degree} exceeds the cap {max_degree}"
            )
        entries = {}
        for vpos, vrecord in enumerate(_require_list(record.get("values", []), f"{rwhere}.values")):
            vwhere = f"{rwhere}.values[{vpos}]"
            vrecord = _require_object(vrecord, vwhere)
            _check_keys(vrecord, ("args", "value"), vwhere)
            args = _require_list(vrecord.get("args", []), f"{vwhere}.args")
            if len(args) != degree:
                raise DocumentSyntaxError(f"{vwhere}: expected {degree} arguments")
            for a in args:
                if a not in g_index:
                    raise UnknownBasisNameError(f"{vwhere}: unknown basis name {a!r}")
            tup = tuple(g_index[a] for a in args)
            if tup in entries:
                raise DuplicateEntryError(f"{vwhere}: arguments given twice")
            entries[tup] = _parse_coordinate_map(
                field, vrecord.get("value", {}), rep.basis_names, f"{vwhere}.value"
            )
        out.append(NamedCochain(name, Cochain.from_entries(rep, degree, entries)))
    return tuple(sorted(out, key=lambda e: e.name))


def _parse_courant(field: Field, obj, where: str) -> CourantAlgebra:
    obj = _require_object(obj, where)
    _check_keys(obj, ("total", "base", "projection"), where)
    for key in ("total", "base", "projection"):
        if key not in obj:
            raise DocumentSyntaxError(f"{where}: missing key {key!r}")
    total = _parse_algebra(field, obj["total"], f"{where}.total")
    base = _parse_algebra(field, obj["base"], f"{where}.base")
    projection = _parse_matrix(
        field, obj["projection"], base.dim, total.dim, f"{where}.projection"
    )
    return CourantAlgebra(total=total, base=base, projection=LinearMap(projection))


def parse_document(
    text: str,
    default_field: Field | None = None,
    max_degree: int = DEFAULT_MAX_DEGREE,
) -> Document:
    """Parse and structurally validate a document.

    ``default_field`` supplies the field only when the document omits it;
    semantic properties (bracket identities, representation axioms) are
    not checked here.  Cochain tables are dense in the degree, so degrees
    beyond ``max_degree`` are rejected.
    """
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentSyntaxError(
            f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from None
    raw = _require_object(raw, "document")
    _check_keys(raw, _TOP_KEYS, "document")
    if "field" in raw:
        spec = raw["field"]
        if not isinstance(spec, str):
            raise DocumentSyntaxError("document.field: expected a string")
        try:
            field = field_from_string(spec)
        except ValueError as exc:
            raise DocumentSyntaxError(f"document.field: {exc}") from None
    elif default_field is not None:
        field = default_field
    else:
        raise DocumentSyntaxError("document: missing 'field'")
    algebra = None
    if "algebra" in raw:
        algebra = _parse_algebra(field, raw["algebra"], "algebra")
    representation = None
    if "representation" in raw:
        representation = _parse_representation(field, raw["representation"], algebra, "representation")
    cochains = ()
    if "cochains" in raw:
        cochains = _parse_cochains(field, raw["cochains"], representation, "cochains", max_degree)
    differential = None
    if "differential" in raw:
        if algebra is None:
            raise DocumentSyntaxError("differential: requires an algebra section")
        differential = LinearMap(
            _parse_matrix(field, raw["differential"], algebra.dim, algebra.dim, "differential")
        )
    courant = None
    if "courant" in raw:
        courant = _parse_courant(field, raw["courant"], "courant")
    return Document(
        field=field,
        algebra=algebra,
        representation=representation,
        cochains=cochains,
        differential=differential,
        courant=courant,
    )


def scalar_string(field: Field, x) -> str:
    return field.format(x)


def coordinate_map_json(field: Field, names, vec) -> dict:
    """Sparse {basis name: scalar string} map, zero entries dropped."""
    return {
        names[i]: scalar_string(field, x) for i, x in enumerate(vec) if x
    }


def matrix_json(m: Matrix) -> list:
    return [[scalar_string(m.field, x) for x in row] for row in m.entries]


def algebra_json(alg: AlgebraPresentation) -> dict:
    brackets = []
    for i in range(alg.dim):
        for j in range(alg.dim):
            value = coordinate_map_json(alg.field, alg.basis_names, alg.table[i][j])
            if value:
                brackets.append(
                    {
                        "left": alg.basis_names[i],
                        "right": alg.basis_names[j],
                        "value": value,
                    }
                )
    return {"basis": list(alg.basis_names), "brackets": brackets}


def representation_json(rep: Representation) -> dict:
    left = {}
    right = {}
    for i, name in enumerate(rep.algebra.basis_names):
        if not rep.left_action[i].is_zero():
            left[name] = matrix_json(rep.left_action[i])
        if not rep.right_action[i].is_zero():
            right[name] = matrix_json(rep.right_action[i])
    return {"basis": list(rep.basis_names), "left_action": left, "right_action": right}


def cochain_json(name: str, cochain: Cochain) -> dict:
    g = cochain.rep.algebra.dim
    g_names = cochain.rep.algebra.basis_names
    values = []
    for tup in product(range(g), repeat=cochain.degree):
        vec = cochain.value(tup)
        value = coordinate_map_json(cochain.rep.field, cochain.rep.basis_names, vec)
        if value:
            values.append({"args": [g_names[t] for t in tup], "value": value})
    return {"name": name, "degree": cochain.degree, "values": values}


def courant_json(c: CourantAlgebra) -> dict:
    return {
        "total": algebra_json(c.total),
        "base": algebra_json(c.base),
        "projection": matrix_json(c.projection.matrix),
    }


def document_json(doc: Document) -> dict:
    out = {"field": doc.field.spec_string}
    if doc.algebra is not None:
        out["algebra"] = algebra_json(doc.algebra)
    if doc.representation is not None:
        out["representation"] = representation_json(doc.representation)
    if doc.cochains:
        out["cochains"] = [
            cochain_json(entry.name, entry.cochain)
            for entry in sorted(doc.cochains, key=lambda e: e.name)
        ]
    if doc.differential is not None:
        out["differential"] = matrix_json(doc.differential.matrix)
    if doc.courant is not None:
        out["courant"] = courant_json(doc.courant)
    return out


def serialize_document(doc: Document) -> str:
    """Canonical text form; parsing it returns an equal document."""
    return json.dumps(document_json(doc), indent=2) + "\n"
