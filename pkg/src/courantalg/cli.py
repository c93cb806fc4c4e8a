"""Command-line interface.

Reports go to standard output as deterministic JSON; diagnostics go to
standard error.  Exit codes: 0 for success or an affirmative verdict, 1
when a checked property fails or a verdict is negative (not a cocycle,
not isomorphic, invalid bracket), 2 for malformed input or usage errors.
``construct`` and ``catalog show`` print bare documents so their output
can be piped straight into the other commands.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import (
    CourantAlgError,
    DocumentError,
    NotACocycleError,
    NotADifferentialError,
    NotALieModuleError,
)
from .linalg import field_from_string
from .algebra import (
    DifferentialLieAlgebra,
    check_algebra,
    check_representation,
    derived_bracket,
)
from .cohomology import DEFAULT_MAX_DEGREE, cohomology, is_cocycle
from .courant import (
    automorphism_from_cocycle,
    automorphism_space,
    characteristic_class,
    are_isomorphic,
    check_courant,
    choose_section,
    classify,
    extract_cocycle,
    from_cocycle,
    hemisemidirect,
    induced_actions,
    is_exact,
)
from .documents import (
    Document,
    algebra_json,
    cochain_json,
    document_json,
    matrix_json,
    parse_document,
    scalar_string,
    serialize_document,
)
from .catalog import catalog, catalog_entry


def _emit(payload: dict) -> None:
    sys.stdout.write(json.dumps(payload, indent=2) + "\n")


def _fail(message: str) -> int:
    sys.stderr.write(f"error: {message}\n")
    return 2


def _load_document(path: str, field_spec: str | None) -> Document:
    with open(path, "r", encoding="utf-8") as handle:
        text = handle.read()
    default_field = field_from_string(field_spec) if field_spec else None
    doc = parse_document(text, default_field=default_field)
    if field_spec is not None:
        # the override flag is only for documents that omit the field
        raw = json.loads(text)
        if isinstance(raw, dict) and "field" in raw:
            raise DocumentSyntaxUsage("--field given but the document declares one")
    return doc


class DocumentSyntaxUsage(Exception):
    pass


def _names(seq, indices) -> list:
    return [seq[i] for i in indices]


def _violation_json(alg, violations) -> list:
    out = []
    for indices, residual in violations:
        out.append(
            {
                "at": _names(alg.basis_names, indices),
                "residual": {
                    alg.basis_names[i]: scalar_string(alg.field, x)
                    for i, x in enumerate(residual)
                    if x
                },
            }
        )
    return out


def cmd_validate(args) -> int:
    doc = _load_document(args.file, args.field)
    checks = []
    ok = True

    def record(section, check, passed, detail=None):
        nonlocal ok
        entry = {"section": section, "check": check, "ok": passed}
        if detail is not None:
            entry["detail"] = detail
        checks.append(entry)
        ok = ok and passed

    if doc.algebra is not None:
        kind = check_algebra(doc.algebra)
        record(
            "algebra",
            "leibniz-left",
            kind.leibniz_left,
            _violation_json(doc.algebra, kind.leibniz_violations),
        )
        checks.append(
            {
                "section": "algebra",
                "check": "antisymmetric",
                "ok": kind.antisymmetric,
                "detail": _violation_json(doc.algebra, kind.antisymmetry_violations),
            }
        )
        checks.append({"section": "algebra", "check": "lie", "ok": kind.lie})
    if doc.differential is not None:
        dla = DifferentialLieAlgebra(doc.algebra, doc.differential)
        bad = dla.violations()
        record("differential", "differential-lie-algebra", not bad,
               [f"{kind} at {witness!r}" for kind, witness in bad])
    if doc.representation is not None:
        report = check_representation(doc.representation)
        record(
            "representation",
            "two-action-axioms",
            report.valid,
            [
                {"axiom": tag, "at": _names(doc.algebra.basis_names, pair)}
                for tag, pair, _ in report.violations
            ],
        )
        for entry in doc.cochains:
            checks.append(
                {
                    "section": f"cochains.{entry.name}",
                    "check": "cocycle",
                    "ok": bool(is_cocycle(entry.cochain))
                    if doc.representation.is_valid
                    else None,
                }
            )
    if doc.courant is not None:
        report = check_courant(doc.courant)
        record(
            "courant",
            "total-leibniz-left",
            report.leibniz_left,
            _violation_json(doc.courant.total, report.leibniz_violations),
        )
        record(
            "courant",
            "projection-homomorphism",
            report.projection_homomorphism,
            [
                {"at": _names(doc.courant.total.basis_names, pair)}
                for pair, _ in report.homomorphism_violations
            ],
        )
        if report.valid:
            checks.append({"section": "courant", "check": "exact", "ok": is_exact(doc.courant)})
    _emit({"command": "validate", "valid": ok, "checks": checks})
    return 0 if ok else 1


def _require_pair(doc: Document):
    if doc.algebra is None or doc.representation is None:
        raise DocumentSyntaxUsage("the document must carry algebra and representation sections")
    return doc.algebra, doc.representation


def _require_courant(doc: Document):
    if doc.courant is None:
        raise DocumentSyntaxUsage("the document must carry a courant section")
    return doc.courant


def _check_exactness(command: str, c) -> int | None:
    report = check_courant(c)
    if not report.valid:
        _emit({"command": command, "valid": False, "reason": "not-a-courant-algebra"})
        return 1
    if not is_exact(c):
        _emit({"command": command, "valid": False, "reason": "not-exact"})
        return 1
    return None


def cmd_cohomology(args) -> int:
    doc = _load_document(args.file, args.field)
    alg, rep = _require_pair(doc)
    report = check_representation(rep)
    if not report.valid:
        _emit(
            {
                "command": "cohomology",
                "valid": False,
                "reason": "invalid-representation",
                "violations": [
                    {"axiom": tag, "at": _names(alg.basis_names, pair)}
                    for tag, pair, _ in report.violations
                ],
            }
        )
        return 1
    result = cohomology(rep, args.degree, max_degree=args.max_degree)
    _emit(
        {
            "command": "cohomology",
            "degree": result.degree,
            "dim_cochains": result.dim_cochains,
            "dim_cocycles": result.dim_cocycles,
            "dim_coboundaries": result.dim_coboundaries,
            "dim_cohomology": result.dim_cohomology,
            "representatives": [
                cochain_json(f"rep{i + 1}", c) for i, c in enumerate(result.representatives)
            ],
        }
    )
    return 0


def cmd_construct(args) -> int:
    doc = _load_document(args.file, args.field)
    alg, rep = _require_pair(doc)
    try:
        if args.construction == "hemisemidirect":
            if any(not m.is_zero() for m in rep.right_action):
                _emit(
                    {
                        "command": "construct",
                        "valid": False,
                        "reason": "nonzero-right-action",
                    }
                )
                return 1
            presentation = hemisemidirect(alg, rep.left_action, rep.basis_names)
        else:
            if args.cocycle is not None:
                f = doc.cochain(args.cocycle)
            elif doc.cochains:
                f = doc.cochains[0].cochain
            else:
                raise DocumentSyntaxUsage("the document carries no cochain to twist by")
            if f.degree != 2:
                raise DocumentSyntaxUsage("the twist must have degree 2")
            presentation = from_cocycle(alg, rep, f)
    except (NotACocycleError, NotALieModuleError, ValueError) as exc:
        _emit({"command": "construct", "valid": False, "reason": str(exc)})
        return 1
    out = Document(field=doc.field, courant=presentation.as_courant())
    sys.stdout.write(serialize_document(out))
    return 0


def cmd_extract(args) -> int:
    doc = _load_document(args.file, args.field)
    c = _require_courant(doc)
    code = _check_exactness("extract", c)
    if code is not None:
        return code
    q = choose_section(c)
    rep = induced_actions(c)
    phi = extract_cocycle(c, q)
    payload = Document(
        field=doc.field,
        algebra=c.base,
        representation=rep,
    )
    _emit(
        {
            "command": "extract",
            "section": matrix_json(q.map.matrix),
            "document": {
                **document_json(payload),
                "cochains": [cochain_json("phi_q", phi)],
            },
        }
    )
    return 0


def cmd_classify(args) -> int:
    doc = _load_document(args.file, args.field)
    c = _require_courant(doc)
    code = _check_exactness("classify", c)
    if code is not None:
        return code
    result = classify(c)
    report = result.cohomology
    q = choose_section(c)
    _emit(
        {
            "command": "classify",
            "degree": 2,
            "dim_cochains": report.dim_cochains,
            "dim_cocycles": report.dim_cocycles,
            "dim_coboundaries": report.dim_coboundaries,
            "dim_cohomology": report.dim_cohomology,
            "class": [scalar_string(c.field, x) for x in result.coordinates],
            "section": matrix_json(q.map.matrix),
            "cocycle": cochain_json("phi_q", extract_cocycle(c, q)),
            "representatives": [
                cochain_json(f"rep{i + 1}", f) for i, f in enumerate(report.representatives)
            ],
        }
    )
    return 0


def cmd_iso(args) -> int:
    doc1 = _load_document(args.file1, args.field)
    doc2 = _load_document(args.file2, args.field)
    c1 = _require_courant(doc1)
    c2 = _require_courant(doc2)
    for c in (c1, c2):
        code = _check_exactness("iso", c)
        if code is not None:
            return code
    verdict = are_isomorphic(c1, c2)
    if verdict.isomorphic:
        _emit(
            {
                "command": "iso",
                "isomorphic": True,
                "witness": matrix_json(verdict.morphism.map.matrix),
                "kernel_shift": cochain_json("psi", verdict.kernel_shift),
            }
        )
        return 0
    _emit({"command": "iso", "isomorphic": False, "reason": verdict.reason})
    return 1


def cmd_aut(args) -> int:
    doc = _load_document(args.file, args.field)
    c = _require_courant(doc)
    code = _check_exactness("aut", c)
    if code is not None:
        return code
    space = automorphism_space(c)
    q = choose_section(c)
    basis = []
    for i, psi in enumerate(space.basis):
        morphism = automorphism_from_cocycle(c, psi, q)
        basis.append(
            {
                "cochain": cochain_json(f"psi{i + 1}", psi),
                "automorphism": matrix_json(morphism.map.matrix),
            }
        )
    _emit(
        {
            "command": "aut",
            "dim_cocycles": space.dim_cocycles,
            "dim_coboundaries": space.dim_coboundaries,
            "dim_cohomology": space.dim_cohomology,
            "coboundary_shifts_trivial": space.dim_coboundaries == 0,
            "basis": basis,
        }
    )
    return 0


def cmd_characteristic(args) -> int:
    doc = _load_document(args.file, args.field)
    if doc.algebra is None:
        raise DocumentSyntaxUsage("the document must carry an algebra section")
    alg = doc.algebra
    if doc.differential is not None:
        try:
            alg = derived_bracket(DifferentialLieAlgebra(alg, doc.differential))
        except NotADifferentialError as exc:
            _emit({"command": "characteristic", "valid": False, "reason": str(exc)})
            return 1
    if not check_algebra(alg).leibniz_left:
        _emit({"command": "characteristic", "valid": False, "reason": "not-leibniz"})
        return 1
    c, result = characteristic_class(alg)
    report = result.cohomology
    _emit(
        {
            "command": "characteristic",
            "kernel": [
                {
                    name: scalar_string(alg.field, x)
                    for name, x in zip(alg.basis_names, row)
                    if x
                }
                for row in c.projection.matrix.kernel_basis()
            ],
            "quotient": algebra_json(c.base),
            "projection": matrix_json(c.projection.matrix),
            "dim_cohomology": report.dim_cohomology,
            "class": [scalar_string(alg.field, x) for x in result.coordinates],
        }
    )
    return 0


def cmd_catalog(args) -> int:
    if args.action == "list":
        _emit(
            {
                "command": "catalog",
                "entries": [
                    {"name": e.name, "description": e.description} for e in catalog()
                ],
            }
        )
        return 0
    try:
        entry = catalog_entry(args.name)
    except KeyError:
        return _fail(f"no catalog entry named {args.name!r}")
    sys.stdout.write(serialize_document(entry.document))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="courantalg",
        description="Leibniz cohomology and exact Courant algebras in exact arithmetic.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_field(p):
        p.add_argument(
            "--field",
            help="field spec (Q or Fp:<prime>); only for documents that omit one",
        )

    p = sub.add_parser("validate", help="run every validator the document supports")
    p.add_argument("file")
    add_field(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("cohomology", help="dimension data and representatives in one degree")
    p.add_argument("file")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--max-degree", type=int, default=DEFAULT_MAX_DEGREE)
    add_field(p)
    p.set_defaults(func=cmd_cohomology)

    p = sub.add_parser("construct", help="build an exact Courant algebra document")
    p.add_argument("construction", choices=("hemisemidirect", "from-cocycle"))
    p.add_argument("file")
    p.add_argument("--cocycle", help="name of the twisting cochain (default: the first)")
    add_field(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("extract", help="canonical section and its twisting cocycle")
    p.add_argument("file")
    add_field(p)
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("classify", help="degree-2 class of an exact Courant algebra")
    p.add_argument("file")
    add_field(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("iso", help="decide isomorphism and print a witness")
    p.add_argument("file1")
    p.add_argument("file2")
    add_field(p)
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("aut", help="kernel-fixing automorphisms via 1-cocycles")
    p.add_argument("file")
    add_field(p)
    p.set_defaults(func=cmd_aut)

    p = sub.add_parser(
        "characteristic", help="class of a Leibniz algebra over its largest Lie quotient"
    )
    p.add_argument("file")
    add_field(p)
    p.set_defaults(func=cmd_characteristic)

    p = sub.add_parser("catalog", help="list built-in entries or print one")
    catalog_sub = p.add_subparsers(dest="action", required=True)
    lp = catalog_sub.add_parser("list")
    lp.set_defaults(func=cmd_catalog, action="list")
    sp = catalog_sub.add_parser("show")
    sp.add_argument("name")
    sp.set_defaults(func=cmd_catalog, action="show")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DocumentSyntaxUsage as exc:
        return _fail(str(exc))
    except DocumentError as exc:
        return _fail(str(exc))
    except FileNotFoundError as exc:
        return _fail(f"cannot read {exc.filename!r}")
    except IsADirectoryError as exc:
        return _fail(f"cannot read {exc.filename!r}")
    except ValueError as exc:
        return _fail(str(exc))
    except CourantAlgError as exc:
        return _fail(str(exc))


if __name__ == "__main__":
    sys.exit(main())
