"""Built-in desk-scale instances used by the test suite and the CLI.

Every entry is a complete document; algebra entries carry the bare
presentation, ``*-trivial`` / ``*-adjoint`` entries pair an algebra with
a coefficient space, ``*-hemi-*`` entries carry a realized Courant
algebra, and the ``-dla`` entry adds a square-zero derivation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import QQ, LinearMap, Matrix
from .algebra import (
    AlgebraPresentation,
    Representation,
    self_representation,
    trivial_representation,
)
from .courant import hemisemidirect
from .documents import Document


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    description: str
    document: Document


def _aff1() -> AlgebraPresentation:
    return AlgebraPresentation.from_named_brackets(
        QQ,
        ("e1", "e2"),
        {("e1", "e2"): {"e2": 1}, ("e2", "e1"): {"e2": -1}},
    )


def _heisenberg3() -> AlgebraPresentation:
    return AlgebraPresentation.from_named_brackets(
        QQ,
        ("x", "y", "z"),
        {("x", "y"): {"z": 1}, ("y", "x"): {"z": -1}},
    )


def _sl2() -> AlgebraPresentation:
    return AlgebraPresentation.from_named_brackets(
        QQ,
        ("e", "h", "f"),
        {
            ("e", "f"): {"h": 1},
            ("f", "e"): {"h": -1},
            ("h", "e"): {"e": 2},
            ("e", "h"): {"e": -2},
            ("h", "f"): {"f": -2},
            ("f", "h"): {"f": 2},
        },
    )


def _leibniz2() -> AlgebraPresentation:
    return AlgebraPresentation.from_named_brackets(
        QQ, ("e1", "e2"), {("e1", "e1"): {"e2": 1}}
    )


def _heisenberg_differential() -> LinearMap:
    # d(y) = x, d(x) = d(z) = 0 in the (x, y, z) basis
    return LinearMap(Matrix(QQ, ((0, 1, 0), (0, 0, 0), (0, 0, 0)), nrows=3, ncols=3))


def _algebra_doc(alg: AlgebraPresentation) -> Document:
    return Document(field=alg.field, algebra=alg)


def _pair_doc(alg: AlgebraPresentation, rep: Representation) -> Document:
    return Document(field=alg.field, algebra=alg, representation=rep)


def _hemi_doc(alg: AlgebraPresentation, rep: Representation) -> Document:
    presentation = hemisemidirect(alg, rep.left_action, rep.basis_names)
    return Document(field=alg.field, courant=presentation.as_courant())


def _build_entries() -> tuple:
    aff1 = _aff1()
    heis = _heisenberg3()
    sl2 = _sl2()
    leib2 = _leibniz2()
    abelians = {
        n: AlgebraPresentation.abelian(QQ, tuple(f"e{i + 1}" for i in range(n)))
        for n in (1, 2, 3)
    }
    entries = [
        CatalogEntry("abelian1", "1-dimensional abelian Lie algebra", _algebra_doc(abelians[1])),
        CatalogEntry("abelian2", "2-dimensional abelian Lie algebra", _algebra_doc(abelians[2])),
        CatalogEntry("abelian3", "3-dimensional abelian Lie algebra", _algebra_doc(abelians[3])),
        CatalogEntry("aff1", "affine line: [e1,e2] = e2", _algebra_doc(aff1)),
        CatalogEntry("heisenberg3", "Heisenberg algebra: [x,y] = z", _algebra_doc(heis)),
        CatalogEntry("sl2", "sl2: [e,f] = h, [h,e] = 2e, [h,f] = -2f", _algebra_doc(sl2)),
        CatalogEntry(
            "leibniz2",
            "smallest non-Lie left Leibniz algebra: [e1,e1] = e2",
            _algebra_doc(leib2),
        ),
        CatalogEntry(
            "heisenberg3-dla",
            "Heisenberg algebra with the square-zero derivation d(y) = x",
            Document(field=QQ, algebra=heis, differential=_heisenberg_differential()),
        ),
    ]
    for name, alg in (
        ("abelian1", abelians[1]),
        ("abelian2", abelians[2]),
        ("abelian3", abelians[3]),
        ("aff1", aff1),
        ("heisenberg3", heis),
        ("sl2", sl2),
        ("leibniz2", leib2),
    ):
        entries.append(
            CatalogEntry(
                f"{name}-trivial",
                f"{name} with 1-dimensional trivial coefficients",
                _pair_doc(alg, trivial_representation(alg)),
            )
        )
    for name, alg in (
        ("aff1", aff1),
        ("heisenberg3", heis),
        ("sl2", sl2),
        ("leibniz2", leib2),
    ):
        entries.append(
            CatalogEntry(
                f"{name}-adjoint",
                f"{name} acting on itself by left and right multiplication",
                _pair_doc(alg, self_representation(alg)),
            )
        )
    entries.extend(
        [
            CatalogEntry(
                "aff1-hemi-adjoint",
                "hemisemidirect product of aff1 with its adjoint action",
                _hemi_doc(aff1, self_representation(aff1)),
            ),
            CatalogEntry(
                "aff1-hemi-trivial",
                "hemisemidirect product of aff1 with 1-dimensional trivial coefficients",
                _hemi_doc(aff1, trivial_representation(aff1)),
            ),
            CatalogEntry(
                "abelian2-hemi-trivial",
                "direct sum of abelian2 with a 1-dimensional trivial coefficient line",
                _hemi_doc(abelians[2], trivial_representation(abelians[2])),
            ),
        ]
    )
    return tuple(entries)


_ENTRIES: tuple | None = None


def catalog() -> tuple:
    """All built-in entries, in a fixed order."""
    global _ENTRIES
    if _ENTRIES is None:
        _ENTRIES = _build_entries()
    return _ENTRIES


def catalog_entry(name: str) -> CatalogEntry:
    for entry in catalog():
        if entry.name == name:
            return entry
    raise KeyError(name)


def representation_pairs() -> tuple:
    """The (name, algebra, representation) triples carried by the catalog."""
    out = []
    for entry in catalog():
        doc = entry.document
        if doc.algebra is not None and doc.representation is not None:
            out.append((entry.name, doc.algebra, doc.representation))
    return tuple(out)


def courant_instances() -> tuple:
    """The (name, CourantAlgebra) pairs carried by the catalog."""
    return tuple(
        (entry.name, entry.document.courant)
        for entry in catalog()
        if entry.document.courant is not None
    )
