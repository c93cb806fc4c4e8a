"""Every built-in entry validates against its declared shape."""

import pytest

from courantalg import (
    DifferentialLieAlgebra,
    catalog,
    catalog_entry,
    check_algebra,
    check_courant,
    check_representation,
    is_exact,
)
from courantalg.catalog import courant_instances, representation_pairs

LIE_NAMES = {"abelian1", "abelian2", "abelian3", "aff1", "heisenberg3", "sl2"}


def test_required_names_present():
    names = {e.name for e in catalog()}
    assert {"aff1", "leibniz2", "heisenberg3", "sl2", "heisenberg3-dla"} <= names
    assert {"abelian1", "abelian2", "abelian3"} <= names


def test_lookup():
    assert catalog_entry("aff1").name == "aff1"
    with pytest.raises(KeyError):
        catalog_entry("nope")


def test_algebra_entries_have_declared_kind():
    for entry in catalog():
        alg = entry.document.algebra
        if alg is None:
            continue
        kind = check_algebra(alg)
        assert kind.leibniz_left, entry.name
        base = entry.name.split("-")[0]
        assert kind.lie == (base in LIE_NAMES), entry.name


def test_leibniz2_is_not_lie():
    kind = check_algebra(catalog_entry("leibniz2").document.algebra)
    assert kind.leibniz_left
    assert not kind.lie


def test_differential_entry_is_valid():
    doc = catalog_entry("heisenberg3-dla").document
    dla = DifferentialLieAlgebra(doc.algebra, doc.differential)
    assert dla.violations() == ()


def test_representation_entries_pass_axioms():
    pairs = representation_pairs()
    assert len(pairs) >= 8
    for name, _, rep in pairs:
        assert check_representation(rep).valid, name


def test_courant_entries_are_exact():
    instances = courant_instances()
    assert len(instances) >= 3
    for name, c in instances:
        assert check_courant(c).valid, name
        assert is_exact(c), name


def test_descriptions_nonempty():
    for entry in catalog():
        assert entry.description
