"""Exit codes, report determinism, and end-to-end command flows."""

import json

import pytest

from courantalg import catalog_entry, parse_document, serialize_document
from courantalg.cli import main


def run(capsys, *argv):
    """Invoke the CLI in-process; returns (exit code, stdout, stderr)."""
    try:
        code = main(list(argv))
    except SystemExit as exc:  # argparse usage failures
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


def write_entry(tmp_path, name) -> str:
    path = tmp_path / f"{name}.json"
    path.write_text(serialize_document(catalog_entry(name).document))
    return str(path)


def write_text(tmp_path, name, text) -> str:
    path = tmp_path / name
    path.write_text(text)
    return str(path)


BROKEN_LEIBNIZ = """
{
  "field": "Q",
  "algebra": {
    "basis": ["e1"],
    "brackets": [{"left": "e1", "right": "e1", "value": {"e1": "1"}}]
  }
}
"""

FIELDLESS = """
{
  "algebra": {"basis": ["e1"], "brackets": []}
}
"""


class TestValidate:
    def test_valid_algebra(self, capsys, tmp_path):
        code, out, _ = run(capsys, "validate", write_entry(tmp_path, "aff1"))
        assert code == 0
        report = json.loads(out)
        assert report["valid"] is True

    def test_leibniz_but_not_lie_is_still_valid(self, capsys, tmp_path):
        code, out, _ = run(capsys, "validate", write_entry(tmp_path, "leibniz2"))
        assert code == 0
        report = json.loads(out)
        checks = {(c["section"], c["check"]): c["ok"] for c in report["checks"]}
        assert checks[("algebra", "lie")] is False
        assert checks[("algebra", "leibniz-left")] is True

    def test_broken_bracket_reports_violation(self, capsys, tmp_path):
        path = write_text(tmp_path, "broken.json", BROKEN_LEIBNIZ)
        code, out, _ = run(capsys, "validate", path)
        assert code == 1
        report = json.loads(out)
        assert report["valid"] is False
        leib = next(c for c in report["checks"] if c["check"] == "leibniz-left")
        assert leib["detail"][0]["at"] == ["e1", "e1", "e1"]

    def test_courant_entry(self, capsys, tmp_path):
        code, out, _ = run(capsys, "validate", write_entry(tmp_path, "aff1-hemi-adjoint"))
        assert code == 0
        report = json.loads(out)
        exact = next(c for c in report["checks"] if c["check"] == "exact")
        assert exact["ok"] is True

    def test_dla_entry(self, capsys, tmp_path):
        code, out, _ = run(capsys, "validate", write_entry(tmp_path, "heisenberg3-dla"))
        assert code == 0


class TestErrors:
    def test_malformed_json(self, capsys, tmp_path):
        path = write_text(tmp_path, "bad.json", "{ nope")
        code, _, err = run(capsys, "validate", path)
        assert code == 2
        assert "line" in err

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "validate", "/nonexistent/file.json")
        assert code == 2

    def test_unknown_subcommand(self, capsys):
        code, _, _ = run(capsys, "frobnicate", "x")
        assert code == 2

    def test_bad_scalar(self, capsys, tmp_path):
        path = write_text(
            tmp_path,
            "bad.json",
            BROKEN_LEIBNIZ.replace('"1"', '"1/0"'),
        )
        code, _, err = run(capsys, "validate", path)
        assert code == 2
        assert "scalar" in err or "denominator" in err

    def test_degree_over_cap(self, capsys, tmp_path):
        path = write_entry(tmp_path, "aff1-trivial")
        code, _, err = run(capsys, "cohomology", path, "--degree", "9")
        assert code == 2

    def test_field_override_conflict(self, capsys, tmp_path):
        path = write_entry(tmp_path, "aff1")
        code, _, err = run(capsys, "validate", path, "--field", "Q")
        assert code == 2

    def test_field_override_used(self, capsys, tmp_path):
        path = write_text(tmp_path, "fieldless.json", FIELDLESS)
        code, _, _ = run(capsys, "validate", path, "--field", "Fp:5")
        assert code == 0
        code, _, _ = run(capsys, "validate", path)
        assert code == 2


class TestCohomology:
    def test_aff1_trivial_degree_one(self, capsys, tmp_path):
        path = write_entry(tmp_path, "aff1-trivial")
        code, out, _ = run(capsys, "cohomology", path, "--degree", "1")
        assert code == 0
        report = json.loads(out)
        assert report["dim_cohomology"] == 1

    def test_requires_representation(self, capsys, tmp_path):
        path = write_entry(tmp_path, "aff1")
        code, _, err = run(capsys, "cohomology", path, "--degree", "1")
        assert code == 2

    def test_deterministic_output(self, capsys, tmp_path):
        path = write_entry(tmp_path, "sl2-adjoint")
        _, out1, _ = run(capsys, "cohomology", path, "--degree", "2")
        _, out2, _ = run(capsys, "cohomology", path, "--degree", "2")
        assert out1 == out2


class TestConstructAndFriends:
    def test_construct_hemisemidirect_roundtrip(self, capsys, tmp_path):
        path = write_entry(tmp_path, "aff1-adjoint")
        code, out, _ = run(capsys, "construct", "hemisemidirect", path)
        assert code == 1  # adjoint carries a right action
        path = write_entry(tmp_path, "aff1-trivial")
        code, out, _ = run(capsys, "construct", "hemisemidirect", path)
        assert code == 0
        doc = parse_document(out)
        assert doc.courant is not None
        out_path = write_text(tmp_path, "constructed.json", out)
        code, out2, _ = run(capsys, "classify", out_path)
        assert code == 0
        assert json.loads(out2)["class"] == ["0"]

    def test_construct_from_cocycle(self, capsys, tmp_path):
        entry = catalog_entry("aff1-trivial").document
        raw = json.loads(serialize_document(entry))
        raw["cochains"] = [
            {
                "name": "f",
                "degree": 2,
                "values": [{"args": ["e1", "e1"], "value": {"h1": "1"}}],
            }
        ]
        path = write_text(tmp_path, "twist.json", json.dumps(raw))
        code, out, _ = run(capsys, "construct", "from-cocycle", path)
        assert code == 0
        out_path = write_text(tmp_path, "twisted.json", out)
        code, out2, _ = run(capsys, "classify", out_path)
        assert code == 0
        assert json.loads(out2)["class"] == ["1"]

    def test_construct_from_non_cocycle(self, capsys, tmp_path):
        entry = catalog_entry("aff1-trivial").document
        raw = json.loads(serialize_document(entry))
        raw["cochains"] = [
            {
                "name": "f",
                "degree": 2,
                "values": [{"args": ["e1", "e2"], "value": {"h1": "1"}}],
            }
        ]
        path = write_text(tmp_path, "bad-twist.json", json.dumps(raw))
        code, out, _ = run(capsys, "construct", "from-cocycle", path)
        assert code == 1
        assert json.loads(out)["valid"] is False

    def test_extract(self, capsys, tmp_path):
        path = write_entry(tmp_path, "aff1-hemi-adjoint")
        code, out, _ = run(capsys, "extract", path)
        assert code == 0
        report = json.loads(out)
        assert report["document"]["cochains"][0]["values"] == []

    def test_aut(self, capsys, tmp_path):
        path = write_entry(tmp_path, "aff1-hemi-trivial")
        code, out, _ = run(capsys, "aut", path)
        assert code == 0
        report = json.loads(out)
        assert report["dim_cocycles"] == 1
        assert report["dim_cohomology"] == 1
        assert len(report["basis"]) == 1

    def test_characteristic(self, capsys, tmp_path):
        path = write_entry(tmp_path, "leibniz2")
        code, out, _ = run(capsys, "characteristic", path)
        assert code == 0
        report = json.loads(out)
        assert report["class"] == ["1"]

    def test_characteristic_of_derived_bracket(self, capsys, tmp_path):
        path = write_entry(tmp_path, "heisenberg3-dla")
        code, out, _ = run(capsys, "characteristic", path)
        assert code == 0
        report = json.loads(out)
        assert report["class"] == ["0", "0", "0", "1"]


class TestIso:
    def test_self_iso(self, capsys, tmp_path):
        path = write_entry(tmp_path, "aff1-hemi-adjoint")
        code, out, _ = run(capsys, "iso", path, path)
        assert code == 0
        report = json.loads(out)
        assert report["isomorphic"] is True
        assert report["kernel_shift"]["values"] == []  # identity witness

    def test_distinct_classes(self, capsys, tmp_path):
        import courantalg as ca
        from courantalg import Cochain, Document
        from courantalg.algebra import trivial_representation

        field = ca.GF(2)
        alg = ca.AlgebraPresentation.abelian(field, ("a", "b"))
        rep = trivial_representation(alg)
        f1 = Cochain.from_entries(rep, 2, {(0, 1): (field.one,)})
        f2 = Cochain.from_entries(rep, 2, {(1, 0): (field.one,)})
        paths = []
        for i, f in enumerate((f1, f2)):
            c = ca.from_cocycle(alg, rep, f).as_courant()
            doc = Document(field=field, courant=c)
            paths.append(write_text(tmp_path, f"c{i}.json", serialize_document(doc)))
        code, out, _ = run(capsys, "iso", paths[0], paths[1])
        assert code == 1
        assert json.loads(out)["reason"] == "distinct-classes"

    def test_base_mismatch_is_input_error(self, capsys, tmp_path):
        p1 = write_entry(tmp_path, "aff1-hemi-trivial")
        p2 = write_entry(tmp_path, "abelian2-hemi-trivial")
        code, _, err = run(capsys, "iso", p1, p2)
        assert code == 2

    def test_requires_courant_section(self, capsys, tmp_path):
        path = write_entry(tmp_path, "aff1")
        code, _, err = run(capsys, "iso", path, path)
        assert code == 2


class TestCatalogCommands:
    def test_list(self, capsys):
        code, out, _ = run(capsys, "catalog", "list")
        assert code == 0
        names = [e["name"] for e in json.loads(out)["entries"]]
        assert "aff1" in names and "leibniz2" in names

    def test_show_round_trip(self, capsys):
        code, out, _ = run(capsys, "catalog", "show", "aff1-trivial")
        assert code == 0
        assert parse_document(out) == catalog_entry("aff1-trivial").document

    def test_show_unknown(self, capsys):
        code, _, err = run(capsys, "catalog", "show", "nope")
        assert code == 2
