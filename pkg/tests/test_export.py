import json
import random

import pytest

from multipres import (
    FieldSpec,
    IncompleteInputError,
    ParseError,
    SchemaError,
    UnsupportedDialectError,
    ValidationFailedError,
    bundle_to_json,
    export_cas,
    filtration_from_doc,
    import_filtration,
    macaulay2_script,
    presentation_bundle,
    presentation_complex,
    presentation_from_bundle,
)

from randgen import random_multifiltration


def test_bundle_roundtrip_is_exact(diamond):
    for n in (0, 1, 2):
        C = presentation_complex(diamond, n)
        for sparse in (True, False):
            text = bundle_to_json(C, r=diamond.r, sparse=sparse)
            assert presentation_from_bundle(text) == C


def test_bundle_roundtrip_on_random_instances():
    rng = random.Random(404)
    for _ in range(10):
        M = random_multifiltration(rng, rng.choice([1, 2, 3]))
        C = presentation_complex(M, 1)
        assert presentation_from_bundle(bundle_to_json(C, r=M.r)) == C


def test_bundle_structure(diamond):
    C = presentation_complex(diamond, 1)
    doc = presentation_bundle(C, field=FieldSpec.gf(2), r=2)
    assert doc["ring"] == {
        "r": 2,
        "variables": ["x1", "x2"],
        "field": {"kind": "prime", "p": 2},
    }
    assert len(doc["modules"]["domain"]) == 7
    assert len(doc["modules"]["middle"]) == 10
    assert len(doc["modules"]["codomain"]) == 4
    assert doc["modules"]["middle"][0] == {
        "block": "0<1",
        "index": "(0,2)",
        "grade": [0, 2],
    }
    assert doc["matrices"]["f"]["triples"][0] == [0, 0, 1]


def test_bundle_rejects_tampered_module_table(diamond):
    C = presentation_complex(diamond, 1)
    doc = presentation_bundle(C, r=2)
    doc["modules"]["middle"][0]["grade"] = [9, 9]
    with pytest.raises(SchemaError):
        presentation_from_bundle(doc)
    with pytest.raises(SchemaError):
        presentation_from_bundle({"format": "something-else"})
    with pytest.raises(ParseError):
        presentation_from_bundle("{not json")


def test_macaulay2_script_content(diamond):
    C = presentation_complex(diamond, 1)
    script = macaulay2_script(C, r=2)
    assert "kk = QQ;" in script
    assert "R = kk[x1, x2, Degrees => {{1, 0}, {0, 1}}];" in script
    # Generator degree lists, in canonical column order.
    assert (
        "A = R^{-{2, 2}, -{2, 2}, -{2, 1}, -{1, 2}, -{1, 2}, -{1, 2}, -{2, 1}};"
        in script
    )
    assert (
        "B = R^{-{0, 2}, -{2, 0}, -{0, 2}, -{2, 0}, -{1, 1}, -{2, 0}, "
        "-{0, 2}, -{1, 1}, -{0, 2}, -{1, 1}};" in script
    )
    assert "D = R^{-{0, 0}, -{0, 0}, -{0, 0}, -{0, 0}};" in script
    # Entries are monomials spanning the grade gap.
    assert "{x1^2, 0, 0, 0, 0, 0, 0}" in script
    assert "{-x2^2, 0, 0, 0, 0, 0, 0}" in script
    assert "-x1*x2" in script
    assert "assert(g * f == 0);" in script
    assert "H = (kernel g) / (image f);" in script
    assert "prune H" in script

    mod5 = macaulay2_script(C, field=FieldSpec.gf(5), r=2)
    assert "kk = ZZ/5;" in mod5


def test_macaulay2_degree_lists_match_modules(diamond):
    import re

    C = presentation_complex(diamond, 1)
    script = macaulay2_script(C, r=2)

    def degrees(name):
        line = next(
            l for l in script.splitlines() if l.startswith(name + " = R^")
        )
        return [
            tuple(int(c) for c in m.group(1).split(","))
            for m in re.finditer(r"-\{([0-9, ]+)\}", line)
        ]

    assert degrees("A") == list(C.f.col_grades)
    assert degrees("B") == list(C.f.row_grades)
    assert degrees("D") == list(C.g.row_grades)


def test_export_zero_map_for_degree_zero(diamond):
    C = presentation_complex(diamond, 0)
    script = macaulay2_script(C, r=2)
    assert "D = R^0;" in script
    assert "g = map(D, B, 0);" in script


def test_export_dialects(diamond):
    C = presentation_complex(diamond, 1)
    assert export_cas(C, "macaulay2", r=2) == macaulay2_script(C, r=2)
    assert json.loads(export_cas(C, "json", r=2))["n"] == 1
    with pytest.raises(UnsupportedDialectError):
        export_cas(C, "singular", r=2)


def test_import_filtration_error_classes(tmp_path, diamond_doc):
    bad_json = tmp_path / "bad.json"
    bad_json.write_text("{")
    with pytest.raises(ParseError):
        import_filtration(bad_json)

    with pytest.raises(ParseError):
        import_filtration(tmp_path / "missing.json")

    for mangle in (
        lambda d: d.pop("r"),
        lambda d: d.update(r="two"),
        lambda d: d.update(vertices=[0, [1]]),
        lambda d: d.update(simplices=[{"births": [[0, 0]]}]),
        lambda d: d.update(simplices=[{"v": []}]),
        lambda d: d.update(simplices="nope"),
    ):
        doc = json.loads(json.dumps(diamond_doc))
        mangle(doc)
        p = tmp_path / "schema.json"
        p.write_text(json.dumps(doc))
        with pytest.raises(SchemaError):
            import_filtration(p)

    # Well-formed but missing births for a face, without closing.
    partial = {
        "r": 2,
        "vertices": [0, 1, 2],
        "simplices": [{"v": [0, 1, 2], "births": [[1, 2], [2, 1]]}],
    }
    p = tmp_path / "partial.json"
    p.write_text(json.dumps(partial))
    with pytest.raises(IncompleteInputError):
        import_filtration(p)
    M = import_filtration(p, close=True)
    assert M.birth((0, 1)).elements == ((1, 2), (2, 1))


def test_import_filtration_validation_failure(tmp_path):
    doc = {
        "r": 2,
        "vertices": [1, 2, 3],
        "simplices": [
            {"v": [1], "births": [[0, 0]]},
            {"v": [2], "births": [[0, 0]]},
            {"v": [3], "births": [[0, 0]]},
            {"v": [1, 2], "births": [[1, 1]]},
            {"v": [1, 3], "births": [[0, 0]]},
            {"v": [2, 3], "births": [[0, 0]]},
            {"v": [1, 2, 3], "births": [[0, 0]]},
        ],
    }
    p = tmp_path / "invalid.json"
    p.write_text(json.dumps(doc))
    with pytest.raises(ValidationFailedError) as exc:
        import_filtration(p)
    report = exc.value.report
    witnesses = {(v.simplex, v.facet, v.grade) for v in report.violations}
    assert ("1<2<3", "1<2", (0, 0)) in witnesses
    M = import_filtration(p, require_valid=False)
    assert not M.validate().ok


def test_comparable_births_accepted_with_flag(tmp_path):
    doc = {
        "r": 2,
        "vertices": [0],
        "simplices": [{"v": [0], "births": [[0, 0], [1, 1]]}],
    }
    p = tmp_path / "comparable.json"
    p.write_text(json.dumps(doc))
    M = import_filtration(p)
    assert M.validate().normalized == ("0",)
    assert M.birth((0,)).elements == ((0, 0),)


def test_filtration_from_doc_rejects_duplicate_entries():
    doc = {
        "r": 1,
        "vertices": [0],
        "simplices": [
            {"v": [0], "births": [[0]]},
            {"v": [0], "births": [[1]]},
        ],
    }
    with pytest.raises(SchemaError):
        filtration_from_doc(doc)
