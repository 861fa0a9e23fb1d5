import json

import multipres.cli as cli

from conftest import GOLDEN


def run(capsys, *argv):
    code = cli.main([str(a) for a in argv])
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_validate_ok(capsys, diamond_path):
    code, out, err = run(capsys, "validate", diamond_path)
    assert code == 0
    assert out == "ok\n"
    assert err == ""


def test_validate_reports_violations(capsys, tmp_path):
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
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(doc))
    code, out, err = run(capsys, "validate", p)
    assert code == 2
    assert "not a multifiltration: 1 violation(s)" in out
    assert "simplex 1<2<3 born at (0,0) before its facet 1<2" in out


def test_validate_notes_normalization(capsys, tmp_path):
    doc = {
        "r": 2,
        "vertices": [0],
        "simplices": [{"v": [0], "births": [[0, 0], [2, 2]]}],
    }
    p = tmp_path / "comparable.json"
    p.write_text(json.dumps(doc))
    code, out, err = run(capsys, "validate", p)
    assert code == 0
    assert "ok" in out
    assert "births normalized for: 0" in out


def test_bad_json_is_parse_failure(capsys, tmp_path):
    p = tmp_path / "mangled.json"
    p.write_text("{]")
    code, out, err = run(capsys, "validate", p)
    assert code == 3
    assert err.startswith("error:")

    p2 = tmp_path / "schema.json"
    p2.write_text(json.dumps({"r": 2, "vertices": [0]}))
    assert run(capsys, "validate", p2)[0] == 3


def test_missing_births_is_invalid_input(capsys, tmp_path):
    doc = {
        "r": 2,
        "vertices": [0, 1],
        "simplices": [{"v": [0], "births": [[0, 0]]}],
    }
    p = tmp_path / "partial.json"
    p.write_text(json.dumps(doc))
    code, out, err = run(capsys, "present", p, "-n", 1)
    assert code == 2
    assert err.startswith("invalid input:")


def test_present_matches_golden(capsys, diamond_path):
    expected = (GOLDEN / "present_n1.txt").read_text()
    code, out, err = run(capsys, "present", diamond_path, "-n", 1)
    assert code == 0
    assert out == expected


def test_present_is_deterministic(capsys, diamond_path):
    first = run(capsys, "present", diamond_path, "-n", 1)
    second = run(capsys, "present", diamond_path, "-n", 1)
    assert first == second
    third = run(capsys, "hilbert", diamond_path, "-n", 1, "--format", "json")
    fourth = run(capsys, "hilbert", diamond_path, "-n", 1, "--format", "json")
    assert third == fourth


def test_present_json_formats(capsys, diamond_path):
    code, dense, _ = run(capsys, "present", diamond_path, "-n", 1, "--format", "json")
    assert code == 0
    doc = json.loads(dense)
    assert "entries" in doc["matrices"]["f"]
    code, sparse, _ = run(
        capsys, "present", diamond_path, "-n", 1, "--format", "sparse"
    )
    assert code == 0
    assert "triples" in json.loads(sparse)["matrices"]["f"]


def test_hilbert_grid(capsys, diamond_path):
    code, out, err = run(capsys, "hilbert", diamond_path, "-n", 1)
    assert code == 0
    assert out == "1 1 1\n0 1 1\n0 0 1\n"


def test_hilbert_fields_and_formats(capsys, diamond_path):
    for field in ("gf:2", "gf:3", "q"):
        code, out, _ = run(
            capsys, "hilbert", diamond_path, "-n", 1, "--field", field
        )
        assert (code, out) == (0, "1 1 1\n0 1 1\n0 0 1\n")

    code, out, _ = run(capsys, "hilbert", diamond_path, "-n", 1, "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "x1,x2,dim"
    assert lines[1] == "0,0,0"
    assert "2,2,1" in lines

    code, out, _ = run(capsys, "hilbert", diamond_path, "-n", 1, "--format", "json")
    doc = json.loads(out)
    assert doc["field"] == "gf:2"
    assert {"grade": [0, 2], "dim": 1} in doc["values"]


def test_hilbert_box_flag(capsys, diamond_path):
    code, out, _ = run(capsys, "hilbert", diamond_path, "-n", 1, "--box", "1,1")
    assert code == 0
    assert out == "0 1\n0 0\n"


def test_hilbert_jobs_matches_serial(capsys, diamond_path):
    serial = run(capsys, "hilbert", diamond_path, "-n", 1)
    parallel = run(capsys, "hilbert", diamond_path, "-n", 1, "--jobs", 2)
    assert serial == parallel


def test_out_flag_writes_file(capsys, tmp_path, diamond_path):
    target = tmp_path / "grid.txt"
    code, out, err = run(
        capsys, "hilbert", diamond_path, "-n", 1, "--out", target
    )
    assert code == 0
    assert out == ""
    assert target.read_text() == "1 1 1\n0 1 1\n0 0 1\n"


def test_close_births_flag(capsys, tmp_path):
    doc = {
        "r": 2,
        "vertices": [0, 1, 2, 3],
        "simplices": [
            {"v": [0, 1], "births": [[0, 2], [2, 0]]},
            {"v": [0, 2], "births": [[0, 2], [2, 0]]},
            {"v": [1, 2], "births": [[1, 1], [2, 0]]},
            {"v": [1, 3], "births": [[0, 2], [1, 1]]},
            {"v": [2, 3], "births": [[0, 2], [1, 1]]},
            {"v": [1, 2, 3], "births": [[1, 2], [2, 1]]},
        ],
    }
    p = tmp_path / "tops.json"
    p.write_text(json.dumps(doc))
    assert run(capsys, "present", p, "-n", 1)[0] == 2
    code, out, _ = run(capsys, "hilbert", p, "-n", 1, "--close-births")
    assert code == 0
    assert out == "1 1 1\n0 1 1\n0 0 1\n"


def test_check_ok(capsys, diamond_path):
    code, out, err = run(capsys, "check", diamond_path, "-n", 1, "--field", "gf:3")
    assert code == 0
    assert out == "ok: presented and simplicial homology agree at 9 grades over GF(3)\n"


def test_check_mismatch_exit_code(capsys, monkeypatch, diamond_path):
    from multipres.homology import Mismatch, OracleReport

    def fake(M, n, box, field, jobs=1, C=None):
        return OracleReport(
            ok=False,
            grades_checked=1,
            mismatch=Mismatch(grade=(0, 2), complex_dim=0, oracle_dim=1),
        )

    monkeypatch.setattr(cli, "oracle_check", fake)
    code, out, err = run(capsys, "check", diamond_path, "-n", 1)
    assert code == 4
    assert (
        out
        == "mismatch at (0,2): presentation gives 0, simplicial homology gives 1\n"
    )


def test_export_macaulay2(capsys, diamond_path):
    code, out, _ = run(capsys, "export", diamond_path, "-n", 1)
    assert code == 0
    assert "kk = QQ;" in out
    assert "assert(g * f == 0);" in out
    code, out, _ = run(
        capsys, "export", diamond_path, "-n", 1, "--format", "cas", "--field", "gf:7"
    )
    assert code == 0
    assert "kk = ZZ/7;" in out
    code, out, _ = run(capsys, "export", diamond_path, "-n", 1, "--format", "json")
    assert json.loads(out)["ring"]["field"] == {"kind": "rational"}


def test_bad_field_spec(capsys, diamond_path):
    code, out, err = run(
        capsys, "hilbert", diamond_path, "-n", 1, "--field", "gf:6"
    )
    assert code == 2
    assert err.startswith("error:")


def test_grid_needs_two_parameters(capsys, tmp_path):
    doc = {
        "r": 1,
        "vertices": [0, 1],
        "simplices": [
            {"v": [0], "births": [[0]]},
            {"v": [1], "births": [[1]]},
            {"v": [0, 1], "births": [[2]]},
        ],
    }
    p = tmp_path / "line.json"
    p.write_text(json.dumps(doc))
    code, out, err = run(capsys, "hilbert", p, "-n", 0, "--format", "grid")
    assert code == 2
    code, out, err = run(capsys, "hilbert", p, "-n", 0)
    assert code == 0
    assert out.splitlines()[0] == "x1,dim"
