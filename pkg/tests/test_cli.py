import json

import pytest

from kantorlab.cli import main


@pytest.fixture
def m2(tmp_path):
    path = tmp_path / "m2.json"
    assert main(["construct", "matrix", "--param", "k=2", "--out", str(path)]) == 0
    return path


def test_square_identity_seed(m2, capsys):
    assert main(["square", "--algebra", str(m2), "--u", "1,0,0,1"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert [0, 0, 0, "-1"] in data["products"]["m"]


def test_square_generic(m2, capsys):
    assert main(["square", "--algebra", str(m2), "--generic-u"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert [0, 0, 0, "-u0"] in data["products"]["m"]


def test_check_exit_codes(tmp_path, capsys):
    oct_path, sq = tmp_path / "oct.json", tmp_path / "oct_sq_e1.json"
    main(["construct", "octonions", "--out", str(oct_path)])
    main(["square", "--algebra", str(oct_path), "--u", "0,1,0,0,0,0,0,0", "--out", str(sq)])
    capsys.readouterr()
    assert main(["check", "--algebra", str(sq), "--identity", "assoc(m;x,y,z)", "--method", "generic"]) == 1
    assert "witness" in json.loads(capsys.readouterr().out)
    assert main(["check", "--algebra", str(sq), "--identity", "m(m(x,y),x) - m(x,m(y,x))"]) == 0


def test_variety(tmp_path):
    p = tmp_path / "dor.json"
    main(["construct", "dorofeev", "--out", str(p)])
    assert main(["variety", "--algebra", str(p), "--name", "right_alternative"]) == 0
    assert main(["variety", "--algebra", str(p), "--name", "left_alternative"]) == 1


def test_input_errors(m2, tmp_path):
    assert main(["check", "--algebra", str(m2), "--identity", "m(x,"]) == 2
    assert main(["square", "--algebra", str(tmp_path / "missing.json"), "--u", "1"]) == 2
    assert main(["square", "--algebra", str(m2), "--u", "1,2"]) == 2
    assert main(["construct", "nonsense"]) == 2
    assert main(["variety", "--algebra", str(m2), "--name", "nonsense"]) == 2
    assert main(["frobnicate"]) == 2


def test_analyze_and_iso(m2, capsys):
    assert main(["analyze", "--algebra", str(m2)]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["jacobi_dim"] == 0 and rep["derivation_dim"] == 3 and rep["unit"] == ["1", "0", "0", "1"]
    assert main(["iso", "--algebra", str(m2), "--u", "1,0,0,0"]) == 1
    assert main(["iso", "--algebra", str(m2), "--u", "1,0,0,1"]) == 0


def test_search(tmp_path, capsys):
    spec = tmp_path / "s.json"
    spec.write_text(json.dumps({"variety": "lie", "dim": 2, "coeffs": ["-1", "0", "1"], "nontrivial": True}))
    assert main(["search", "--spec", str(spec)]) == 0
    assert len(json.loads(capsys.readouterr().out)["algebras"]) == 2


def test_mine_and_cross_check(tmp_path, capsys):
    d = tmp_path / "samples"
    d.mkdir()
    main(["construct", "matrix", "--param", "k=2", "--out", str(d / "a.json")])
    main(["construct", "quaternions", "--out", str(d / "b.json")])
    out = tmp_path / "ids.txt"
    assert main(["mine", "--samples", str(d), "--kantor-seeds", "2", "--degree", "3", "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0].endswith("identity space dim 6")
    assert "m(x1,m(x2,x3)) - m(m(x1,x2),x3)" in lines
    assert main(["cross-check", "--samples", str(d), "--kantor-seeds", "1", "--seed", "9",
                 "--identities", str(out)]) == 0
    out.write_text("m(x1,x2) - m(x2,x1)\n")
    assert main(["cross-check", "--samples", str(d), "--identities", str(out)]) == 1


def test_g_triples_and_alt_system(tmp_path, capsys):
    p = tmp_path / "oct.json"
    main(["construct", "octonions", "--out", str(p)])
    capsys.readouterr()
    assert main(["g-triples", "--algebra", str(p)]) == 0
    rows = json.loads(capsys.readouterr().out)
    assert len(rows) == 168 and {r["factor"] for r in rows} == {"-4"}
    assert main(["alt-system", "--algebra", str(p)]) == 0
    assert json.loads(capsys.readouterr().out)["solutions"] == []


def test_suite_single_case(capsys):
    assert main(["suite", "--case", "T-nil", "--json"]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["passed"] and rep["cases"][0]["id"] == "T-nil"
    assert main(["suite", "--case", "T-nope"]) == 2


def test_registry(capsys):
    assert main(["registry"]) == 0
    assert "[associative] products=m" in capsys.readouterr().out
