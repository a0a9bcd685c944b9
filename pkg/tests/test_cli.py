import json
import subprocess
import sys

import pytest

from hyperop.cli import main
from hyperop.hypermap import are_isomorphic, from_json, to_json, underlying_flags

EX4 = {"kind": "oriented", "darts": 5, "rho0": [2, 3, 4, 5, 1], "rho2": [1, 5, 3, 2, 4]}


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def ex4(tmp_path):
    p = tmp_path / "ex4.json"
    p.write_text(json.dumps(EX4))
    return p


@pytest.mark.parametrize("argv,expected", [
    (["classify", "--matrix", "-2,-3;1,2"], "class=T order=2"),
    (["classify", "--matrix", "1,0;0,1"], "class=I order=1"),
    (["classify", "--matrix", "0,-1;1,1", "--projective"], "class=y order=3"),
    (["classify", "--matrix", "1,1;0,1"], "class=infinite order=infinite"),
    (["canon", "--matrix", "-2,-3;1,2"], "Y' X Y X Y' T"),
    (["canon", "--matrix", "1,0;0,1"], ""),
    (["canon", "--matrix", "0,1;1,0"], "T"),
])
def test_text_output(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and out == expected + "\n"


def test_exit_codes(capsys):
    code, out, err = run(capsys, "classify", "--matrix", "2,0;0,1")
    assert code == 1 and out == "" and err.startswith("hyperop: ") and err.count("\n") == 1
    code, _, err = run(capsys, "classify", "--matrix", "1,2;x")
    assert code == 2 and "malformed" in err
    code, _, _ = run(capsys, "enumerate", "--group", "S6")
    assert code == 1


def test_op_apply(capsys, ex4, tmp_path):
    out_path = tmp_path / "out.json"
    code, out, _ = run(capsys, "op-apply", "--word", "X T", "--map", str(ex4), "--out", str(out_path))
    assert code == 0 and "type=(5,5,3)" in out
    R = json.loads(out_path.read_text())
    assert R["rho2"] == [1, 4, 3, 5, 2]


def test_op_apply_empty_word_is_byte_identical(capsys, ex4, tmp_path):
    out_path = tmp_path / "same.json"
    assert run(capsys, "op-apply", "--word", "", "--map", str(ex4), "--out", str(out_path))[0] == 0
    R = json.loads(out_path.read_text())
    assert json.dumps(R["rho0"]) == json.dumps(EX4["rho0"]) and json.dumps(R["rho2"]) == json.dumps(EX4["rho2"])


def test_op_apply_reversal_twice(capsys, ex4, tmp_path):
    m1, m2 = tmp_path / "m1.json", tmp_path / "m2.json"
    assert run(capsys, "op-apply", "--word", "-I", "--map", str(ex4), "--out", str(m1))[0] == 0
    assert run(capsys, "op-apply", "--word", "-I", "--map", str(m1), "--out", str(m2))[0] == 0
    assert are_isomorphic(from_json(m2.read_text()), from_json(EX4))
    code, out, _ = run(capsys, "iso", "--map", str(m2), "--other", str(ex4))
    assert code == 0 and out.startswith("isomorphic=true")


def test_op_apply_case_mismatch(capsys, ex4):
    code, _, err = run(capsys, "op-apply", "--word", "x t", "--map", str(ex4))
    assert code == 1 and "case" in err


def test_unoriented_op_apply(capsys, tmp_path):
    p = tmp_path / "u.json"
    p.write_text(json.dumps(to_json(underlying_flags(from_json(EX4)))))
    code, out, _ = run(capsys, "op-apply", "--word", "t", "--map", str(p))
    assert code == 0 and "vertices=3" in out and "faces=1" in out


def test_json_round_trip(capsys, ex4, tmp_path):
    code, out, _ = run(capsys, "op-apply", "--word", "X T", "--map", str(ex4), "--json")
    data = json.loads(out)
    assert code == 0 and data["schema"] == 1 and data["info"]["type"] == [5, 5, 3]
    p = tmp_path / "again.json"
    p.write_text(out)
    code, out, _ = run(capsys, "map-info", "--map", str(p), "--json")
    assert code == 0 and json.loads(out)["type"] == [5, 5, 3]


def test_map_info(capsys, ex4):
    code, out, _ = run(capsys, "map-info", "--map", str(ex4))
    assert out.strip() == "type=(5,2,3) vertices=1 edges=3 faces=3 euler=2 genus=0 orientable=true"
    code, out2, _ = run(capsys, "map-info", "--rho0", "(1,2,3,4,5)", "--rho2", "(2,5,4)")
    assert out2 == out


def test_iso(capsys, ex4, tmp_path):
    tw = tmp_path / "tw.json"
    run(capsys, "op-apply", "--word", "X T", "--map", str(ex4), "--out", str(tw))
    code, out, _ = run(capsys, "iso", "--map", str(ex4), "--other", str(tw))
    assert code == 0 and out.strip() == "isomorphic=false"


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--group", "A5")
    assert code == 0 and len(out.strip().splitlines()) == 20
    code, out, _ = run(capsys, "enumerate", "--group", "C5")
    assert len(out.strip().splitlines()) == 7
    code, out, _ = run(capsys, "enumerate", "--group", "A5", "--orbits", "X Y T")
    sizes = sorted(int(ln.split("\t")[2]) for ln in out.splitlines() if ln.startswith("orbit"))
    assert sizes == [9, 10]


def test_enumerate_deterministic_across_threads(capsys):
    _, one, _ = run(capsys, "enumerate", "--group", "S4", "--orbits", "X, Y T")
    _, four, _ = run(capsys, "enumerate", "--group", "S4", "--orbits", "X, Y T", "--threads", "4")
    assert one == four


def test_orbits(capsys):
    code, out, _ = run(capsys, "orbits", "--group", "A5", "--op", "X", "--op", "Y", "--op", "T", "--json")
    data = json.loads(out)
    assert code == 0 and sorted(map(len, data["orbits"])) == [9, 10] and len(data["classes"]) == 19


def test_chirality(capsys):
    code, out, _ = run(capsys, "chirality", "--group", "A5", "--pair", "(1,2,3,4,5);(1,5)(3,4)",
                       "--word", "Y Y")
    lines = dict(ln.split(": ", 1) for ln in out.strip().splitlines())
    assert code == 0
    assert (lines["upper_order"], lines["lower_order"], lines["full_lower_order"]) == ("60", "3600", "216000")
    code, out, _ = run(capsys, "chirality", "--group", "A5", "--pair", "(1,2,3,4,5);(1,5)(3,4)",
                       "--word", "-I Y'", "--cover", "2", "--json")
    data = json.loads(out)
    assert (data["upper_order"], data["lower_order"]) == (3600, 60)
    code, _, _ = run(capsys, "chirality", "--group", "A5", "--pair", "(1,2,3,4,5);(1,5)(3,4)",
                     "--word", "X Y")
    assert code == 1
    code, _, _ = run(capsys, "chirality", "--group", "A5", "--pair", "(1,2,3);(1,2,3)", "--word", "T")
    assert code == 1


def test_module_entry_point(ex4):
    res = subprocess.run([sys.executable, "-m", "hyperop", "classify", "--matrix", "-2,-3;1,2"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "class=T order=2\n"
