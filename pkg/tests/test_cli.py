from __future__ import annotations

import csv
import io
import json
import subprocess
import sys

import pytest

from circlerep.cli import main, run


def call(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def payload(out):
    obj = json.loads(out)
    assert obj["status"] == "ok"
    return obj["payload"]


def test_table_circular(capsys):
    code, out, _ = call(capsys, "table", "circular", "--max", "9")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["m\\n"] + [str(i) for i in range(10)]
    assert rows[1 + 3][1 + 3] == "114"
    assert rows[1 + 9][1 + 9] == "7777314"
    assert rows[1][1:] == ["1"] * 10


def test_table_delannoy(capsys):
    code, out, _ = call(capsys, "table", "delannoy", "--max", "3")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0 and rows[3][3] == "13"


def test_identity(capsys):
    code, out, _ = call(capsys, "identity", "1")
    assert code == 0
    p = payload(out)
    assert p["terms"] == [{"coeff": "1", "loop": {"m": 1, "n": 1, "start": [0, 0], "steps": "D"}}]


def test_decompose_schwartz(capsys):
    code, out, _ = call(capsys, "decompose", "schwartz", "2")
    p = payload(out)
    assert code == 0
    assert len(p) == 6
    assert sum(x["mult"] for x in p) == 7


def test_decompose_induced(capsys):
    _, out, _ = call(capsys, "decompose", "induced", "●")
    labels = [x["label"] for x in payload(out)]
    assert {"kind": "P", "n": 1} in labels


def test_loops_and_orbits(capsys):
    _, out, _ = call(capsys, "loops", "enumerate", "2", "2")
    assert payload(out)["count"] == 16
    _, out, _ = call(capsys, "loops", "enumerate", "2", "2", "--orbits")
    assert len(payload(out)["orbits"]) == 5


def test_compose_files(capsys, tmp_path):
    _, out, _ = call(capsys, "loops", "enumerate", "1", "1")
    sq = [p for p in payload(out)["loops"] if p["steps"] != "D"][0]
    f = tmp_path / "sq.json"
    f.write_text(json.dumps({"src": 1, "dst": 1, "terms": [{"loop": sq, "coeff": "1"}]}))
    code, out, _ = call(capsys, "compose", str(f), str(f))
    terms = {t["loop"]["steps"]: t["coeff"] for t in payload(out)["terms"]}
    assert code == 0 and terms == {"D": "-1", "RU": "-2"}


def test_endalgebra(capsys):
    _, out, _ = call(capsys, "endalgebra", "1")
    p = payload(out)
    assert len(p["basis"]) == 2


def test_branch(capsys):
    _, out, _ = call(capsys, "branch", "induce", "-")
    assert payload(out)["decomposition"] == {"": 2, "b": 1, "w": 1}
    _, out, _ = call(capsys, "branch", "mackey", "bw")
    assert sum(payload(out)["decomposition"].values()) == 16


def test_special(capsys, tmp_path):
    _, out, _ = call(capsys, "special", "heller", "M(0)", "1")
    assert payload(out)["summands"] == [{"label": {"J": "+", "m": 1, "n": -1}, "mult": 1}]
    _, out, _ = call(capsys, "special", "homdim", "R(0)", "R(0)")
    assert payload(out) == {"hom_dim": 2}
    _, out, _ = call(capsys, "special", "make", "J+(0,2)")
    module = tmp_path / "m.json"
    module.write_text(json.dumps(payload(out)))
    _, out, _ = call(capsys, "special", "decompose", str(module))
    assert payload(out) == [{"label": {"J": "+", "m": 2, "n": 0}, "mult": 1}]


def test_saved_output_feeds_back(capsys, tmp_path):
    _, out, _ = call(capsys, "special", "make", "R(1)")
    module = tmp_path / "r.json"
    module.write_text(out)
    _, out, _ = call(capsys, "special", "decompose", str(module))
    assert payload(out) == [{"label": {"R": 1}, "mult": 1}]


def test_ss(capsys):
    _, out, _ = call(capsys, "ss", "image", "J+(0,2)")
    assert payload(out) == {"n": 1, "m": 1}
    _, out, _ = call(capsys, "ss", "image", "J+(0,1)")
    assert payload(out) is None
    _, out, _ = call(capsys, "ss", "tensor", "1,0", "0,1")
    assert payload(out) == [{"n": 1, "m": 1, "mult": 1}]


@pytest.mark.parametrize("argv,code,err_code", [
    (["bogus"], 2, "E_USAGE"),
    (["identity", "x"], 2, "E_USAGE"),
    (["compose", "/nonexistent.json", "/nonexistent.json"], 2, "E_INPUT"),
    (["branch", "induce", "bxq"], 2, "E_INPUT"),
    (["special", "heller", "Q(1)", "1"], 2, "E_INPUT"),
    (["special", "heller", "M(1)"], 2, "E_USAGE"),
    (["ss", "tensor", "1;2"], 2, "E_INPUT"),
    (["decompose", "schwartz", "0"], 2, "E_INPUT"),
])
def test_errors(capsys, argv, code, err_code):
    got, out, err = call(capsys, *argv)
    assert got == code and out == ""
    assert json.loads(err.strip().splitlines()[0])["error"]["code"] == err_code


def test_malformed_module_file(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = call(capsys, "special", "decompose", str(bad))
    assert code == 2 and "E_INPUT" in err
    bad.write_text(json.dumps({"dims": {"0": 1, "1": 1, "2": 1}, "up": {"0": [["1"]], "1": [["1"]]}}))
    code, _, err = call(capsys, "special", "decompose", str(bad))
    assert code == 2 and "E_INPUT" in err


def test_outputs_deterministic():
    a = run(["decompose", "schwartz", "4"])
    b = run(["decompose", "schwartz", "4"])
    assert a == b


def test_timing_goes_to_stderr(capsys):
    code, out, err = call(capsys, "--timing", "table", "circular", "--max", "2")
    assert code == 0 and "elapsed_ms" in err and "elapsed_ms" not in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "circlerep", "ss", "tensor", "1,1"],
                          capture_output=True, text=True, check=True)
    assert json.loads(proc.stdout)["payload"] == [{"n": 1, "m": 1, "mult": 1}]


def test_verify_quick_exit_code(capsys):
    code, out, _ = call(capsys, "--seed", "3", "verify", "--level", "quick")
    lines = out.strip().splitlines()
    assert code == 0
    assert len(lines) == 10 and lines[-1] == "9/9 criteria passed"
