from __future__ import annotations

import io
import json
import shutil
import subprocess

import pytest

from qct.cli import run
from qct.modules import build_M
from qct.quiver import parse_quiver

from conftest import data_path, load, schema_validator


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run([str(a) for a in argv], out, err)
    return code, out.getvalue(), err.getvalue()


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


TWELVE = data_path("twelve")
VERTEX22 = data_path("vertex22")
LAT = data_path("lattice23")


def test_degree_lattice23():
    code, out, _ = call("degree", LAT)
    assert code == 0 and out.strip() == "12"


def test_check_twelve_n2_fails_with_flow_violations():
    code, out, _ = call("check", TWELVE, "--n", 2)
    assert code == 1
    assert "flow" in out
    code, out, _ = call("check", TWELVE, "--n", 2, "--format", "json")
    data = json.loads(out)
    assert data["verdict"] is False and data["pre_admissible"] is True
    assert {v["rule"] for v in data["violations"]} == {"flow"}


def test_verify_twelve_n3_passes():
    code, out, _ = call("verify", TWELVE, "--n", 3, "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["pass"] is True and data["counterexamples"] == []


def test_verify_with_gens_file(tmp_path):
    q = load("twelve")
    gens = write(tmp_path, "m3.json", json.dumps(build_M(q, 3).to_json()))
    code, out, _ = call("verify", TWELVE, "--n", 2, "--gens", gens)
    assert code == 1 and out.startswith("fail")
    code, _, _ = call("verify", TWELVE, "--n", 3, "--gens", gens, "--field", 3)
    assert code == 0


def test_verify_not_admissible_without_gens():
    code, out, _ = call("verify", TWELVE, "--n", 2, "--format", "json")
    assert code == 1
    assert "note" in json.loads(out)


def test_nz(tmp_path):
    q = load("twelve")
    gens = write(tmp_path, "m3.json", json.dumps(build_M(q, 3).to_json()))
    code, out, _ = call("nz", TWELVE, "--n", 3, "--gens", gens, "--format", "json")
    assert code == 1
    data = json.loads(out)
    assert data["admits_nZ"] is False and data["verify"]["pass"] is False
    a5 = write(tmp_path, "a5.q", "1 -> 2\n2 -> 3\n3 -> 4\n4 -> 5\n")
    assert call("nz", a5, "--n", 2)[0] == 0


def test_usage_errors(tmp_path):
    assert call("check", TWELVE)[0] == 2  # --n missing
    assert call("module", TWELVE)[0] == 2
    assert call("check", TWELVE, "--n", 0)[0] == 2
    assert call("degree", TWELVE, "--field", 4)[0] == 2
    assert call("nonsense", TWELVE)[0] == 2
    assert call("degree", str(tmp_path / "missing.q"))[0] == 2
    assert call("degree", TWELVE, "--format", "dot")[0] == 0
    assert call("check", TWELVE, "--n", 3, "--format", "dot")[0] == 2


def test_malformed_file(tmp_path):
    bad = write(tmp_path, "bad.q", "1 -> 2\n3 => 4\n")
    code, _, err = call("degree", bad)
    assert code == 2
    assert "line 2" in err and "column 3" in err


def test_disconnected(tmp_path):
    q = write(tmp_path, "two.q", "1 -> 2\n2 -> 3\n3 -> 4\n5 -> 6\n6 -> 7\n")
    code, _, err = call("check", q, "--n", 3)
    assert code == 2 and "--per-component" in err
    code, out, _ = call("check", q, "--n", 3, "--per-component", "--format", "json")
    data = json.loads(out)
    assert code == 1
    assert [d["result"]["verdict"] for d in data] == [True, False]
    code, out, _ = call("degree", q, "--per-component")
    assert code == 0
    assert out.splitlines() == ["# component 0: 1 2 3 4", "3", "# component 1: 5 6 7", "2"]


def test_module_and_subcats():
    code, out, _ = call("module", VERTEX22, "--n", 2)
    assert code == 0
    assert "2 8/3" in out.split("  ")
    code, out, _ = call("module", TWELVE, "--n", 2)
    assert code == 1
    code, out, _ = call("subcats", LAT, "--format", "json")
    data = json.loads(out)
    assert [row["n"] for row in data] == [1, 2, 3, 4, 6, 12]
    assert [len(row["subcategories"]) for row in data] == [1] * 6


def test_module_cycle(tmp_path):
    c4 = write(tmp_path, "c4.q", "1 -> 2\n2 -> 3\n3 -> 4\n4 -> 1\n")
    code, out, _ = call("module", c4, "--n", 2, "--format", "json")
    assert code == 0
    assert len(json.loads(out)) == 2
    code, out, _ = call("verify", c4, "--n", 2)
    assert code == 0


def test_lattice_outputs():
    code, out, _ = call("lattice", LAT)
    assert code == 0 and out.splitlines()[0] == "N = 12"
    code, out, _ = call("lattice", LAT, "--format", "dot")
    assert out.startswith("digraph ct_lattice")
    assert out.count(" -> ") == 7


def test_flow_paths_text():
    code, out, _ = call("flow-paths", TWELVE)
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 6
    assert all(line.endswith("k+q=3") for line in lines)


def test_ar_quiver_default_dot():
    code, out, _ = call("ar-quiver", VERTEX22)
    assert code == 0
    assert out.startswith("digraph ar_quiver")


def test_generate_round_trip(tmp_path):
    code, out, _ = call("generate", data_path("loop_tail"), "--n", 3, "--seed", 4)
    assert code == 0
    q = parse_quiver(out)
    path = write(tmp_path, "gen.q", out)
    assert call("check", path, "--n", 3)[0] == 0
    assert "_pad0" in q.vertices


JSON_CASES = [
    (("check", TWELVE, "--n", 3), "admissibility_report"),
    (("check", VERTEX22, "--n", 3), "admissibility_report"),
    (("flow-paths", TWELVE), "flow_paths"),
    (("degree", LAT), "divisor_lattice"),
    (("module", TWELVE, "--n", 3), "module_output"),
    (("module", TWELVE, "--n", 2), "module_output"),
    (("subcats", VERTEX22), "subcats"),
    (("lattice", LAT), "ct_lattice"),
    (("verify", VERTEX22, "--n", 2), "verify_report"),
    (("nz", TWELVE, "--n", 3), "nz_report"),
    (("ar-quiver", TWELVE), "ar_quiver"),
    (("generate", TWELVE, "--n", 3, "--seed", 1), "generate"),
]


@pytest.mark.parametrize("argv,schema", JSON_CASES)
def test_json_validates_and_matches_text(argv, schema):
    code_json, out, _ = call(*argv, "--format", "json")
    schema_validator(schema).validate(json.loads(out))
    code_text, _, _ = call(*argv, "--format", "text")
    assert code_json == code_text


@pytest.mark.parametrize("argv,schema", JSON_CASES[:6])
def test_deterministic(argv, schema):
    assert call(*argv, "--format", "json") == call(*argv, "--format", "json")


@pytest.mark.skipif(shutil.which("qct") is None, reason="console script not installed")
def test_console_script():
    proc = subprocess.run(["qct", "degree", LAT], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "12"
    proc = subprocess.run(["qct", "check", TWELVE, "--n", "2"], capture_output=True, text=True)
    assert proc.returncode == 1
