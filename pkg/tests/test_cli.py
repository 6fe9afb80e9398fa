import csv
import json
import subprocess
import sys

import pytest

from brauerlab.cli import main, run_suite


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    return code, json.loads(out)


def test_enumerate_text(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "3")
    assert code == 0
    assert len(out.strip().splitlines()) == 15
    assert out.splitlines()[0] == "(1 2)(3 4)(5 6)"


def test_enumerate_rows_labels(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "2", "--labels", "rows")
    assert code == 0
    assert out.splitlines() == ["(1 1')(2 2')", "(1 2)(1' 2')", "(1 2')(2 1')"]


def test_enumerate_json(capsys):
    code, data = run_json(capsys, "enumerate", "--n", "2")
    assert code == 0
    assert data["count"] == 3
    assert data["diagrams"][1] == [[1, 3], [2, 4]]


def test_mult(capsys):
    code, out, _ = run(capsys, "mult", "--n", "2", "(1 3)(2 4)", "(1 3)(2 4)")
    assert code == 0
    assert out.strip() == "(x)*(1 3)(2 4)"
    code, out, _ = run(capsys, "mult", "--n", "2", "--delta", "-2", "(1 3)(2 4)", "(1 3)(2 4)")
    assert out.strip() == "-2*(1 3)(2 4)"
    code, data = run_json(capsys, "mult", "--n", "2", "(1 4)(2 3)", "(1 4)(2 3)")
    assert code == 0 and data["terms"] == [{"diagram": [[1, 2], [3, 4]], "coeff": [1]}]


def test_mult_rows_labels(capsys):
    code, out, _ = run(capsys, "mult", "--n", "2", "--labels", "rows", "(1 2')(2 1')", "(1 2)(1' 2')")
    assert code == 0
    assert out.strip() == "(1 2)(1' 2')"


def test_star(capsys):
    code, out, _ = run(capsys, "star", "--n", "2", "(1 2)(3 4)", "(2 3)")
    assert code == 0 and out.strip() == "(1 3)(2 4)"
    code, out, _ = run(capsys, "star", "--n", "2", "(1 2)(3 4)", "1 3 2 4")
    assert out.strip() == "(1 3)(2 4)"


def test_xbasis(capsys):
    code, data = run_json(capsys, "xbasis", "--n", "2")
    assert code == 0 and len(data["elements"]) == 3
    code, out, _ = run(capsys, "xbasis", "--n", "3", "--lambda", "4,2")
    assert code == 0 and len(out.strip().splitlines()) == 9
    assert out.startswith("X[4,2;")


def test_kernel_example(capsys, tmp_path):
    csv_path = tmp_path / "k.csv"
    code, data = run_json(capsys, "kernel", "--n", "2", "--m", "1", "--check-theorem", "--csv", str(csv_path))
    assert code == 0
    assert data["dimension"] == 1 and data["report"]["pass"]
    rows = list(csv.DictReader(csv_path.open()))
    assert {r["vector"] for r in rows} == {"1"}
    assert len(rows) == 3


def test_kernel_guardrail_is_usage_error(capsys, monkeypatch):
    monkeypatch.setenv("BRAUERLAB_MAX_COLUMNS", "10")
    code, data = run_json(capsys, "kernel", "--n", "2", "--m", "1")
    assert code == 2 and "BRAUERLAB_MAX_COLUMNS" in data["error"]


@pytest.mark.parametrize("argv", [
    ["enumerate", "--n", "0"],
    ["enumerate", "--n", "7"],
    ["enumerate"],
    ["mult", "--n", "2", "(1 2)(3 4", "(1 2)(3 4)"],
    ["mult", "--n", "3", "(1 2)(3 4)", "(1 2)(3 4)"],
    ["star", "--n", "2", "(1 2)(3 4)", "(1 9)"],
    ["xbasis", "--n", "3", "--lambda", "3,3"],
    ["xbasis", "--n", "3", "--lambda", "4,4"],
    ["kernel", "--n", "2", "--m", "0"],
    ["verify", "--suite", "nope"],
    ["verify", "--max-n", "0"],
    ["frobnicate"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert err.startswith("brauerlab: error:") and len(err.strip().splitlines()) == 1
    code, out, _ = run(capsys, *argv, "--format", "json")
    assert code == 2
    assert json.loads(out) == {"error": json.loads(out)["error"], "exit_code": 2}


def test_verify_relations_passes(capsys):
    code, data = run_json(capsys, "verify", "--suite", "relations")
    assert code == 0 and data["pass"]
    assert all("suite_wall_time" not in r for r in data["reports"])


def test_verify_timing_flag(capsys):
    code, data = run_json(capsys, "verify", "--suite", "relations", "--max-n", "2", "--timing")
    assert all("suite_wall_time" in r for r in data["reports"])


def test_verify_all_reports_the_coefficient_witness(capsys):
    # every check passes except the coefficient-one claim, which fails at (4,2)
    code, data = run_json(capsys, "verify", "--suite", "all", "--max-n", "3", "--max-m", "2")
    failed = [r for r in data["reports"] if not r["pass"]]
    assert code == 1
    assert [(r["check"], r["lambda"]) for r in failed] == [("lemma27", "4,2")]
    assert failed[0]["detail"]["identity"] is True
    assert failed[0]["detail"]["distinguished_coeff"] == 2


def test_failed_reports_carry_a_witness():
    for r in run_suite("all", 3, 2):
        if not r["pass"]:
            assert r["detail"]


def test_out_file(capsys, tmp_path):
    target = tmp_path / "o.json"
    code, out, _ = run(capsys, "enumerate", "--n", "2", "--format", "json", "--out", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["count"] == 3


def test_byte_identical_output(tmp_path):
    cmd = [sys.executable, "-m", "brauerlab.cli", "verify", "--suite", "staraction", "--format", "json"]
    first = subprocess.run(cmd, capture_output=True, check=False).stdout
    second = subprocess.run(cmd, capture_output=True, check=False).stdout
    assert first and first == second
    cmd = [sys.executable, "-m", "brauerlab.cli", "kernel", "--n", "3", "--m", "1"]
    assert subprocess.run(cmd, capture_output=True).stdout == subprocess.run(cmd, capture_output=True).stdout


def test_console_script_entry_point():
    res = subprocess.run(["brauerlab", "enumerate", "--n", "1"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.strip() == "(1 2)"


def test_configs_validate():
    from brauerlab.config import KernelConfig, VerifyConfig

    assert VerifyConfig().suites() == ("relations", "staraction", "xbasis", "filtration", "kernel")
    assert VerifyConfig("kernel").suites() == ("kernel",)
    assert VerifyConfig(max_n=2).to_dict()["max_n"] == 2
    for bad in [dict(suite="nope"), dict(max_n=0), dict(max_m=-1)]:
        with pytest.raises(ValueError):
            VerifyConfig(**bad)
    assert KernelConfig(3, 1).columns == 64
    with pytest.raises(ValueError):
        KernelConfig(2, 0)
