import json
import subprocess
import sys

import pytest

from coha.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("argv, expected", [
    (("--op", "raise:2", "--state", "0,1", "--n", "4"), "+1 * [0,1,2]"),
    (("--op", "lower:1", "--state", "0,1", "--n", "2"), "+1 * [0]"),
    (("--op", "H", "--state", "", "--n", "2"), "-1 * []"),
    (("--op", "tlower:1", "--state", "0,1", "--n", "2"), "-1 * [0]"),
    (("--op", "E:2", "--state", "1", "--n", "2"), "+1 * [0]"),
    (("--op", "raise:0", "--state", "0", "--n", "2"), "0"),
])
def test_apply(capsys, argv, expected):
    code, out, _ = run(capsys, "apply", *argv)
    assert code == 0
    assert out.strip() == expected


def test_apply_json(capsys):
    code, out, _ = run(capsys, "apply", "--op", "T:0", "--state", "", "--n", "2", "--format", "json")
    assert code == 0
    assert json.loads(out)["result"] == [{"coeff": "1", "index": [0]}]


def test_apply_parse_error(capsys):
    code, _, err = run(capsys, "apply", "--op", "H", "--state", "+1 * [0,x]", "--n", "2")
    assert code == 2
    assert "position 8" in err
    assert err.rstrip().endswith("^")


def test_apply_bad_operator(capsys):
    code, _, _ = run(capsys, "apply", "--op", "nope:1", "--state", "0", "--n", "2")
    assert code == 2


@pytest.mark.parametrize("check, n", [("serre", 4), ("clifford", 8), ("lemma-actions", 3),
                                      ("transpose", 3), ("he-duality", 3), ("equivalence", 3),
                                      ("kernel", 3)])
def test_verify_passes(capsys, check, n):
    code, out, _ = run(capsys, "verify", check, "--n", str(n))
    assert code == 0
    assert "PASS" in out


def test_verify_usage_errors(capsys):
    assert run(capsys, "verify", "serre", "--n", "0")[0] == 2
    assert run(capsys, "verify", "bogus", "--n", "2")[0] == 2
    assert run(capsys, "verify", "serre", "--n", "9")[0] == 2


def test_cap_override(capsys, monkeypatch):
    monkeypatch.setenv("COHA_MAX_N", "1")
    assert run(capsys, "verify", "clifford", "--n", "2")[0] == 2
    assert run(capsys, "verify", "clifford", "--n", "1")[0] == 0


def test_verify_json_schema(capsys):
    code, out, _ = run(capsys, "verify", "clifford", "--n", "3", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert list(data) == ["check", "n", "status", "relations_checked", "counterexamples", "elapsed_ms"]
    assert data["check"] == "clifford" and data["n"] == 3 and data["status"] == "pass"
    assert data["relations_checked"] == 27


@pytest.mark.parametrize("n, verdict", [(2, "EQUAL"), (5, "EQUAL")])
def test_cartan(capsys, n, verdict):
    code, out, _ = run(capsys, "cartan", "--n", str(n))
    assert code == 0
    assert out.strip().endswith(f"verdict: {verdict}")


def test_cartan_json_and_range(capsys):
    code, out, _ = run(capsys, "cartan", "--n", "3", "--format", "json")
    data = json.loads(out)
    assert data["extracted"] == data["expected"]
    assert run(capsys, "cartan", "--n", "1")[0] == 2


def test_report_all_deterministic_across_jobs(capsys):
    a = run(capsys, "report-all", "--n", "3", "--format", "json", "--no-timing")
    b = run(capsys, "report-all", "--n", "3", "--format", "json", "--no-timing", "--jobs", "3")
    assert a[0] == b[0] == 0
    assert a[1] == b[1]
    assert [r["check"] for r in json.loads(a[1])] == [
        "serre", "clifford", "lemma-actions", "transpose", "he-duality", "equivalence", "kernel"]


def test_console_entry_point():
    out = subprocess.run([sys.executable, "-m", "coha", "verify", "kernel", "--n", "2", "--no-timing"],
                         capture_output=True, text=True)
    assert out.returncode == 0
    assert out.stdout.strip() == "kernel n=2: PASS (15 relations)"
