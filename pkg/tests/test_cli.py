import json
import subprocess
import sys

import pytest

from qkgr.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_product_human(capsys):
    code, out, _ = run_cli(
        capsys, "product", "-k", "4", "-n", "9", "--lhs", "4,0,0,0", "--rhs", "4,3,2,1"
    )
    assert code == 0
    assert "O(5,4,3,2)" in out
    assert "- 3*q*O(3,2,1,0)" in out


def test_product_json_and_csv(capsys):
    code, out, _ = run_cli(
        capsys, "product", "-k", "2", "-n", "4", "--lhs", "2,2", "--rhs", "2,2", "--json"
    )
    assert code == 0
    assert json.loads(out) == {"terms": [{"q": 2, "partition": [0, 0], "coeff": 1}]}
    code, out, _ = run_cli(
        capsys, "product", "-k", "2", "-n", "4", "--lhs", "[2,2]", "--rhs", "[2,2]", "--csv"
    )
    assert code == 0
    assert out.splitlines() == ["q,partition,coeff", "2,0,0,1"]


def test_product_unit(capsys):
    code, out, _ = run_cli(capsys, "product", "-k", "2", "-n", "4", "--lhs", "0,0", "--rhs", "2,1")
    assert code == 0
    assert out.strip().endswith("= O(2,1)")


def test_malformed_partition_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "product", "-k", "2", "-n", "4", "--lhs", "3,0", "--rhs", "1,0")
    assert code == 2
    assert "error" in err


def test_unknown_suite_rejected():
    with pytest.raises(SystemExit) as info:
        main(["verify", "nope", "-k", "2", "-n", "4"])
    assert info.value.code == 2


def test_verify_json(capsys):
    code, out, _ = run_cli(capsys, "verify", "seidel", "-k", "3", "-n", "6", "--json")
    assert code == 0
    report = json.loads(out)
    assert report["ok"] is True and report["failures"] == 0
    assert report["suite"] == "seidel"


def test_verify_jobs_deterministic(capsys):
    code, out1, _ = run_cli(capsys, "verify", "curve-nbhd", "-k", "2", "-n", "6", "--json")
    assert code == 0
    code, out2, _ = run_cli(
        capsys, "verify", "curve-nbhd", "-k", "2", "-n", "6", "--json", "--jobs", "2"
    )
    assert code == 0
    assert out1 == out2


def test_verify_csv(capsys):
    code, out, _ = run_cli(capsys, "verify", "dmin", "-k", "2", "-n", "4", "--csv")
    assert code == 0
    header, row = out.splitlines()
    assert header == "suite,k,n,items,checks,failures,ok"
    assert row.startswith("dmin,2,4,")


def test_reduce_trace_gr6_17(capsys):
    code, out, _ = run_cli(
        capsys,
        "reduce",
        "-k", "6", "-n", "17",
        "--lhs", "10,8,6,4,2,0",
        "--rhs", "10,8,6,4,2,0",
        "--nu", "6,2,2,1,0,0",
        "--deg", "3",
        "--json",
    )
    assert code == 0
    trace = json.loads(out)
    assert [s["deg"] for s in trace["steps"]] == [2, 1, 0]
    assert trace["final"]["lhs"] == [9, 7, 5, 4, 2, 0]
    assert trace["final"]["nu"] == [11, 11, 10, 9, 9, 4]
    assert trace["value"] is None  # ring too large for the oracle


def test_reduce_attaches_value_when_small(capsys):
    # no rule applies to the diagonal tuple, so the oracle value rides along
    code, out, _ = run_cli(
        capsys,
        "reduce",
        "-k", "3", "-n", "6",
        "--lhs", "2,1,0", "--rhs", "2,1,0", "--nu", "2,1,0", "--deg", "1",
        "--json",
    )
    assert code == 0
    trace = json.loads(out)
    assert trace["steps"] == []
    assert trace["final"]["deg"] == 1
    assert trace["value"] == -1


def test_reduce_reaches_classical(capsys):
    code, out, _ = run_cli(
        capsys,
        "reduce",
        "-k", "3", "-n", "6",
        "--lhs", "2,1,0", "--rhs", "1,1,0", "--nu", "1,1,0", "--deg", "1",
        "--json",
    )
    assert code == 0
    trace = json.loads(out)
    assert trace["final"]["deg"] == 0
    from qkgr.partitions import context
    from qkgr.qk_engine import structure_constant

    want = structure_constant((2, 1, 0), (1, 1, 0), (1, 1, 0), 1, context(3, 6))
    assert trace["value"] == want


def test_reduce_degree_zero(capsys):
    code, out, _ = run_cli(
        capsys,
        "reduce",
        "-k", "2", "-n", "4",
        "--lhs", "1,0", "--rhs", "1,0", "--nu", "1,1", "--deg", "0",
    )
    assert code == 0
    assert "already degree 0" in out
    assert "classical value: 1" in out


def test_trunc_env_override(capsys, monkeypatch):
    monkeypatch.setenv("QKGR_TRUNC", "5")
    code, out, _ = run_cli(
        capsys, "product", "-k", "2", "-n", "4", "--lhs", "2,2", "--rhs", "2,2", "--json"
    )
    assert code == 0
    assert json.loads(out)["terms"][0]["q"] == 2


def test_console_script():
    proc = subprocess.run(
        [sys.executable, "-m", "qkgr.cli", "product", "-k", "2", "-n", "5", "--lhs", "1,1", "--rhs", "2,0"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "O(" in proc.stdout
