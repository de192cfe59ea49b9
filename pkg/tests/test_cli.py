from __future__ import annotations

import json

import pytest

from fiqs.census import ClaimResult, VerifyReport
from fiqs.cli import main


def test_classify_scrambled_matrix(capsys):
    assert main(["classify", "--rho", "1", "--matrix", "0,2,-1,-1"]) == 0
    out = capsys.readouterr().out
    assert "series=s11" in out
    assert "eta=(1,1)" in out
    assert "matrix=0,-2,1,1" in out


def test_invariants_by_eta(capsys):
    assert main(["invariants", "--eta", "3,s11,3,3,-2,-2"]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["picard_index"] == 72
    assert obj["degree"] == "8/3"
    assert obj["ke"] is True


def test_invariants_by_matrix(capsys):
    assert main(["invariants", "--matrix", "1,0,0,-2,1", "--rho", "2"]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["series"] == "s22"
    assert obj["picard_index"] == 18


def test_invariants_matrix_requires_rho(capsys):
    assert main(["invariants", "--matrix", "0,-2,1,1"]) == 1


def test_enumerate_jsonl_stdout(capsys):
    assert main(["enumerate", "--rho", "2", "--iota", "1"]) == 0
    captured = capsys.readouterr()
    lines = captured.out.strip().splitlines()
    assert len(lines) == 2
    assert json.loads(lines[0])["series"] == "s12"
    assert "2 records" in captured.err


def test_enumerate_csv_to_file(tmp_path, capsys):
    out = tmp_path / "records.csv"
    assert main(["enumerate", "--rho", "1", "--iota-max", "5", "--format", "csv", "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert len(lines) == 8  # header + 7 records
    assert lines[0].startswith("rho,series,")


def test_enumerate_series_filter(capsys):
    assert main(["enumerate", "--rho", "1", "--iota-max", "5", "--series", "s11"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert all(json.loads(l)["series"] == "s11" for l in lines)
    assert len(lines) == 5


def test_count_table_and_plot_data(tmp_path, capsys):
    plot = tmp_path / "plot.txt"
    assert main(["count", "--rho", "1", "--iota-max", "5", "--plot-data", str(plot)]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0].startswith("#")
    assert out.splitlines()[-1] == "5 2 7 1 4"
    assert plot.read_text() == "1 1\n2 1\n3 3\n4 5\n5 7\n"


def test_verify_small(capsys):
    assert main(["verify", "--iota-max", "3"]) == 0
    assert "overall: PASS" in capsys.readouterr().out


def test_verify_failure_exit_code(monkeypatch, capsys):
    failing = VerifyReport(
        (ClaimResult("rho=1 count at iota <= 200", 883, 882, False),), ()
    )
    monkeypatch.setattr("fiqs.cli.verify_claims", lambda iota_max: failing)
    assert main(["verify", "--iota-max", "200"]) == 2
    assert "overall: FAIL" in capsys.readouterr().out


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["enumerate", "--rho", "7", "--iota", "1"])
    assert exc.value.code == 1
    with pytest.raises(SystemExit) as exc:
        main(["count", "--rho", "1"])
    assert exc.value.code == 1


def test_bad_matrix_input_exit_code(capsys):
    assert main(["classify", "--rho", "1", "--matrix", "0,2,x,-1"]) == 1
    assert main(["classify", "--rho", "1", "--matrix", "0,2,-1"]) == 1
    # even entry at an implied-even column breaks primitivity
    assert main(["classify", "--rho", "1", "--matrix", "0,2,2,-1"]) == 1


def test_invariants_rejects_bad_eta(capsys):
    assert main(["invariants", "--eta", "1,s11,2,2"]) == 1
    assert main(["invariants", "--eta", "2,s99,1,1,-1"]) == 1


def test_matrix_with_leading_negative_entry(capsys):
    # argparse needs the --matrix=... form when the value starts with '-'
    assert main(["classify", "--rho", "3", "--matrix=-3,-1,0,2,0,2"]) == 0
    out = capsys.readouterr().out
    assert "series=s11" in out and "eta=(3,3,-2,-2)" in out
