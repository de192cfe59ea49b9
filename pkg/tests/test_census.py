from __future__ import annotations

import io
import json

import pytest

from fiqs import (
    count,
    count_exact,
    count_ke,
    emit_plot_data,
    enumerate_all,
    export_records,
    is_ke_family,
    record_from_csv_row,
    record_from_json_line,
    record_to_csv_row,
    record_to_json_line,
    surface_record,
    verify_claims,
)
from fiqs.census import CSV_COLUMNS, _cd_count


def brute_cd_count(bound: int) -> int:
    return sum(
        1
        for c in range(-bound, 0)
        for d in range(c, 0)
        if 2 * c + d >= -bound
    )


def test_cd_count_closed_form():
    for bound in range(0, 60):
        assert _cd_count(bound) == brute_cd_count(bound)


def test_counts_match_enumeration():
    for rho in (1, 2, 3):
        for iota in range(1, 26):
            pairs = enumerate_all(rho, iota)
            assert count_exact(rho, iota) == len(pairs), (rho, iota)
            assert count_ke(rho, iota) == sum(is_ke_family(k) for k, _ in pairs), (rho, iota)


def test_count_table_prefix_sums():
    table = count(1, 10)
    cum = 0
    ke_cum = 0
    for row in table.rows:
        cum += row.exact
        ke_cum += row.ke
        assert row.cumulative == cum
        assert row.ke_cumulative == ke_cum
        assert row.ke <= row.exact


def test_count_small_values():
    assert count(1, 1).total == 1
    table = count(1, 5)
    assert [r.exact for r in table.rows] == [1, 0, 2, 2, 2]
    assert table.total == 7


def test_count_worker_independence():
    for rho in (1, 2, 3):
        base = count(rho, 40).to_text()
        assert count(rho, 40, workers=4).to_text() == base
        assert count(rho, 40, workers=8).to_text() == base


def test_plot_data_small_golden():
    sink = io.StringIO()
    assert emit_plot_data(1, 5, sink) == 5
    assert sink.getvalue() == "1 1\n2 1\n3 3\n4 5\n5 7\n"


def test_plot_data_line_format():
    sink = io.StringIO()
    emit_plot_data(2, 7, sink)
    lines = sink.getvalue().splitlines()
    assert len(lines) == 7
    for i, line in enumerate(lines, start=1):
        iota, cum = line.split(" ")
        assert int(iota) == i
        assert int(cum) >= 0


def test_export_jsonl_single_surface():
    sink = io.StringIO()
    assert export_records(1, 1, "jsonl", sink) == 1
    obj = json.loads(sink.getvalue())
    assert obj["rho"] == 1
    assert obj["series"] == "s11"
    assert obj["a"] == 0 and obj["b"] == -2
    assert obj["degree"] == "2/1"
    assert obj["local_orders"] == {"x+": 4, "x-": 4, "x0": 2}
    assert obj["c"] is None and obj["d"] is None


def test_export_csv_header_and_rows():
    sink = io.StringIO()
    assert export_records(2, 1, "csv", sink) == 2
    lines = sink.getvalue().splitlines()
    assert lines[0] == ",".join(CSV_COLUMNS)
    assert len(lines) == 3


def test_export_single_iota_and_series_filter():
    sink = io.StringIO()
    n = export_records(1, 0, "jsonl", sink, iota=4, series="s12")
    assert n == 1
    obj = json.loads(sink.getvalue())
    assert obj["series"] == "s12" and obj["gorenstein_index"] == 4


def test_export_rejects_unknown_format():
    with pytest.raises(ValueError):
        export_records(1, 1, "parquet", io.StringIO())


def test_export_full_picard_one_census():
    sink = io.StringIO()
    assert export_records(1, 200, "jsonl", sink) == 883
    lines = sink.getvalue().splitlines()
    assert len(lines) == 883
    last = json.loads(lines[-1])
    assert last["gorenstein_index"] == 200


def test_jsonl_round_trip():
    for rho in (1, 2, 3):
        for iota in (1, 3, 4, 6):
            for key, m in enumerate_all(rho, iota):
                rec = surface_record(key, m)
                assert record_from_json_line(record_to_json_line(rec)) == rec


def test_csv_round_trip():
    for rho in (1, 2, 3):
        for iota in (1, 3, 4, 6):
            for key, m in enumerate_all(rho, iota):
                rec = surface_record(key, m)
                assert record_from_csv_row(record_to_csv_row(rec)) == rec


def test_verify_claims_small_range_passes():
    report = verify_claims(6)
    assert report.ok, report.to_text()
    claims = {r.claim for r in report.results}
    assert any("class group" in c for c in claims)
    assert any("census claim arithmetic" in c for c in claims)
    # census totals are not checked below full scale
    assert not any("count at iota <= 200" in c for c in claims)


def test_verify_report_text_shape():
    report = verify_claims(4)
    text = report.to_text()
    assert text.strip().endswith("overall: PASS")
    assert all(line.startswith(("PASS", "FAIL", "NOTE", "overall")) for line in text.strip().splitlines())


def test_errors_on_nonpositive_bounds():
    with pytest.raises(ValueError):
        count(1, 0)
    with pytest.raises(ValueError):
        count_exact(1, 0)
    with pytest.raises(ValueError):
        emit_plot_data(1, 0, io.StringIO())
    with pytest.raises(ValueError):
        verify_claims(0)
