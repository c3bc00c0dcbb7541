import io
import json

import pandas as pd
import pytest

from bounds import CheckReport
from config import SweepConfig
from generators import GeneratorSpec, complete_bipartite, tightness_witness
from graph_core import encode_graph6
from sweep import (
    check_line,
    exit_code,
    format_summary,
    keep_report,
    read_items,
    reports_frame,
    run_sweep,
    split_input,
    summarize,
    write_csv,
    write_jsonl,
)

K26 = encode_graph6(complete_bipartite(2, 6))
GRAPH_LINES = ["A_", K26, "Bw", "C~", encode_graph6(tightness_witness(1))]


def test_split_input():
    assert split_input("") == []
    assert split_input("  \n") == []
    assert split_input("A_\n\n>>graph6<<Bw\n") == ["A_", ">>graph6<<Bw"]
    edges = "0 1\n1 2\n"
    assert split_input(edges) == [edges]


def test_read_items_from_file_stdin_and_generator(tmp_path):
    source = tmp_path / "graphs.g6"
    source.write_text("A_\nBw\n")
    assert read_items(SweepConfig(input=str(source))) == ["A_", "Bw"]
    assert read_items(SweepConfig(input="-"), stdin=io.StringIO("C~\n")) == ["C~"]
    items = list(read_items(SweepConfig(generator=GeneratorSpec("tightness", k=1, count=2))))
    assert items == [encode_graph6(tightness_witness(1)), encode_graph6(tightness_witness(2))]


def test_check_line_never_raises():
    report = check_line("A!", 100)
    assert report.status == "error"
    assert report.graph == "A!"
    assert "GraphFormatError" in report.error
    assert check_line(K26, 10**6).L == 2


def test_check_line_on_edge_list():
    report = check_line("0 1\n1 2\n2 0\n", 100)
    assert (report.n, report.L) == (3, 3)


def test_budget_gate_row_is_incomplete():
    (report,) = list(run_sweep([K26], budget=1))
    assert report.status == "incomplete"
    assert report.to_row()["verdict_main"] == "incomplete"


def test_run_sweep_keeps_input_order_for_any_worker_count():
    serial = [r.graph for r in run_sweep(GRAPH_LINES, budget=10**6, workers=1)]
    parallel = [r.graph for r in run_sweep(GRAPH_LINES, budget=10**6, workers=3)]
    assert serial == GRAPH_LINES
    assert parallel == serial


def test_run_sweep_empty_input():
    assert list(run_sweep([], budget=10)) == []


def _as_csv_text(value):
    return "" if value is None else str(value)


def test_jsonl_and_csv_rows_agree():
    # an error row and a budget-cut row leave nulls in the integer columns
    reports = list(run_sweep(GRAPH_LINES + ["bad!"], budget=10**6)) + [check_line(K26, 1)]
    jsonl = io.StringIO()
    assert write_jsonl(reports, jsonl) == len(reports)
    rows = [json.loads(line) for line in jsonl.getvalue().splitlines()]

    csv = io.StringIO()
    assert write_csv(reports, csv) == len(reports)
    frame = pd.read_csv(io.StringIO(csv.getvalue()), dtype=str, keep_default_na=False)
    assert list(frame.columns) == CheckReport.COLUMNS
    for row, (_, cells) in zip(rows, frame.iterrows()):
        for column in CheckReport.COLUMNS:
            assert cells[column] == _as_csv_text(row[column]), column


def test_csv_keeps_integers_next_to_error_rows():
    csv = io.StringIO()
    write_csv(list(run_sweep(["A_", "bad!"], budget=100)), csv)
    first = csv.getvalue().splitlines()[1].split(",")
    kappa = CheckReport.COLUMNS.index("kappa")
    assert first[kappa] == "1"


def test_summary_counts_and_slack():
    reports = list(run_sweep(GRAPH_LINES + ["bad!"], budget=10**6))
    summary = summarize(reports)
    assert summary["rows"] == 6
    assert summary["status"] == {"pass": 5, "error": 1}
    assert summary["verdicts"]["hippchen"]["pass"] == 5
    # K_{2,6} and K_{1,4} meet the k-vertex bound exactly
    assert summary["min_slack"]["hippchen"] == 0
    assert summary["min_slack_overall"] == 0
    text = format_summary(summary)
    assert text.startswith("rows: 6")
    assert "error=1" in text


def test_summary_of_nothing():
    summary = summarize([])
    assert summary["rows"] == 0
    assert summary["status"] == {}
    assert summary["min_slack_overall"] is None


def test_only_fails_filter_and_exit_codes():
    passing = check_line(K26, 10**6)
    failing = check_line(K26, 10**6)
    failing.verdicts["main"] = "fail"
    broken = CheckReport.failed("x", "boom")
    assert keep_report(passing, only_fails=False)
    assert not keep_report(passing, only_fails=True)
    assert keep_report(failing, only_fails=True)
    assert exit_code([passing]) == 0
    assert exit_code([passing, broken]) == 1
    assert exit_code([broken, failing]) == 2
    assert exit_code([]) == 0


def test_frame_of_reports_has_fixed_columns():
    frame = reports_frame([check_line("A_", 10)])
    assert list(frame.columns) == CheckReport.COLUMNS
    assert frame.loc[0, "graph"] == "A_"
