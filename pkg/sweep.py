"""
sweep.py
Goal: Run check_graph over many graphs with an ordered worker pool, write JSONL / CSV rows
and summarise the verdicts.

Last Updated: 2026-10-17
"""

# Import statements
import json
import logging
import sys
from multiprocessing import Pool
from typing import Dict, Iterable, Iterator, List, Optional, TextIO, Tuple

import pandas as pd
from tqdm import tqdm

from bounds import BOUND_NAMES, VERDICTS, CheckReport, check_graph
from config import SweepConfig
from generators import generate
from graph_core import GRAPH6_HEADER, encode_graph6, parse_graph

logger = logging.getLogger(__name__)

SLACK_VERDICTS = ("pass", "fail", "conjectural")


# -------------- Part 1: Input -------------- #

def split_input(text: str) -> List[str]:
    """
    One item per graph. Text whose first byte is a digit is a single edge list;
    otherwise every non-empty line is a graph6 string.
    """
    if not text.strip():
        return []
    if text.lstrip()[:1].isdigit():
        return [text]
    return [line.strip() for line in text.splitlines() if line.strip()]


def read_items(config: SweepConfig, stdin: Optional[TextIO] = None) -> Iterable[str]:
    """Graph items for a sweep: generator output as graph6, or the lines of --input (- is stdin)."""
    if config.generator is not None:
        return (encode_graph6(graph) for graph in generate(config.generator))
    if config.input is None or config.input == "-":
        return split_input((stdin or sys.stdin).read())
    with open(config.input, "r", encoding="utf-8") as file:
        return split_input(file.read())


def _item_id(text: str) -> str:
    first = text.strip().splitlines()[0] if text.strip() else ""
    if first.startswith(GRAPH6_HEADER):
        first = first[len(GRAPH6_HEADER):]
    return first[:80]


# -------------- Part 2: Checking -------------- #

def check_line(text: str, budget: int) -> CheckReport:
    """Parse and check one item. Never raises: any exception becomes an error row."""
    try:
        return check_graph(parse_graph(text), budget)
    except Exception as e:
        logger.warning(f"Error on {_item_id(text)!r}: {e}")
        return CheckReport.failed(_item_id(text), f"{type(e).__name__}: {e}")


def _check_item(item: Tuple[str, int]) -> CheckReport:
    return check_line(*item)


def run_sweep(items: Iterable[str], budget: int, workers: int = 1, total: Optional[int] = None) -> Iterator[CheckReport]:
    """
    Reports in input order. workers > 1 fans out over a process pool; Pool.imap keeps
    the order whatever the scheduling.
    """
    work = ((text, budget) for text in items)
    if total is None and isinstance(items, list):
        total = len(items)
    progress = dict(total=total, desc="Checking graphs", unit="graph", file=sys.stderr, disable=not sys.stderr.isatty())

    if workers > 1 and total != 1:
        with Pool(processes=workers) as pool:
            for report in tqdm(pool.imap(_check_item, work, chunksize=4), **progress):
                yield report
    else:
        for item in tqdm(work, **progress):
            yield _check_item(item)


def keep_report(report: CheckReport, only_fails: bool) -> bool:
    return not only_fails or report.status == "fail"


# -------------- Part 3: Writers -------------- #

def write_jsonl(reports: Iterable[CheckReport], stream: TextIO) -> int:
    count = 0
    for report in reports:
        stream.write(json.dumps(report.to_row()) + "\n")
        count += 1
    stream.flush()
    return count


def reports_frame(reports: Iterable[CheckReport]) -> pd.DataFrame:
    frame = pd.DataFrame([report.to_row() for report in reports], columns=CheckReport.COLUMNS)
    # nullable ints keep 1 as 1 next to error rows, matching the JSONL values
    return frame.astype({column: "Int64" for column in CheckReport.INT_COLUMNS})


def write_csv(reports: Iterable[CheckReport], stream: TextIO) -> int:
    frame = reports_frame(reports)
    frame.to_csv(stream, index=False)
    return len(frame)


# -------------- Part 4: Summary -------------- #

def _numeric(column: pd.Series) -> pd.Series:
    return pd.to_numeric(column, errors="coerce").astype("float64")


def summarize(reports: List[CheckReport]) -> Dict[str, object]:
    """
    Row count, status counts, verdict counts per bound and the smallest L - bound
    over rows where the bound was decided (pass, fail or conjectural).
    """
    frame = reports_frame(reports)
    summary: Dict[str, object] = {
        "rows": len(frame),
        "status": {key: int(value) for key, value in frame["status"].value_counts().items()},
        "verdicts": {},
        "min_slack": {},
    }
    for name in BOUND_NAMES + ("claim2",):
        counts = frame[f"verdict_{name}"].value_counts()
        summary["verdicts"][name] = {v: int(counts.get(v, 0)) for v in VERDICTS if counts.get(v, 0)}

    for name in BOUND_NAMES:
        decided = frame[frame[f"verdict_{name}"].isin(SLACK_VERDICTS)]
        bound = _numeric(decided[f"bound_{name}"])
        if name == "gutierrez":
            # verdicted against min(kappa, raw value)
            bound = pd.concat([bound, _numeric(decided["kappa"])], axis=1).min(axis=1)
        slack = (_numeric(decided["L"]) - bound).dropna()
        summary["min_slack"][name] = int(slack.min()) if len(slack) else None

    slacks = [value for value in summary["min_slack"].values() if value is not None]
    summary["min_slack_overall"] = min(slacks) if slacks else None
    return summary


def format_summary(summary: Dict[str, object]) -> str:
    lines = [f"rows: {summary['rows']}"]
    status = summary["status"]
    lines.append("status: " + (", ".join(f"{key}={value}" for key, value in sorted(status.items())) or "none"))
    for name, counts in summary["verdicts"].items():
        shown = ", ".join(f"{key}={value}" for key, value in counts.items()) or "none"
        slack = summary["min_slack"].get(name)
        suffix = f" (min slack {slack})" if slack is not None else ""
        lines.append(f"{name}: {shown}{suffix}")
    lines.append(f"min slack overall: {summary['min_slack_overall']}")
    return "\n".join(lines)


def exit_code(reports: Iterable[CheckReport]) -> int:
    """2 when any row fails, 1 when any row errored, 0 otherwise."""
    statuses = {report.status for report in reports}
    if "fail" in statuses:
        return 2
    if "error" in statuses:
        return 1
    return 0
