"""
main.py
PURPOSE: Command-line entry point. Checks graphs against the longest-path intersection bounds
and reports every verdict.

Subcommands:
* check    - one graph (graph6 or edge list) -> one JSON report
* sweep    - many graphs (file, stdin or a generator family) -> JSONL / CSV rows or a summary
* witness  - the tightness graph K_{k,2k+2} as graph6, followed by its report
* bounds   - CSV table of the closed-form bounds over k and n ranges
* generate - graph6 lines from a generator family

Exit codes: 0 when nothing fails, 2 when any verdict fails, 1 on input, config or runtime errors.
Reports go to stdout, logs to stderr.

Last Updated: 2026-10-17
"""

# Import statements
import argparse
import json
import logging
import sys
from typing import Dict, List, Optional

import pandas as pd

from bounds import bounds_table, check_graph
from config import FORMATS, ConfigError, load_settings, resolve_config
from generators import FAMILIES, GenerationError, GeneratorSpec, generate_graph6, tightness_witness
from graph_core import encode_graph6, parse_graph
from sweep import exit_code, format_summary, keep_report, read_items, run_sweep, summarize, write_csv, write_jsonl

logger = logging.getLogger(__name__)


# -------------- Part 1: Argument parsing -------------- #

def parse_range(text: str) -> List[int]:
    """'A:B' (inclusive) or a single integer."""
    try:
        if ":" in text:
            low, high = (int(part) for part in text.split(":", 1))
        else:
            low = high = int(text)
    except ValueError:
        raise ConfigError(f"expected an integer or A:B range, got {text!r}") from None
    if high < low:
        raise ConfigError(f"empty range {text!r}")
    return list(range(low, high + 1))


def _add_family_arguments(parser: argparse.ArgumentParser, required: bool) -> None:
    parser.add_argument("--family", choices=FAMILIES, required=required, help="Generator family.")
    parser.add_argument("--k", type=int, default=2, help="Connectivity target (tightness, gnp-kconn).")
    parser.add_argument("--a", type=int, default=2, help="Left part size (complete-bipartite).")
    parser.add_argument("--b", type=int, default=6, help="Right part size (complete-bipartite).")
    parser.add_argument("--n", type=int, default=10, help="Vertex count (gnp-kconn).")
    parser.add_argument("--p", type=float, default=0.5, help="Edge probability (gnp-kconn).")
    parser.add_argument("--count", type=int, default=1, help="Number of graphs.")
    parser.add_argument("--blades", type=int, default=4, help="Blade count (windmill).")
    parser.add_argument("--blade-size", type=int, default=4, help="Vertices per blade, centre included (windmill).")
    parser.add_argument("--max-attempts", type=int, default=1000, help="Rejection sampling attempts per graph.")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hippchen-check",
        description="Exact checks of lower bounds on how many vertices two longest paths share.",
    )
    parser.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING or ERROR (env HIPPCHEN_LOG_LEVEL).")
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="Check one graph.")
    source = check.add_mutually_exclusive_group()
    source.add_argument("--input", default=None, help="File with one graph6 line or an edge list; - for stdin.")
    source.add_argument("--g6", default=None, help="graph6 string given inline.")
    check.add_argument("--budget", type=int, default=None, help="Longest-path enumeration budget.")

    sweep = sub.add_parser("sweep", help="Check many graphs.")
    sweep.add_argument("--input", default=None, help="graph6 file (one graph per line); - for stdin.")
    _add_family_arguments(sweep, required=False)
    sweep.add_argument("--format", dest="fmt", choices=FORMATS, default=None, help="Output format.")
    sweep.add_argument("--budget", type=int, default=None, help="Longest-path enumeration budget.")
    sweep.add_argument("--workers", type=int, default=None, help="Worker processes.")
    sweep.add_argument("--seed", type=int, default=None, help="Seed for random families.")
    sweep.add_argument("--only-fails", action="store_true", default=None, help="Emit only rows with a fail verdict.")

    witness = sub.add_parser("witness", help="Tightness graph K_{k,2k+2} and its report.")
    witness.add_argument("--k", type=int, required=True)
    witness.add_argument("--budget", type=int, default=None)

    bounds = sub.add_parser("bounds", help="Table of the closed-form bounds.")
    bounds.add_argument("--k", dest="k_range", required=True, help="k range A:B (inclusive).")
    bounds.add_argument("--n", dest="n_range", required=True, help="n range C:D (inclusive).")

    gen = sub.add_parser("generate", help="Print graph6 lines from a generator family.")
    _add_family_arguments(gen, required=True)
    gen.add_argument("--seed", type=int, default=0)
    return parser


def _generator_spec(args: argparse.Namespace, seed: int) -> Optional[GeneratorSpec]:
    if getattr(args, "family", None) is None:
        return None
    return GeneratorSpec(
        family=args.family, k=args.k, a=args.a, b=args.b, n=args.n, p=args.p, seed=seed,
        count=args.count, max_attempts=args.max_attempts, blades=args.blades, blade_size=args.blade_size,
    )


# -------------- Part 2: Subcommands -------------- #

def cmd_check(args: argparse.Namespace, settings: Dict) -> int:
    config = resolve_config({"budget": args.budget, "input": args.input}, settings)
    if args.g6 is not None:
        text = args.g6
    elif config.input is None or config.input == "-":
        text = sys.stdin.read()
    else:
        with open(config.input, "r", encoding="utf-8") as file:
            text = file.read()

    report = check_graph(parse_graph(text), config.budget)
    print(json.dumps(report.to_row()))
    logger.info(f"{report.graph}: status {report.status}, L={report.L}, kappa={report.kappa}")
    return exit_code([report])


def cmd_sweep(args: argparse.Namespace, settings: Dict) -> int:
    flags = {
        "input": args.input,
        "generator": _generator_spec(args, args.seed or 0),
        "budget": args.budget,
        "workers": args.workers,
        "fmt": args.fmt,
        "only_fails": args.only_fails,
        "seed": args.seed,
    }
    config = resolve_config(flags, settings)
    logger.info(f"Sweep: budget={config.budget}, workers={config.workers}, format={config.fmt}")

    reports = []

    def collected():
        for report in run_sweep(read_items(config), config.budget, config.workers):
            reports.append(report)
            if keep_report(report, config.only_fails):
                yield report

    if config.fmt == "jsonl":
        write_jsonl(collected(), sys.stdout)
    elif config.fmt == "csv":
        write_csv(collected(), sys.stdout)
    else:
        for _ in collected():
            pass

    summary = summarize(reports)
    if config.fmt == "summary":
        print(format_summary(summary))
    else:
        logger.info(format_summary(summary))
    return exit_code(reports)


def cmd_witness(args: argparse.Namespace, settings: Dict) -> int:
    config = resolve_config({"budget": args.budget}, settings)
    graph = tightness_witness(args.k)
    graph6 = encode_graph6(graph)
    report = check_graph(graph, config.budget, graph_id=graph6)
    print(graph6)
    print(json.dumps(report.to_row()))
    logger.info(f"K_{{{args.k},{2 * args.k + 2}}}: L={report.L}, kappa={report.kappa}")
    return exit_code([report])


def cmd_bounds(args: argparse.Namespace, settings: Dict) -> int:
    table = pd.DataFrame(bounds_table(parse_range(args.k_range), parse_range(args.n_range)))
    table.to_csv(sys.stdout, index=False)
    return 0


def cmd_generate(args: argparse.Namespace, settings: Dict) -> int:
    for line in generate_graph6(_generator_spec(args, args.seed)):
        print(line)
    return 0


COMMANDS = {
    "check": cmd_check,
    "sweep": cmd_sweep,
    "witness": cmd_witness,
    "bounds": cmd_bounds,
    "generate": cmd_generate,
}


# -------------- Part 3: Entry point -------------- #

def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        settings = load_settings()
        env_level = settings.pop("log_level", "INFO")
        level = (args.log_level or env_level).upper()
        logging.basicConfig(level=getattr(logging, level, logging.INFO), format='%(message)s', stream=sys.stderr)
        return COMMANDS[args.command](args, settings)
    except (ValueError, GenerationError) as e:
        logging.basicConfig(format='%(message)s', stream=sys.stderr)
        logger.error(f"Error: {e}")
        return 1
    except OSError as e:
        logging.basicConfig(format='%(message)s', stream=sys.stderr)
        logger.error(f"Cannot read input: {e}")
        return 1


# Main Control to run function:
if __name__ == "__main__":
    sys.exit(main())
