"""
bounds.py
Goal: Closed-form lower bounds on |V(P) & V(Q)| for two longest paths, and the per-graph
CheckReport that compares them with the exact L(G).

Verdicts per bound: pass, fail, vacuous (hypothesis not met or value <= 0),
incomplete (enumeration hit its budget and the partial minimum still meets the bound),
conjectural (the k-vertex bound for connectivity >= 6, beyond the proven range).

Last Updated: 2026-10-17
"""

# Import statements
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from graph_core import Graph, encode_graph6, vertex_connectivity
from path_engine import DEFAULT_BUDGET, PathPair, enumerate_longest_paths, pairwise_minimum
from proof_machinery import bound_submain, scan_claim2

logger = logging.getLogger(__name__)

PROVEN_CONNECTIVITY = 5
CHEN_CONSTANT = 1 / (256 ** (1 / 3) + 3) ** 0.6
VERDICTS = ("pass", "fail", "vacuous", "incomplete", "conjectural")
BOUND_NAMES = ("hippchen", "main", "gutierrez", "submain", "counting")


# -------------- Part 1: Bound formulas -------------- #

def _ceil_div(a: int, b: int) -> int:
    # exact on negative numerators: _ceil_div(-2, 3) == 0
    return -((-a) // b)


def bound_hippchen(k: int) -> int:
    if k < 0:
        raise ValueError("k must be non-negative")
    return k


def bound_main(k: int, n: int) -> int:
    """min{k, ceil((8k - n - 4) / 3)}; negative values are returned as is."""
    return min(k, _ceil_div(8 * k - n - 4, 3))


def bound_gutierrez(k: int, n: int) -> int:
    """ceil((8k - n + 2) / 5). At most k exactly when n >= 3k + 2."""
    return _ceil_div(8 * k - n + 2, 5)


def bound_counting(length: int, n: int) -> int:
    """Two paths on l + 1 vertices each inside n vertices overlap in at least 2l + 2 - n."""
    return 2 * length + 2 - n


def bound_chen(k: int) -> float:
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        return 0.0
    return CHEN_CONSTANT * k ** 0.6


def verdict(L: Optional[int], value: Optional[int], applicable: bool = True, complete: bool = True) -> str:
    """
    pass / fail / vacuous / incomplete for the claim L >= value. On an incomplete
    enumeration L is an upper bound on the true minimum, so L < value is still a fail.
    """
    if not applicable or value is None or value <= 0:
        return "vacuous"
    if L is None:
        return "incomplete"
    if L < value:
        return "fail"
    return "pass" if complete else "incomplete"


# -------------- Part 2: Per-graph report -------------- #

@dataclass
class CheckReport:
    graph: str
    n: int = 0
    m: int = 0
    kappa: Optional[int] = None
    length: Optional[int] = None
    paths: Optional[int] = None
    complete: Optional[bool] = None
    L: Optional[int] = None
    bound_hippchen: Optional[int] = None
    bound_main: Optional[int] = None
    bound_gutierrez: Optional[int] = None
    bound_submain: Optional[int] = None
    bound_counting: Optional[int] = None
    bound_chen: Optional[float] = None
    verdicts: Dict[str, str] = field(default_factory=dict)
    claim2_instances: int = 0
    claim2_verdict: str = "vacuous"
    claim2_counterexample: Optional[str] = None
    witness: Optional[PathPair] = None
    error: Optional[str] = None

    COLUMNS = (
        ["graph", "n", "m", "kappa", "length", "paths", "complete", "L"]
        + [f"bound_{name}" for name in BOUND_NAMES] + ["bound_chen"]
        + [f"verdict_{name}" for name in BOUND_NAMES]
        + ["claim2_instances", "verdict_claim2", "status", "witness_p", "witness_q", "claim2_counterexample", "error"]
    )
    INT_COLUMNS = ["n", "m", "kappa", "length", "paths", "L"] + [f"bound_{name}" for name in BOUND_NAMES] + ["claim2_instances"]

    @classmethod
    def failed(cls, graph_id: str, message: str) -> "CheckReport":
        return cls(graph=graph_id, error=message)

    @property
    def status(self) -> str:
        """Row-level outcome: error, fail, incomplete or pass."""
        if self.error is not None:
            return "error"
        outcomes = list(self.verdicts.values()) + [self.claim2_verdict]
        if "fail" in outcomes:
            return "fail"
        if "incomplete" in outcomes:
            return "incomplete"
        return "pass"

    def to_row(self) -> Dict[str, object]:
        """Flat record in COLUMNS order; shared by the JSONL and CSV writers."""
        row: Dict[str, object] = {
            "graph": self.graph,
            "n": self.n,
            "m": self.m,
            "kappa": self.kappa,
            "length": self.length,
            "paths": self.paths,
            "complete": self.complete,
            "L": self.L,
            "bound_chen": None if self.bound_chen is None else round(self.bound_chen, 6),
            "claim2_instances": self.claim2_instances,
            "verdict_claim2": self.claim2_verdict if self.error is None else None,
            "status": self.status,
            "witness_p": None,
            "witness_q": None,
            "claim2_counterexample": self.claim2_counterexample,
            "error": self.error,
        }
        for name in BOUND_NAMES:
            row[f"bound_{name}"] = getattr(self, f"bound_{name}")
            row[f"verdict_{name}"] = self.verdicts.get(name)
        if self.status == "fail" and self.witness is not None:
            row["witness_p"] = str(self.witness.P)
            row["witness_q"] = str(self.witness.Q)
        return {column: row[column] for column in self.COLUMNS}


def check_graph(graph: Graph, budget: int = DEFAULT_BUDGET, graph_id: Optional[str] = None) -> CheckReport:
    """Compute kappa, l, L(G) and every bound, then verdict each one. Never raises for valid graphs."""
    report = CheckReport(graph=graph_id if graph_id is not None else encode_graph6(graph), n=graph.n, m=graph.m)
    if graph.n == 0:
        report.verdicts = {name: "vacuous" for name in BOUND_NAMES}
        return report

    kappa = vertex_connectivity(graph)
    enumeration = enumerate_longest_paths(graph, budget)
    L, pair = pairwise_minimum(enumeration, partial=True)
    length, n, complete = enumeration.length, graph.n, enumeration.complete
    connected = kappa >= 1

    report.kappa, report.length, report.paths, report.complete = kappa, length, enumeration.count, complete
    report.L = L if complete else None
    report.witness = pair
    report.bound_hippchen = bound_hippchen(kappa)
    report.bound_main = bound_main(kappa, n)
    report.bound_gutierrez = bound_gutierrez(kappa, n)
    report.bound_submain = bound_submain(kappa, length) if kappa >= 3 else None
    report.bound_counting = bound_counting(length, n)
    report.bound_chen = bound_chen(kappa)

    hippchen = verdict(L, report.bound_hippchen, connected, complete)
    if kappa > PROVEN_CONNECTIVITY and hippchen == "pass":
        hippchen = "conjectural"
    report.verdicts = {
        "hippchen": hippchen,
        "main": verdict(L, report.bound_main, connected, complete),
        # the published statement caps the value at k
        "gutierrez": verdict(L, min(kappa, report.bound_gutierrez), connected, complete),
        "submain": verdict(L, report.bound_submain, kappa >= 3, complete),
        "counting": verdict(L, report.bound_counting, True, complete),
    }

    if kappa >= 3:
        scan = scan_claim2(graph, enumeration.paths, kappa)
        report.claim2_instances = scan.instances
        if scan.failures:
            P, q, q2 = scan.failures[0]
            report.claim2_verdict = "fail"
            report.claim2_counterexample = f"P={P} q={q} q'={q2}"
        elif not complete:
            report.claim2_verdict = "incomplete"
        else:
            report.claim2_verdict = "pass" if scan.instances else "vacuous"

    if report.status == "fail":
        failing = [name for name, outcome in report.verdicts.items() if outcome == "fail"]
        logger.error(f"Counterexample on {report.graph}: failing {failing or ['claim2']}, L={L}, P={pair.P}, Q={pair.Q}")
    return report


def bounds_table(k_values: List[int], n_values: List[int]) -> List[Dict[str, object]]:
    """Rows (k, n, main, gutierrez, hippchen, chen) for the bounds subcommand."""
    rows = []
    for k in k_values:
        for n in n_values:
            rows.append({
                "k": k,
                "n": n,
                "bound_hippchen": bound_hippchen(k),
                "bound_main": bound_main(k, n),
                "bound_gutierrez": bound_gutierrez(k, n),
                "bound_chen": round(bound_chen(k), 6),
            })
    return rows
