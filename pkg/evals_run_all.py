"""
evals_run_all.py
Goal: Run all evaluation suites in sequence with fixed seeds and export one timestamped CSV.

Suites:
* tightness  - K_{k,2k+2} for k = 1, 2, 3 has L = k exactly
* rotation   - rotation witnesses on seeded k-connected graphs, plus min-degree graphs (windmills, sparse G(n, p))
* fan        - k internally disjoint (x, Y)-paths on seeded k-connected graphs, k <= 5
* sigma      - the 24 permutations of four shared vertices fall into seven classes
* bounds     - bound formulas against exact rational arithmetic over k <= 10, n <= 60
* oracle     - DP, branch-and-bound and naive longest-path lengths agree
* claims     - H edge-absence predicates on pairs sharing four vertices (informational below kappa 5)

Every row is one case: suite, case, outcome (pass / fail / vacuous / incomplete / info), detail.

Last Updated: 2026-10-17
"""

# Import statements
import logging
import math
import os
import random
from datetime import datetime
from fractions import Fraction
from itertools import permutations
from typing import Dict, List

import pandas as pd
from dotenv import load_dotenv
from tqdm import tqdm

from bounds import bound_chen, bound_gutierrez, bound_main, check_graph
from generators import random_k_connected, tightness_witness, windmill
from graph_core import Graph, encode_graph6, vertex_connectivity
from path_engine import enumerate_longest_paths, longest_path_length, pairwise_minimum
from proof_machinery import (
    CriticalFinding,
    PreconditionError,
    canonical_sigma,
    claim_p0_violations,
    claim_xy_violations,
    fan_paths,
    lemma1_witness,
    sigma_classes,
    validate_fan,
    validate_lemma1_witness,
)

# Load environment variables
load_dotenv(".env", override=True)

# Set up logging
logging.basicConfig(level=os.getenv("HIPPCHEN_LOG_LEVEL", "INFO").upper(), format='%(message)s')
logger = logging.getLogger(__name__)

# Generate timestamp:
time_stamp = datetime.now().strftime("%Y-%m-%d_%H-%M-%S")

SUITE_BUDGET = 20000
MAX_INSTANCES_PER_GRAPH = 25

# Published class lists, in (length, text) order
EXPECTED_CLASSES = {
    1: ("(1)", "(14)(23)"),
    2: ("(14)", "(23)"),
    3: ("(13)", "(24)", "(1234)", "(1432)"),
    4: ("(12)", "(34)", "(1324)", "(1423)"),
    5: ("(123)", "(124)", "(132)", "(134)", "(142)", "(143)", "(234)", "(243)"),
    6: ("(12)(34)", "(13)(24)"),
    7: ("(1243)", "(1342)"),
}


def _row(suite: str, case: str, outcome: str, detail: str = "") -> Dict[str, str]:
    return {"suite": suite, "case": case, "outcome": outcome, "detail": detail}


# -------------- Part 1: Tightness -------------- #

def run_tightness_suite() -> List[Dict[str, str]]:
    rows = []
    for k in (1, 2, 3):
        report = check_graph(tightness_witness(k))
        outcome = "pass" if report.L == k else ("incomplete" if report.L is None else "fail")
        rows.append(_row("tightness", f"K_{{{k},{2 * k + 2}}}", outcome, f"L={report.L}, paths={report.paths}"))
    return rows


# -------------- Part 2: Rotation witnesses -------------- #

def _rotation_case(graph: Graph, k: int, case: str) -> Dict[str, str]:
    """Run the rotation witness on up to MAX_INSTANCES_PER_GRAPH pairs sharing at most k-1 vertices."""
    enumeration = enumerate_longest_paths(graph, SUITE_BUDGET)
    if not enumeration.complete:
        return _row("rotation", case, "incomplete", f"more than {SUITE_BUDGET} longest paths")
    L, _ = pairwise_minimum(enumeration)
    if L > k - 1 or graph.min_degree() < k:
        return _row("rotation", case, "vacuous", f"k={k}, L={L}, min degree {graph.min_degree()}")

    instances, problems = 0, []
    paths = enumeration.paths
    for P in paths:
        for Q in paths:
            if (P.mask & Q.mask).bit_count() > k - 1:
                continue
            instances += 1
            try:
                witness, i = lemma1_witness(graph, P, Q, k)
                problems += [f"P={P} Q={Q}: {p}" for p in validate_lemma1_witness(graph, P, Q, witness, i)]
            except (PreconditionError, CriticalFinding) as e:
                problems.append(f"P={P} Q={Q}: {e}")
            if instances >= MAX_INSTANCES_PER_GRAPH:
                break
        if instances >= MAX_INSTANCES_PER_GRAPH:
            break
    if problems:
        logger.error(f"Rotation witness failures on {case}: {problems[:3]}")
    return _row("rotation", case, "fail" if problems else "pass", "; ".join(problems[:3]) or f"{instances} instances, k={k}")


def run_rotation_suite(graphs: int = 200, seed: int = 5) -> List[Dict[str, str]]:
    rng = random.Random(seed)
    rows = []
    for index in tqdm(range(graphs), desc="rotation"):
        k, n = rng.choice((2, 3)), rng.randint(8, 12)
        graph = random_k_connected(n, 0.5, k, rng.randrange(2**32))
        rows.append(_rotation_case(graph, k, f"gnp-{index} {encode_graph6(graph)}"))

    # min-degree variant: small intersections exist once connectivity drops below k
    rows.append(_rotation_case(windmill(4, 4), 3, "windmill(4,4)"))
    rows.append(_rotation_case(windmill(3, 5), 4, "windmill(3,5)"))
    for index in range(40):
        graph = random_k_connected(rng.randint(8, 11), 0.3, 1, rng.randrange(2**32))
        k = graph.min_degree()
        if k >= 2:
            rows.append(_rotation_case(graph, k, f"min-degree-{index} {encode_graph6(graph)}"))
    return rows


# -------------- Part 3: Fans -------------- #

def run_fan_suite(graphs: int = 200, seed: int = 6) -> List[Dict[str, str]]:
    rng = random.Random(seed)
    rows = []
    for index in tqdm(range(graphs), desc="fan"):
        k = rng.randint(1, 5)
        n = rng.randint(k + 3, 12)
        graph = random_k_connected(n, 0.75, k, rng.randrange(2**32))
        x = rng.randrange(n)
        others = [v for v in range(n) if v != x]
        Y = rng.sample(others, rng.randint(k, len(others)))
        case = f"fan-{index} {encode_graph6(graph)} x={x} k={k}"
        try:
            fan = fan_paths(graph, x, Y, k)
            problems = validate_fan(graph, x, Y, fan, k)
        except (PreconditionError, CriticalFinding) as e:
            problems = [str(e)]
        rows.append(_row("fan", case, "fail" if problems else "pass", "; ".join(problems)))
    return rows


# -------------- Part 4: Permutation classes -------------- #

def run_sigma_suite() -> List[Dict[str, str]]:
    rows = []
    for cls in sigma_classes():
        expected = EXPECTED_CLASSES[cls.index]
        outcome = "pass" if cls.orbit == expected else "fail"
        rows.append(_row("sigma", cls.name, outcome, " ".join(cls.orbit)))
    landed = {canonical_sigma(p).index for p in permutations((1, 2, 3, 4))}
    sizes = tuple(len(cls.orbit) for cls in sigma_classes())
    ok = landed == set(range(1, 8)) and sizes == (2, 2, 4, 4, 8, 2, 2)
    rows.append(_row("sigma", "all 24 permutations", "pass" if ok else "fail", f"orbit sizes {sizes}"))
    return rows


# -------------- Part 5: Bound formulas -------------- #

def run_bounds_suite(max_k: int = 10, max_n: int = 60) -> List[Dict[str, str]]:
    problems = []
    for k in range(1, max_k + 1):
        for n in range(1, max_n + 1):
            main = min(k, math.ceil(Fraction(8 * k - n - 4, 3)))
            gutierrez = math.ceil(Fraction(8 * k - n + 2, 5))
            if bound_main(k, n) != main:
                problems.append(f"main({k},{n}) = {bound_main(k, n)}, exact {main}")
            if bound_gutierrez(k, n) != gutierrez:
                problems.append(f"gutierrez({k},{n}) = {bound_gutierrez(k, n)}, exact {gutierrez}")
            if 5 * k >= n + 2 and bound_main(k, n) != k:
                problems.append(f"main({k},{n}) = {bound_main(k, n)} although k >= (n+2)/5")
    rows = [_row("bounds", f"grid k<={max_k}, n<={max_n}", "fail" if problems else "pass", "; ".join(problems[:5]))]
    chen = bound_chen(1)
    rows.append(_row("bounds", "chen(1)", "pass" if abs(chen - 0.2615) < 1e-3 else "fail", f"{chen:.6f}"))
    return rows


# -------------- Part 6: Length oracles -------------- #

def run_oracle_suite(graphs: int = 500, seed: int = 9) -> List[Dict[str, str]]:
    rng = random.Random(seed)
    problems = []
    for _ in tqdm(range(graphs), desc="oracle"):
        n = rng.randint(2, 10)
        graph = random_k_connected(n, rng.uniform(0.35, 0.9), 1, rng.randrange(2**32))
        lengths = {method: longest_path_length(graph, method) for method in ("dp", "bnb", "naive")}
        if len(set(lengths.values())) != 1:
            problems.append(f"{encode_graph6(graph)}: {lengths}")
    return [_row("oracle", f"{graphs} connected graphs, n <= 10", "fail" if problems else "pass", "; ".join(problems[:5]))]


# -------------- Part 7: Edge-absence predicates over H -------------- #

def run_claims_suite(graphs: int = 60, seed: int = 11) -> List[Dict[str, str]]:
    """
    Pairs sharing exactly four vertices with all four ends off the shared set. The predicates are
    proven for 5-connected graphs only, so below that the counts are recorded as info.
    """
    rng = random.Random(seed)
    rows = []
    for index in tqdm(range(graphs), desc="claims"):
        graph = random_k_connected(rng.randint(9, 12), 0.35, 2, rng.randrange(2**32))
        enumeration = enumerate_longest_paths(graph, SUITE_BUDGET)
        if not enumeration.complete:
            rows.append(_row("claims", f"claims-{index}", "incomplete"))
            continue
        instances, violations, errors = 0, 0, []
        paths = enumeration.paths
        for a, P in enumerate(paths):
            for Q in paths[a + 1:]:
                shared = P.vertex_set & Q.vertex_set
                if len(shared) != 4 or {P.start, P.end, Q.start, Q.end} & shared:
                    continue
                instances += 1
                try:
                    violations += len(claim_xy_violations(graph, P, Q)) + len(claim_p0_violations(graph, P, Q))
                except (PreconditionError, CriticalFinding) as e:
                    errors.append(f"P={P} Q={Q}: {e}")
                if instances >= MAX_INSTANCES_PER_GRAPH:
                    break
            if instances >= MAX_INSTANCES_PER_GRAPH:
                break
        kappa = vertex_connectivity(graph)
        if errors:
            outcome = "fail"
        elif not instances:
            outcome = "vacuous"
        elif kappa >= 5:
            outcome = "fail" if violations else "pass"
        else:
            outcome = "info"
        detail = f"kappa={kappa}, {instances} pairs, {violations} violations" + ("; " + errors[0] if errors else "")
        rows.append(_row("claims", f"claims-{index} {encode_graph6(graph)}", outcome, detail))
    return rows


# -------------- Part 8: Run everything -------------- #

def main() -> pd.DataFrame:
    suites = [
        ("tightness", run_tightness_suite),
        ("rotation", run_rotation_suite),
        ("fan", run_fan_suite),
        ("sigma", run_sigma_suite),
        ("bounds", run_bounds_suite),
        ("oracle", run_oracle_suite),
        ("claims", run_claims_suite),
    ]
    rows: List[Dict[str, str]] = []
    for name, suite in suites:
        logger.info(f"--------------------------------\nRunning suite: {name}")
        results = suite()
        rows.extend(results)
        counts = pd.Series([row["outcome"] for row in results]).value_counts().to_dict()
        logger.info(f"{name}: {counts}")

    results_df = pd.DataFrame(rows, columns=["suite", "case", "outcome", "detail"])

    # Export to CSV, with time_stamp
    results_df.to_csv(f"evaluation_results_{time_stamp}.csv", index=False)
    failures = int((results_df["outcome"] == "fail").sum())
    logger.info(f"Evaluation Results completed! {len(results_df)} rows, {failures} failures")
    return results_df


if __name__ == "__main__":
    main()
