"""
generators.py
Goal: Build the tight families and seeded random k-connected instances the checks run on.

Families:
* complete-bipartite: K_{a,b}, parts {0..a-1} and {a..a+b-1}.
* tightness: K_{k,2k+2}, where two longest paths share exactly k vertices.
* gnp-kconn: G(n, p) samples kept only when vertex connectivity reaches k.
* windmill: blades copies of K_{blade_size} glued at vertex 0.

Last Updated: 2026-10-17
"""

# Import statements
import logging
import random
from dataclasses import dataclass
from typing import Iterator, List

import networkx as nx

from graph_core import Graph, encode_graph6, vertex_connectivity

logger = logging.getLogger(__name__)

FAMILIES = ("complete-bipartite", "tightness", "gnp-kconn", "windmill")


class GenerationError(RuntimeError):
    """Rejection sampling ran out of attempts."""


# -------------- Part 1: Deterministic families -------------- #

def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ValueError(f"both parts need a vertex, got a={a}, b={b}")
    return Graph.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def tightness_witness(k: int) -> Graph:
    """K_{k, 2k+2}."""
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    return complete_bipartite(k, 2 * k + 2)


def windmill(blades: int, blade_size: int) -> Graph:
    """
    Copies of K_{blade_size} sharing the centre 0. Longest paths through disjoint blades meet
    only at the centre, with minimum degree blade_size - 1 and connectivity 1.
    """
    if blades < 1 or blade_size < 2:
        raise ValueError(f"need blades >= 1 and blade_size >= 2, got {blades}, {blade_size}")
    edges = []
    for blade in range(blades):
        members = [0] + [1 + blade * (blade_size - 1) + i for i in range(blade_size - 1)]
        edges += [(u, v) for i, u in enumerate(members) for v in members[i + 1:]]
    return Graph.from_edges(1 + blades * (blade_size - 1), edges)


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


# -------------- Part 2: Random k-connected graphs -------------- #

def random_k_connected(n: int, p: float, k: int, seed: int, max_attempts: int = 1000) -> Graph:
    """Rejection sampling over G(n, p); deterministic for a fixed seed. p = 1 gives K_n."""
    if not 0 < p <= 1:
        raise ValueError(f"p must lie in (0, 1], got {p}")
    if not 0 <= k < n:
        raise ValueError(f"need 0 <= k < n, got k={k}, n={n}")
    if max_attempts < 1:
        raise ValueError("max_attempts must be at least 1")
    if p >= 1:
        return complete_graph(n)

    rng = random.Random(seed)
    for attempt in range(max_attempts):
        sample = Graph.from_networkx(nx.gnp_random_graph(n, p, seed=rng.randrange(2**32)))
        if vertex_connectivity(sample) >= k:
            logger.debug(f"G({n}, {p}) sample accepted after {attempt + 1} attempts")
            return sample
    raise GenerationError(
        f"no {k}-connected G({n}, {p}) sample in {max_attempts} attempts (seed {seed}); try a larger p"
    )


# -------------- Part 3: Generator specs -------------- #

@dataclass
class GeneratorSpec:
    family: str
    k: int = 2
    a: int = 2
    b: int = 6
    n: int = 10
    p: float = 0.5
    seed: int = 0
    count: int = 1
    max_attempts: int = 1000
    blades: int = 4
    blade_size: int = 4

    def validate(self) -> "GeneratorSpec":
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}, expected one of {FAMILIES}")
        if self.count < 1:
            raise ValueError("count must be at least 1")
        if self.family == "complete-bipartite" and (self.a < 1 or self.b < 1):
            raise ValueError("complete-bipartite needs a, b >= 1")
        if self.family == "tightness" and self.k < 1:
            raise ValueError("tightness needs k >= 1")
        if self.family == "gnp-kconn" and not (0 < self.p <= 1 and 0 <= self.k < self.n):
            raise ValueError("gnp-kconn needs 0 < p <= 1 and 0 <= k < n")
        return self


def generate(spec: GeneratorSpec) -> Iterator[Graph]:
    """
    Graphs for a spec. gnp-kconn draws `count` samples with per-graph seeds taken from one
    random.Random(seed); tightness walks k, k+1, ..., k+count-1; the rest yield one graph.
    """
    spec.validate()
    if spec.family == "complete-bipartite":
        yield complete_bipartite(spec.a, spec.b)
    elif spec.family == "tightness":
        for k in range(spec.k, spec.k + spec.count):
            yield tightness_witness(k)
    elif spec.family == "windmill":
        yield windmill(spec.blades, spec.blade_size)
    else:
        rng = random.Random(spec.seed)
        for _ in range(spec.count):
            yield random_k_connected(spec.n, spec.p, spec.k, rng.randrange(2**32), spec.max_attempts)


def generate_graph6(spec: GeneratorSpec) -> List[str]:
    return [encode_graph6(graph) for graph in generate(spec)]
