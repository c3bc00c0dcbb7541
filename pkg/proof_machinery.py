"""
proof_machinery.py
Goal: Certified constructions behind the intersection bounds for two longest paths.

Covers endpoint rotation and the rotation witness, fans of internally disjoint paths,
the edge-outside-P inequality (check_claim2), the injection f, the seven classes of
shared-vertex permutations, and the component graph H with its replaceable pairs and
edge-absence predicates.

Every construction has a separate validator and the validators never call the
constructions. Functions taking paths do not re-check that the paths are longest;
callers that need it pass paths straight out of path_engine.enumerate_longest_paths.

Last Updated: 2026-10-17
"""

# Import statements
import logging
import re
from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Callable, Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from graph_core import (
    Graph,
    VertexSet,
    iter_bits,
    mask_of,
    reachable_mask,
    set_of,
    split_network,
    vertex_connectivity,
    walk_to_vertices,
)
from path_engine import DEFAULT_BUDGET, Path, PathError, min_pairwise_intersection, validate_path

logger = logging.getLogger(__name__)

Permutation = Tuple[int, ...]


# -------------- Part 1: Errors -------------- #

class PreconditionError(ValueError):
    """The inputs do not meet the hypotheses of the construction."""


class CriticalFinding(RuntimeError):
    """A certificate search failed where the underlying argument says it cannot. `data` holds the evidence."""

    def __init__(self, message: str, data: Optional[dict] = None):
        super().__init__(message)
        self.data = data or {}


# -------------- Part 2: Rotations and the rotation witness -------------- #

@dataclass(frozen=True)
class RotationStep:
    pivot: int
    old_end: int
    new_end: int
    at_front: bool = True


def rotate_path(graph: Graph, path: Path, pivot: int) -> Path:
    """
    For pivot q_{i+1} adjacent to q_0 (i >= 1) return q_i ... q_0 q_{i+1} ... q_l.
    Vertex set and length are unchanged.
    """
    if pivot not in path:
        raise PreconditionError(f"pivot {pivot} is not on the path")
    index = path.index(pivot)
    if index == 0:
        raise PreconditionError(f"pivot {pivot} is the endpoint itself")
    if index == 1:
        raise PreconditionError(f"pivot {pivot} is q1; rotating there gives the same path")
    if not graph.has_edge(path.start, pivot):
        raise PreconditionError(f"pivot {pivot} is not adjacent to the endpoint {path.start}")
    return Path(path.vertices[index - 1::-1] + path.vertices[index:])


def rotations(graph: Graph, path: Path) -> Iterator[Tuple[RotationStep, Path]]:
    """Every single rotation at either end; front pivots first, each end's pivots in path order."""
    for at_front, oriented in ((True, path), (False, path.reversed())):
        end = oriented.start
        for pivot in oriented.vertices[2:]:
            if not graph.has_edge(end, pivot):
                continue
            rotated = rotate_path(graph, oriented, pivot)
            if not at_front:
                rotated = rotated.reversed()
            new_end = rotated.start if at_front else rotated.end
            yield RotationStep(pivot, end, new_end, at_front), rotated


def _rotation_search(graph: Graph, path: Path, goal: Callable[[Path], bool], cap: int) -> Tuple[Optional[Path], List[Path]]:
    """Breadth-first over the rotation closure, goal tested on generation, at most `cap` expansions."""
    if goal(path):
        return path, [path]
    seen = {path.vertices}
    visited = [path]
    queue = deque([path])
    expanded = 0
    while queue and expanded < cap:
        current = queue.popleft()
        expanded += 1
        for _, rotated in rotations(graph, current):
            if rotated.vertices in seen:
                continue
            seen.add(rotated.vertices)
            visited.append(rotated)
            if goal(rotated):
                return rotated, visited
            queue.append(rotated)
    return None, visited


def _check_rotation_inputs(graph: Graph, P: Path, Q: Path, k: int) -> None:
    validate_path(graph, P.vertices)
    validate_path(graph, Q.vertices)
    if k < 1:
        raise PreconditionError(f"k must be positive, got {k}")
    shared = len(P.vertex_set & Q.vertex_set)
    if shared > k - 1:
        raise PreconditionError(f"P and Q share {shared} vertices, more than k-1 = {k - 1}")
    for end in (Q.start, Q.end):
        if graph.degree(end) < k:
            raise PreconditionError(f"end {end} of Q has degree {graph.degree(end)} < k = {k}")


def normalize_endpoints(graph: Graph, P: Path, Q: Path, k: int) -> Path:
    """
    Rotate Q until neither end lies on P. Checks |V(P) & V(Q)| <= k-1 and that both ends
    of Q have degree >= k; longest-ness and k-connectivity are the caller's.
    """
    _check_rotation_inputs(graph, P, Q, k)
    cap = len(Q) ** 2

    def ends_off_p(path: Path) -> bool:
        return path.start not in P and path.end not in P

    found, visited = _rotation_search(graph, Q, ends_off_p, cap)
    if found is None:
        raise PreconditionError(
            f"lemma precondition violated: no rotation of Q moves both ends off P "
            f"within {cap} expansions ({len(visited)} paths visited)"
        )
    return found


def _scan_witness(graph: Graph, P: Path, Q: Path) -> Optional[int]:
    """Smallest i making (Q, i) a witness as Q is oriented, or None."""
    q = Q.vertices
    last = len(q) - 1
    if last < 1 or q[0] in P:
        return None
    if q[1] not in P:
        return 1
    for i in range(2, last):
        if q[i] not in P and graph.has_edge(q[0], q[i]) and graph.has_edge(q[0], q[i + 1]):
            return i
    return None


def lemma1_witness(graph: Graph, P: Path, Q: Path, k: int) -> Tuple[Path, int]:
    """
    A path Q' on V(Q) and an index i with q'_0, q'_i off P, q'_i adjacent to q'_0, and
    either i = 1 or q'_0 q'_{i+1} an edge. Tries, in order: a second vertex off P at
    either end, the chord between the ends, a chord q'_0 q'_j whose two predecessors avoid
    P, a pair of consecutive neighbours of q'_0, and finally the whole rotation closure.
    """
    base = normalize_endpoints(graph, P, Q, k)
    q = base.vertices
    last = len(q) - 1
    if last == 0:
        raise PreconditionError("Q is a single vertex")

    if q[1] not in P:
        return base, 1
    if q[last - 1] not in P:
        return base.reversed(), 1

    if graph.has_edge(q[0], q[last]):
        return Path((q[last],) + q[:last]), 1

    for oriented in (base, base.reversed()):
        v = oriented.vertices
        for j in range(2, last):
            if graph.has_edge(v[0], v[j]) and v[j - 1] not in P and v[j - 2] not in P:
                return rotate_path(graph, oriented, v[j]), 1

    for oriented in (base, base.reversed()):
        i = _scan_witness(graph, P, oriented)
        if i is not None:
            return oriented, i

    def witnessed(path: Path) -> bool:
        return _scan_witness(graph, P, path) is not None or _scan_witness(graph, P, path.reversed()) is not None

    found, visited = _rotation_search(graph, base, witnessed, len(base) ** 2)
    if found is not None:
        logger.warning(f"Rotation witness needed the closure search (P={P}, Q={Q}, k={k})")
        for oriented in (found, found.reversed()):
            i = _scan_witness(graph, P, oriented)
            if i is not None:
                return oriented, i

    logger.error(f"No rotation witness for P={P}, Q={Q}, k={k}")
    raise CriticalFinding(
        "no rotation witness in the rotation closure",
        {"P": P.vertices, "Q": Q.vertices, "k": k, "closure": [path.vertices for path in visited]},
    )


def validate_lemma1_witness(graph: Graph, P: Path, Q: Path, witness: Path, i: int) -> List[str]:
    """Postconditions of a rotation witness, checked from scratch. Empty list means valid."""
    problems: List[str] = []
    try:
        validate_path(graph, witness.vertices)
    except PathError as err:
        return [f"not a path of the graph: {err}"]
    if witness.vertex_set != Q.vertex_set:
        problems.append("vertex set differs from V(Q)")
    v = witness.vertices
    last = len(v) - 1
    if v[0] in P.vertex_set:
        problems.append(f"first vertex {v[0]} lies on P")
    if not 1 <= i <= last:
        problems.append(f"index {i} outside 1..{last}")
        return problems
    if v[i] in P.vertex_set:
        problems.append(f"q'_{i} = {v[i]} lies on P")
    if not graph.has_edge(v[0], v[i]):
        problems.append(f"q'_{i} = {v[i]} is not adjacent to q'_0 = {v[0]}")
    if i != 1:
        if i > last - 1:
            problems.append(f"index {i} leaves no q'_{i + 1}")
        elif not graph.has_edge(v[0], v[i + 1]):
            problems.append(f"i = {i} > 1 but q'_0 q'_{i + 1} is not an edge")
    return problems


# -------------- Part 3: Fans -------------- #

@dataclass(frozen=True)
class FanResult:
    x: int
    Y: VertexSet
    paths: Tuple[Tuple[int, ...], ...]

    @property
    def terminals(self) -> Tuple[int, ...]:
        return tuple(path[-1] for path in self.paths)

    @property
    def k(self) -> int:
        return len(self.paths)


def fan_paths(graph: Graph, x: int, Y: Iterable[int], k: int, connectivity: Optional[int] = None) -> FanResult:
    """
    k internally disjoint (x, Y)-paths with distinct terminals: max flow from x_out to a
    super-sink fed by every y_in, then flow decomposition.
    """
    targets = frozenset(Y)
    if not 0 <= x < graph.n:
        raise PreconditionError(f"x = {x} is not a vertex")
    outside = sorted(y for y in targets if not 0 <= y < graph.n)
    if outside:
        raise PreconditionError(f"Y contains non-vertices {outside}")
    if x in targets:
        raise PreconditionError("x must not be in Y")
    if k < 1:
        raise PreconditionError(f"k must be positive, got {k}")
    if len(targets) < k:
        raise PreconditionError(f"|Y| = {len(targets)} is smaller than k = {k}")
    kappa = vertex_connectivity(graph) if connectivity is None else connectivity
    if kappa < k:
        raise PreconditionError(f"graph is {kappa}-connected, fan needs {k}")

    network = split_network(graph, x, targets)
    sink = 2 * graph.n
    for y in targets:
        network.add_arc(2 * y, sink, 1)
    flow = network.max_flow(2 * x + 1, sink, limit=k)
    if flow < k:
        logger.error(f"Fan from {x} carries {flow} < {k} units in a {kappa}-connected graph")
        raise CriticalFinding(f"only {flow} disjoint (x, Y)-paths found, expected {k}", {"x": x, "Y": sorted(targets), "k": k})
    walks = network.decompose(2 * x + 1, lambda node: node == sink)
    paths = tuple(sorted(walk_to_vertices(walk[:-1]) for walk in walks))
    return FanResult(x=x, Y=targets, paths=paths)


def validate_fan(graph: Graph, x: int, Y: Iterable[int], fan: FanResult, k: Optional[int] = None) -> List[str]:
    """Fan invariants by explicit set intersection over all path pairs. Empty list means valid."""
    targets = frozenset(Y)
    problems: List[str] = []
    if k is not None and fan.k != k:
        problems.append(f"{fan.k} paths, expected {k}")
    for path in fan.paths:
        try:
            validate_path(graph, path)
        except PathError as err:
            problems.append(f"{path}: {err}")
            continue
        if path[0] != x:
            problems.append(f"{path} does not start at x = {x}")
        if path[-1] not in targets:
            problems.append(f"{path} does not end in Y")
        inner = set(path[1:-1])
        if inner & targets:
            problems.append(f"{path} passes through Y at {sorted(inner & targets)}")
        if len(path) < 2:
            problems.append(f"{path} has no edge")
    terminals = Counter(path[-1] for path in fan.paths)
    repeated = sorted(t for t, count in terminals.items() if count > 1)
    if repeated:
        problems.append(f"terminals repeated: {repeated}")
    for a in range(len(fan.paths)):
        for b in range(a + 1, len(fan.paths)):
            common = set(fan.paths[a]) & set(fan.paths[b])
            if common != {x}:
                problems.append(f"{fan.paths[a]} and {fan.paths[b]} share {sorted(common - {x})}")
    return problems


# -------------- Part 4: Inequalities on single instances -------------- #

def bound_submain(k: int, length: int) -> int:
    """min{4k - l - 3, k}, stated for k >= 3 only."""
    if k < 3:
        raise ValueError(f"the bound needs k >= 3, got {k}")
    return min(4 * k - length - 3, k)


def claim2_threshold(k: int, touching: int) -> int:
    """4k - 3 - |N({q, q'}) & V(P)|: the length every longest path must reach."""
    return 4 * k - 3 - touching


def check_claim2(graph: Graph, P: Path, q: int, q2: int, k: Optional[int] = None) -> bool:
    """
    For an edge qq' with q, q' off the longest path P in a k-connected graph (k >= 3):
    l(P) >= 4k - 3 - |N({q, q'}) & V(P)|. A False return is a counterexample.
    """
    validate_path(graph, P.vertices)
    if q == q2 or not graph.has_edge(q, q2):
        raise PreconditionError(f"{q}{q2} is not an edge")
    if q in P or q2 in P:
        raise PreconditionError(f"edge {q}{q2} touches P")
    if k is None:
        k = vertex_connectivity(graph)
    if k < 3:
        raise PreconditionError(f"needs connectivity >= 3, got {k}")
    touching = (graph.neighbourhood_mask((q, q2)) & P.mask).bit_count()
    return P.length >= claim2_threshold(k, touching)


@dataclass
class Claim2Scan:
    instances: int = 0
    failures: List[Tuple[Path, int, int]] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.failures


def scan_claim2(graph: Graph, paths: Iterable[Path], k: int) -> Claim2Scan:
    """check_claim2 over every given longest path and every edge avoiding it."""
    scan = Claim2Scan()
    edges = graph.edges()
    for P in paths:
        for q, q2 in edges:
            if q in P or q2 in P:
                continue
            scan.instances += 1
            if not check_claim2(graph, P, q, q2, k):
                scan.failures.append((P, q, q2))
    return scan


def check_submain(graph: Graph, budget: int = DEFAULT_BUDGET) -> bool:
    """L(G) >= min{4k - l - 3, k} for k = kappa(G) >= 3. Raises EnumerationIncomplete past the budget."""
    k = vertex_connectivity(graph)
    if k < 3:
        raise PreconditionError(f"needs connectivity >= 3, got {k}")
    value, pair = min_pairwise_intersection(graph, budget)
    return value >= bound_submain(k, pair.P.length)


@dataclass
class InjectionCheck:
    """f on N0 | N1 into V(P) & V(Q): identity on N0, successor along P on N1."""

    n0: VertexSet
    n1: VertexSet
    images: Dict[int, int]
    undefined: List[int]

    @property
    def well_defined(self) -> bool:
        return not self.undefined

    @property
    def injective(self) -> bool:
        return self.well_defined and len(set(self.images.values())) == len(self.images)


def check_injection(graph: Graph, P: Path, Q: Path) -> InjectionCheck:
    validate_path(graph, P.vertices)
    validate_path(graph, Q.vertices)
    if len(Q) < 2:
        raise PreconditionError("Q needs at least two vertices")
    q0, q1 = Q.vertices[:2]
    if q0 in P or q1 in P:
        raise PreconditionError(f"q0 = {q0} and q1 = {q1} must both avoid P")
    touching = graph.neighbourhood_mask((q0, q1)) & P.mask
    n0 = set_of(touching & Q.mask)
    n1 = set_of(touching & ~Q.mask)
    images = {p: p for p in n0}
    undefined: List[int] = []
    for p in sorted(n1):
        position = P.index(p)
        if position == len(P) - 1 or P.vertices[position + 1] not in Q:
            undefined.append(p)
        else:
            images[p] = P.vertices[position + 1]
    return InjectionCheck(n0=n0, n1=n1, images=images, undefined=undefined)


def check_neighbourhood_inequality(graph: Graph, P: Path, Q: Path, i: int) -> bool:
    """|N({q0, q_i}) & V(P)| <= |V(P) & V(Q)|."""
    if not 1 <= i <= Q.length:
        raise PreconditionError(f"index {i} outside 1..{Q.length}")
    touching = (graph.neighbourhood_mask((Q.start, Q.vertices[i])) & P.mask).bit_count()
    return touching <= len(P.vertex_set & Q.vertex_set)


# -------------- Part 5: Permutations of the four shared vertices -------------- #

IDENTITY: Permutation = (1, 2, 3, 4)
REVERSAL: Permutation = (4, 3, 2, 1)  # (14)(23)

# One-line forms of sigma1..sigma7: (1), (23), (1234), (12), (134), (12)(34), (1243)
SIGMA_REPRESENTATIVES: Tuple[Permutation, ...] = (
    (1, 2, 3, 4),
    (1, 3, 2, 4),
    (2, 3, 4, 1),
    (2, 1, 3, 4),
    (3, 2, 4, 1),
    (2, 1, 4, 3),
    (2, 4, 1, 3),
)


def compose(a: Permutation, b: Permutation) -> Permutation:
    """(a b)(x) = a(b(x))."""
    return tuple(a[b[x] - 1] for x in range(len(b)))


def inverse(p: Permutation) -> Permutation:
    result = [0] * len(p)
    for position, value in enumerate(p, 1):
        result[value - 1] = position
    return tuple(result)


def to_cycles(p: Permutation) -> str:
    """Cycle notation, each cycle led by its smallest element; the identity is '(1)'."""
    seen = set()
    parts = []
    for start in range(1, len(p) + 1):
        if start in seen:
            continue
        cycle = [start]
        seen.add(start)
        nxt = p[start - 1]
        while nxt != start:
            cycle.append(nxt)
            seen.add(nxt)
            nxt = p[nxt - 1]
        if len(cycle) > 1:
            parts.append("(" + "".join(str(v) for v in cycle) + ")")
    return "".join(parts) or "(1)"


def parse_cycles(text: str, size: int = 4) -> Permutation:
    """'(13)', '(14)(23)', '(1)' -> one-line tuple on 1..size."""
    compact = text.replace(" ", "")
    if not re.fullmatch(r"(\(\d+\))+", compact):
        raise ValueError(f"not a cycle string: {text!r}")
    mapping = list(range(1, size + 1))
    used = set()
    for group in re.findall(r"\((\d+)\)", compact):
        cycle = [int(ch) for ch in group]
        for v in cycle:
            if not 1 <= v <= size or v in used:
                raise ValueError(f"bad or repeated point {v} in {text!r}")
            used.add(v)
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            mapping[a - 1] = b
    return tuple(mapping)


def _as_permutation(sigma: Union[Sequence[int], str]) -> Permutation:
    p = parse_cycles(sigma) if isinstance(sigma, str) else tuple(sigma)
    if sorted(p) != [1, 2, 3, 4]:
        raise ValueError(f"{sigma!r} is not a permutation of 1..4")
    return p


def sigma_orbit(sigma: Union[Sequence[int], str]) -> FrozenSet[Permutation]:
    """Closure of sigma under inversion and left composition with (14)(23)."""
    start = _as_permutation(sigma)
    orbit = {start}
    queue = deque([start])
    while queue:
        p = queue.popleft()
        for image in (inverse(p), compose(REVERSAL, p)):
            if image not in orbit:
                orbit.add(image)
                queue.append(image)
    return frozenset(orbit)


@dataclass(frozen=True)
class SigmaClass:
    index: int
    representative: Permutation
    orbit: Tuple[str, ...]

    @property
    def name(self) -> str:
        return f"sigma{self.index}"

    @property
    def cycles(self) -> str:
        return to_cycles(self.representative)


def canonical_sigma(sigma: Union[Sequence[int], str]) -> SigmaClass:
    """The one representative among sigma1..sigma7 in the orbit of sigma."""
    orbit = sigma_orbit(sigma)
    matches = [i for i, rep in enumerate(SIGMA_REPRESENTATIVES, 1) if rep in orbit]
    if len(matches) != 1:
        raise CriticalFinding(f"orbit of {sigma!r} holds {len(matches)} representatives", {"orbit": sorted(orbit)})
    index = matches[0]
    listed = tuple(sorted((to_cycles(p) for p in orbit), key=lambda s: (len(s), s)))
    return SigmaClass(index=index, representative=SIGMA_REPRESENTATIVES[index - 1], orbit=listed)


def sigma_classes() -> List[SigmaClass]:
    return [canonical_sigma(rep) for rep in SIGMA_REPRESENTATIVES]


def _labels(P: Path, Q: Path) -> Tuple[int, ...]:
    """v1..v4: the shared vertices in P's order."""
    shared = P.vertex_set & Q.vertex_set
    if len(shared) != 4:
        raise PreconditionError(f"P and Q share {len(shared)} vertices, expected 4")
    return tuple(v for v in P if v in shared)


def _pattern(P: Path, Q: Path) -> Permutation:
    rank = {v: i for i, v in enumerate(_labels(P, Q), 1)}
    return tuple(rank[v] for v in Q if v in rank)


def intersection_pattern(P: Path, Q: Path) -> Permutation:
    """sigma with Q visiting v_sigma(1) .. v_sigma(4); Q is read in its canonical orientation."""
    return _pattern(P, Q.canonical())


def align_to_representative(P: Path, Q: Path) -> Tuple[Path, Path, SigmaClass]:
    """
    Swap P and Q and/or reverse either path until the pattern is exactly one of
    sigma1..sigma7. The eight combinations cover every symmetry of the configuration.
    """
    for first, second in ((P, Q), (Q, P)):
        for a in (first, first.reversed()):
            for b in (second, second.reversed()):
                sigma = _pattern(a, b)
                if sigma in SIGMA_REPRESENTATIVES:
                    return a, b, canonical_sigma(sigma)
    raise CriticalFinding("no orientation reaches a representative", {"P": P.vertices, "Q": Q.vertices})


# -------------- Part 6: The component graph H -------------- #

@dataclass(frozen=True)
class HNode:
    """A component of P - S or Q - S, in path order, with the shared vertices it hangs from."""

    name: str
    origin: str
    vertices: Tuple[int, ...]
    boundary: Tuple[int, ...]

    @property
    def mask(self) -> int:
        return mask_of(self.vertices)


@dataclass
class AuxiliaryH:
    P: Path
    Q: Path
    labels: Tuple[int, ...]
    sigma: Permutation
    nodes: List[HNode]
    edges: FrozenSet[FrozenSet[str]]

    def node(self, name: str) -> HNode:
        for candidate in self.nodes:
            if candidate.name == name:
                return candidate
        raise KeyError(name)

    def names(self, origin: Optional[str] = None) -> List[str]:
        return [node.name for node in self.nodes if origin is None or node.origin == origin]

    def adjacent(self, a: str, b: str) -> bool:
        return frozenset((a, b)) in self.edges

    def neighbours(self, name: str) -> List[str]:
        return [other for other in self.names() if other != name and self.adjacent(name, other)]

    def is_connected(self) -> bool:
        names = self.names()
        if not names:
            return True
        seen = {names[0]}
        queue = deque([names[0]])
        while queue:
            current = queue.popleft()
            for other in self.neighbours(current):
                if other not in seen:
                    seen.add(other)
                    queue.append(other)
        return len(seen) == len(names)


def _path_components(path: Path, shared: VertexSet, origin: str, rank: Dict[int, int]) -> List[HNode]:
    runs: List[Tuple[Optional[int], List[int], Optional[int]]] = []
    before: Optional[int] = None
    run: List[int] = []
    for v in path:
        if v in shared:
            if run:
                runs.append((before, run, v))
                run = []
            before = v
        else:
            run.append(v)
    if run:
        runs.append((before, run, None))

    nodes = []
    for before, run, after in runs:
        if before is None:
            name = f"{origin}0"
        elif after is None:
            name = f"{origin}1"
        else:
            name = f"{origin}(v{rank[before]},v{rank[after]})"
        boundary = tuple(v for v in (before, after) if v is not None)
        nodes.append(HNode(name=name, origin=origin, vertices=tuple(run), boundary=boundary))
    return nodes


def _build_auxiliary(graph: Graph, P: Path, Q: Path) -> AuxiliaryH:
    """H with Q read exactly as passed; Q0 is the component at Q.start."""
    validate_path(graph, P.vertices)
    validate_path(graph, Q.vertices)
    labels = _labels(P, Q)
    shared = frozenset(labels)
    ends_on_s = sorted({P.start, P.end, Q.start, Q.end} & shared)
    if ends_on_s:
        raise PreconditionError(f"path ends {ends_on_s} lie in S")
    rank = {v: i for i, v in enumerate(labels, 1)}
    nodes = _path_components(P, shared, "P", rank) + _path_components(Q, shared, "Q", rank)

    outside = graph.vertex_mask & ~(P.mask | Q.mask)
    edges = set()
    for i, a in enumerate(nodes):
        reach = reachable_mask(graph, a.mask, outside)
        touched = 0
        for v in iter_bits(reach):
            touched |= graph.adjacency[v]
        for b in nodes[i + 1:]:
            if touched & b.mask:
                edges.add(frozenset((a.name, b.name)))

    aux = AuxiliaryH(P=P, Q=Q, labels=labels, sigma=_pattern(P, Q), nodes=nodes, edges=frozenset(edges))
    rest = graph.vertex_mask & ~mask_of(shared)
    if rest and reachable_mask(graph, rest & -rest, rest) == rest and not aux.is_connected():
        logger.error(f"H is disconnected although G - S is connected (P={P}, Q={Q})")
        raise CriticalFinding("G - S is connected but H is not", {"P": P.vertices, "Q": Q.vertices})
    return aux


def build_auxiliary_H(graph: Graph, P: Path, Q: Path) -> AuxiliaryH:
    """
    Nodes: components of P - S then of Q - S. XY is an edge when some X-Y path in G - S
    has all internal vertices outside V(P) | V(Q) (a direct edge counts).
    Q is read in its canonical orientation, as in intersection_pattern, so aux.sigma and the
    Q0 / Q1 names agree with that pattern.
    """
    return _build_auxiliary(graph, P, Q.canonical())


def _union_edges(P: Path, Q: Path) -> FrozenSet[FrozenSet[int]]:
    """E(P) | E(Q), the edge set of the graph L."""
    return frozenset(frozenset(e) for path in (P, Q) for e in zip(path.vertices, path.vertices[1:]))


def _shape(edges: FrozenSet[FrozenSet[int]], vertices: Iterable[int]) -> Optional[str]:
    """'path' or 'cycle' when the subgraph of L induced on `vertices` is one, else None."""
    members = set(vertices)
    inner = [e for e in edges if e <= members]
    degree = Counter(v for e in inner for v in e)
    if any(d > 2 for d in degree.values()):
        return None
    start = next(iter(members))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for e in inner:
            if v in e:
                (u,) = e - {v}
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
    if seen != members:
        return None
    if len(inner) == len(members) - 1:
        return "path"
    if len(inner) == len(members) >= 3:
        return "cycle"
    return None


def _find_replaceable(aux: AuxiliaryH, L: FrozenSet[FrozenSet[int]]) -> List[Tuple[str, str]]:
    pairs = []
    for X in aux.nodes:
        if X.origin != "P":
            continue
        for Y in aux.nodes:
            if Y.origin != "Q":
                continue
            closes_cycle = any(
                _shape(L, X.vertices + Y.vertices + aux.labels[i:i + 2]) == "cycle" for i in range(3)
            )
            end_pair = (aux.sigma[0] == 1 and (X.name, Y.name) == ("P0", "Q0")) or (
                aux.sigma[3] == 4 and (X.name, Y.name) == ("P1", "Q1")
            )
            if closes_cycle or end_pair:
                pairs.append((X.name, Y.name))
    return pairs


def swap_component(graph: Graph, P: Path, Q: Path, X: HNode, Y: HNode) -> Path:
    """P with the run X replaced by the run Y (whichever orientation of Y fits)."""
    start = P.index(X.vertices[0])
    head, tail = P.vertices[:start], P.vertices[start + len(X.vertices):]
    for run in (Y.vertices, Y.vertices[::-1]):
        try:
            return validate_path(graph, head + run + tail)
        except PathError:
            continue
    raise PreconditionError(f"replacing {X.name} by {Y.name} in P does not give a path")


def replaceable_pairs(graph: Graph, P: Path, Q: Path, sigma: Optional[Sequence[int]] = None) -> List[Tuple[str, str]]:
    """
    Pairs (X from P, Y from Q) such that L[X | Y | {v_i, v_i+1}] is a cycle, or
    sigma(1) = 1 and {X, Y} = {P0, Q0}, or sigma(4) = 4 and {X, Y} = {P1, Q1}.
    Each swap is checked to keep the length of P. sigma, when given, must be
    intersection_pattern(P, Q).
    """
    aux = build_auxiliary_H(graph, P, Q)
    if sigma is not None and tuple(sigma) != aux.sigma:
        raise PreconditionError(f"sigma {tuple(sigma)} does not match the pattern {aux.sigma} of P and Q")
    pairs = _find_replaceable(aux, _union_edges(P, Q))
    for x_name, y_name in pairs:
        swapped = swap_component(graph, P, Q, aux.node(x_name), aux.node(y_name))
        if swapped.length != P.length:
            raise PreconditionError(
                f"swapping {x_name} for {y_name} changes the length from {P.length} to {swapped.length}; P and Q are not both longest"
            )
    return pairs


# -------------- Part 7: Edge-absence predicates over H -------------- #

@dataclass(frozen=True)
class ClaimViolation:
    claim: str
    sigma: str
    detail: str


def claim_xy_violations(graph: Graph, P: Path, Q: Path) -> List[ClaimViolation]:
    """
    After alignment: no H-edge XY for X in P-S, Y in Q-S when both are end components or
    L[X | Y | {v_i}] is a path; a replaceable pair disjoint from such {X, Y} has no member
    adjacent to both; and P0P1 is not an edge unless sigma is sigma6.
    """
    A, B, cls = align_to_representative(P, Q)
    aux = _build_auxiliary(graph, A, B)
    L = _union_edges(A, B)
    replaceable = _find_replaceable(aux, L)
    ends = {"P0", "P1", "Q0", "Q1"}
    violations: List[ClaimViolation] = []

    for X in aux.nodes:
        if X.origin != "P":
            continue
        for Y in aux.nodes:
            if Y.origin != "Q":
                continue
            hangs_together = any(_shape(L, X.vertices + Y.vertices + (v,)) == "path" for v in aux.labels)
            if not ((X.name in ends and Y.name in ends) or hangs_together):
                continue
            if aux.adjacent(X.name, Y.name):
                violations.append(ClaimViolation("xy-i", cls.name, f"{X.name}{Y.name} is an edge of H"))
            for a, b in replaceable:
                if {a, b} & {X.name, Y.name}:
                    continue
                for c in (a, b):
                    if aux.adjacent(c, X.name) and aux.adjacent(c, Y.name):
                        violations.append(ClaimViolation(
                            "xy-i", cls.name, f"{c} of replaceable pair {{{a},{b}}} is adjacent to both {X.name} and {Y.name}",
                        ))

    if cls.index != 6 and aux.adjacent("P0", "P1"):
        violations.append(ClaimViolation("xy-ii", cls.name, "P0P1 is an edge of H"))
    if violations:
        logger.error(f"Claim XY violated on P={A}, Q={B}: {[v.detail for v in violations]}")
    return violations


def claim_p0_violations(graph: Graph, P: Path, Q: Path) -> List[ClaimViolation]:
    """After alignment: sigma3..sigma7 forbid P0 ~ P(v2,v3); sigma5, sigma6 forbid P0 ~ P(v3,v4)."""
    A, B, cls = align_to_representative(P, Q)
    aux = _build_auxiliary(graph, A, B)
    violations: List[ClaimViolation] = []
    if cls.index in (3, 4, 5, 6, 7) and aux.adjacent("P0", "P(v2,v3)"):
        violations.append(ClaimViolation("p0-i", cls.name, "P0 is adjacent to P(v2,v3)"))
    if cls.index in (5, 6) and aux.adjacent("P0", "P(v3,v4)"):
        violations.append(ClaimViolation("p0-ii", cls.name, "P0 is adjacent to P(v3,v4)"))
    if violations:
        logger.error(f"Claim p0 violated on P={A}, Q={B}: {[v.detail for v in violations]}")
    return violations
