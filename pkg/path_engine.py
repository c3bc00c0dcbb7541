"""
path_engine.py
Goal: Exact longest-path length, complete enumeration of the longest paths, and the
minimum pairwise intersection L(G) of two longest paths.

Three independent length computations are kept on purpose: a (subset, endpoint) bitmask
DP, a branch-and-bound DFS, and an unpruned DFS used as the oracle in tests.

Last Updated: 2026-10-17
"""

# Import statements
import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator, List, Optional, Sequence, Tuple

from graph_core import Graph, VertexSet, iter_bits, mask_of, reachable_mask

logger = logging.getLogger(__name__)

SEARCH_LIMIT = 64
DP_THRESHOLD = 20
DEFAULT_BUDGET = 10**6
METHODS = ("auto", "dp", "bnb", "naive")


# -------------- Part 1: Errors and path types -------------- #

class PathError(ValueError):
    """A vertex sequence that is not a path of the host graph."""


class EnumerationIncomplete(RuntimeError):
    """Raised when a caller needs every longest path but the budget cut enumeration short."""

    def __init__(self, enumeration: "Enumeration"):
        super().__init__(
            f"enumeration incomplete: budget {enumeration.budget} reached "
            f"with {len(enumeration.paths)} paths of length {enumeration.length}"
        )
        self.enumeration = enumeration


@dataclass(frozen=True)
class Path:
    """
    Ordered sequence of distinct vertices. Adjacency is checked by validate_path, not here,
    so a Path can be built cheaply inside searches that already guarantee it.
    """

    vertices: Tuple[int, ...]
    vertex_set: VertexSet = field(init=False, repr=False, compare=False)
    mask: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "vertex_set", frozenset(self.vertices))
        object.__setattr__(self, "mask", mask_of(self.vertices))
        if len(self.vertex_set) != len(self.vertices):
            raise PathError(f"repeated vertex in {self.vertices}")

    @property
    def length(self) -> int:
        # edge count
        return len(self.vertices) - 1

    @property
    def start(self) -> int:
        return self.vertices[0]

    @property
    def end(self) -> int:
        return self.vertices[-1]

    def index(self, v: int) -> int:
        return self.vertices.index(v)

    def reversed(self) -> "Path":
        return Path(self.vertices[::-1])

    def canonical(self) -> "Path":
        """Orientation with the smaller endpoint first (full-sequence comparison on ties)."""
        return self if self.vertices <= self.vertices[::-1] else self.reversed()

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices)

    def __contains__(self, v) -> bool:
        return v in self.vertex_set

    def __str__(self) -> str:
        return " ".join(str(v) for v in self.vertices)


@dataclass(frozen=True)
class PathPair:
    """Two longest paths, their shared vertex set S and, when |S| = 4, the pattern sigma."""

    P: Path
    Q: Path
    S: VertexSet = field(init=False)
    sigma: Optional[Tuple[int, ...]] = None

    def __post_init__(self):
        object.__setattr__(self, "S", self.P.vertex_set & self.Q.vertex_set)

    @property
    def size(self) -> int:
        return len(self.S)


@dataclass
class Enumeration:
    """Longest paths in canonical orientation, in deterministic DFS order."""

    paths: List[Path]
    length: int
    complete: bool
    budget: int

    @property
    def count(self) -> int:
        return len(self.paths)

    def require_complete(self) -> "Enumeration":
        if not self.complete:
            raise EnumerationIncomplete(self)
        return self


def validate_path(graph: Graph, vertices: Sequence[int]) -> Path:
    """Return the Path for `vertices`, or raise PathError naming the first defect."""
    if not vertices:
        raise PathError("a path needs at least one vertex")
    for v in vertices:
        if not isinstance(v, int) or not 0 <= v < graph.n:
            raise PathError(f"vertex {v!r} is not in the graph")
    for u, v in zip(vertices, vertices[1:]):
        if not graph.has_edge(u, v):
            raise PathError(f"consecutive vertices {u} and {v} are not adjacent")
    return Path(tuple(vertices))


def _check_search_size(graph: Graph) -> None:
    if graph.n == 0:
        raise ValueError("longest path is undefined on the empty graph")
    if graph.n > SEARCH_LIMIT:
        raise ValueError(f"path search is limited to {SEARCH_LIMIT} vertices, got {graph.n}")


# -------------- Part 2: Longest-path length -------------- #

def _dp_length(graph: Graph) -> int:
    # ends[mask]: bitset of vertices v such that some path with vertex set `mask` ends at v
    n = graph.n
    ends = [0] * (1 << n)
    for v in range(n):
        ends[1 << v] = 1 << v
    best = 0
    for mask in range(1, 1 << n):
        tails = ends[mask]
        if not tails:
            continue
        size = mask.bit_count()
        if size - 1 > best:
            best = size - 1
        for v in iter_bits(tails):
            for u in iter_bits(graph.adjacency[v] & ~mask):
                ends[mask | (1 << u)] |= 1 << u
    return best


def _room(graph: Graph, v: int, free: int) -> int:
    """Free vertices still reachable from v: an upper bound on how far v's path can grow."""
    return (reachable_mask(graph, 1 << v, free) & free).bit_count()


def _bnb_length(graph: Graph) -> int:
    n = graph.n
    full = graph.vertex_mask
    best = 0

    def extend(v: int, used: int, length: int) -> bool:
        nonlocal best
        if length > best:
            best = length
            if best == n - 1:
                return True
        free = full & ~used
        if length + _room(graph, v, free) <= best:
            return False
        for u in iter_bits(graph.adjacency[v] & free):
            if extend(u, used | (1 << u), length + 1):
                return True
        return False

    for start in range(n):
        if extend(start, 1 << start, 0):
            break
    return best


def _naive_length(graph: Graph) -> int:
    best = 0

    def walk(v: int, used: int, length: int) -> None:
        nonlocal best
        best = max(best, length)
        for u in iter_bits(graph.adjacency[v] & ~used):
            walk(u, used | (1 << u), length + 1)

    for start in range(graph.n):
        walk(start, 1 << start, 0)
    return best


def longest_path_length(graph: Graph, method: str = "auto") -> int:
    """
    Exact maximum edge count over all simple paths (max over components when disconnected).
    method: 'dp' (n <= 20), 'bnb', 'naive' (unpruned oracle) or 'auto'.
    """
    _check_search_size(graph)
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}, expected one of {METHODS}")
    if method == "auto":
        method = "dp" if graph.n <= DP_THRESHOLD else "bnb"
    if method == "dp":
        if graph.n > DP_THRESHOLD:
            raise ValueError(f"the bitmask DP is limited to {DP_THRESHOLD} vertices, got {graph.n}")
        return _dp_length(graph)
    if method == "bnb":
        return _bnb_length(graph)
    return _naive_length(graph)


def is_longest_path(graph: Graph, path: Path, length: Optional[int] = None) -> bool:
    """True iff `path` is a path of graph of maximum length; `length` may be supplied if known."""
    validate_path(graph, path.vertices)
    if length is None:
        length = longest_path_length(graph)
    return path.length == length


# -------------- Part 3: Enumeration and L(G) -------------- #

def _iter_longest(graph: Graph, target: int) -> Iterator[Tuple[int, ...]]:
    """Every longest path once, oriented start < end, starts in ascending order."""
    full = graph.vertex_mask
    trail: List[int] = []

    def extend(v: int, used: int) -> Iterator[Tuple[int, ...]]:
        length = len(trail) - 1
        if length == target:
            if target == 0 or trail[0] < v:
                yield tuple(trail)
            return
        free = full & ~used
        if length + _room(graph, v, free) < target:
            return
        for u in iter_bits(graph.adjacency[v] & free):
            trail.append(u)
            yield from extend(u, used | (1 << u))
            trail.pop()

    for start in range(graph.n):
        trail.append(start)
        yield from extend(start, 1 << start)
        trail.pop()


def enumerate_longest_paths(graph: Graph, budget: int = DEFAULT_BUDGET, length: Optional[int] = None) -> Enumeration:
    """
    All longest paths modulo reversal. Stops once more than `budget` paths exist and
    returns the partial list with complete=False.
    """
    if budget < 1:
        raise ValueError("budget must be at least 1")
    if length is None:
        length = longest_path_length(graph)
    else:
        _check_search_size(graph)
    paths: List[Path] = []
    complete = True
    for vertices in _iter_longest(graph, length):
        if len(paths) == budget:
            complete = False
            break
        paths.append(Path(vertices))
    if not complete:
        logger.warning(f"Enumeration stopped at budget {budget} (length {length}, n={graph.n})")
    return Enumeration(paths=paths, length=length, complete=complete, budget=budget)


def pairwise_minimum(enumeration: Enumeration, partial: bool = False) -> Tuple[int, PathPair]:
    """
    L over the enumerated paths, grouped by vertex set first. With partial=True an
    incomplete enumeration is accepted and the result is an upper bound on L(G).
    """
    if not partial:
        enumeration.require_complete()
    if not enumeration.paths:
        raise ValueError("no paths to compare")
    first_by_mask = {}
    for path in enumeration.paths:
        first_by_mask.setdefault(path.mask, path)
    counts = Counter(path.mask for path in enumeration.paths)
    masks = list(first_by_mask)

    if len(masks) == 1:
        # every longest path spans the same vertex set; pair the path with itself or a twin
        twins = [p for p in enumeration.paths if p.mask == masks[0]][:2]
        P, Q = (twins[0], twins[-1]) if counts[masks[0]] > 1 else (twins[0], twins[0])
        return enumeration.length + 1, PathPair(P, Q)

    best = enumeration.length + 2
    best_pair = (masks[0], masks[1])
    for i, a in enumerate(masks):
        for b in masks[i + 1:]:
            shared = (a & b).bit_count()
            if shared < best:
                best, best_pair = shared, (a, b)
        if best == 0:
            break
    return best, PathPair(first_by_mask[best_pair[0]], first_by_mask[best_pair[1]])


def min_pairwise_intersection(graph: Graph, budget: int = DEFAULT_BUDGET) -> Tuple[int, PathPair]:
    """L(G) = min |V(P) & V(Q)| over pairs of longest paths, with a witness pair."""
    return pairwise_minimum(enumerate_longest_paths(graph, budget))
