"""
graph_core.py
Goal: Graph representation, graph6 / edge-list ingestion, and vertex connectivity.

Graphs are simple and undirected, vertices are 0..n-1 and every neighbourhood is an
int bitset. Connectivity is computed with unit-capacity max-flow on the vertex-split
digraph (Even's scheme), so every cut comes with its Menger paths.

Last Updated: 2026-10-17
"""

# Import statements
import logging
from collections import deque
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Set, Tuple

import networkx as nx

logger = logging.getLogger(__name__)

MAX_VERTICES = 128
GRAPH6_HEADER = ">>graph6<<"

# Alias used across the package for vertex subsets (S, cuts, terminal sets).
VertexSet = FrozenSet[int]


# -------------- Part 1: Errors and the Graph type -------------- #

class GraphFormatError(ValueError):
    """Raised for malformed graph6 / edge-list input. `offset` is the byte offset, when known."""

    def __init__(self, message: str, offset: Optional[int] = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def set_of(mask: int) -> VertexSet:
    return frozenset(iter_bits(mask))


class Graph:
    """
    Immutable simple undirected graph on vertices 0..n-1.
    adjacency[v] is the neighbour bitset of v.
    """

    __slots__ = ("n", "adjacency", "m")

    def __init__(self, n: int, adjacency: Tuple[int, ...]):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        if n > MAX_VERTICES:
            raise ValueError(f"graphs are limited to {MAX_VERTICES} vertices, got {n}")
        if len(adjacency) != n:
            raise ValueError("adjacency must have one bitset per vertex")
        full = (1 << n) - 1
        for v, nbrs in enumerate(adjacency):
            if nbrs & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside 0..{n - 1}")
            if nbrs >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in iter_bits(nbrs):
                if not adjacency[u] >> v & 1:
                    raise ValueError(f"adjacency is not symmetric on edge {v}-{u}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adjacency", tuple(adjacency))
        object.__setattr__(self, "m", sum(nbrs.bit_count() for nbrs in adjacency) // 2)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __reduce__(self):
        return Graph, (self.n, self.adjacency)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        adjacency = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} is outside 0..{n - 1}")
            adjacency[u] |= 1 << v
            adjacency[v] |= 1 << u
        return cls(n, tuple(adjacency))

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "Graph":
        """Relabel nodes to 0..n-1 in sorted order, then copy the edges."""
        nodes = sorted(graph.nodes())
        index = {node: i for i, node in enumerate(nodes)}
        return cls.from_edges(len(nodes), ((index[u], index[v]) for u, v in graph.edges() if u != v))

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges())
        return graph

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def neighbors(self, v: int) -> List[int]:
        return list(iter_bits(self.adjacency[v]))

    def neighbor_set(self, v: int) -> VertexSet:
        return set_of(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    def min_degree(self) -> int:
        return min((self.degree(v) for v in range(self.n)), default=0)

    def edges(self) -> List[Tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adjacency[u] >> (u + 1) << (u + 1))]

    def neighbourhood_mask(self, vertices: Iterable[int]) -> int:
        """N(X) as a bitset: union of the neighbourhoods, without X itself."""
        members = mask_of(vertices)
        result = 0
        for v in iter_bits(members):
            result |= self.adjacency[v]
        return result & ~members

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adjacency == other.adjacency

    def __hash__(self) -> int:
        return hash((self.n, self.adjacency))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def reachable_mask(graph: Graph, start: int, allowed: int) -> int:
    """Vertices reachable from the bitset `start` moving only through `allowed` (start included)."""
    seen = start
    frontier = start
    while frontier:
        step = 0
        for v in iter_bits(frontier):
            step |= graph.adjacency[v]
        frontier = step & allowed & ~seen
        seen |= frontier
    return seen


def is_connected(graph: Graph) -> bool:
    if graph.n <= 1:
        return True
    return reachable_mask(graph, 1, graph.vertex_mask) == graph.vertex_mask


# -------------- Part 2: graph6 and edge-list ingestion -------------- #

def _graph6_size(data: bytes) -> Tuple[int, int]:
    """Decode the N(n) header; returns (n, position of the first edge byte)."""
    if not data:
        raise GraphFormatError("empty graph6 string", 0)
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise GraphFormatError("truncated 6-byte graph6 size header", len(data))
        width, start = 6, 2
    else:
        if len(data) < 4:
            raise GraphFormatError("truncated 3-byte graph6 size header", len(data))
        width, start = 3, 1
    n = 0
    for byte in data[start:start + width]:
        n = (n << 6) | (byte - 63)
    return n, start + width


def parse_graph6(line: str) -> Graph:
    """
    Decode one graph6 line (bit-exact, upper triangle column by column).
    An optional '>>graph6<<' header and surrounding whitespace are ignored.
    """
    text = line.strip()
    shift = 0
    if text.startswith(GRAPH6_HEADER):
        shift = len(GRAPH6_HEADER)
        text = text[shift:]
    try:
        data = text.encode("ascii")
    except UnicodeEncodeError:
        bad = next(i for i, ch in enumerate(text) if ord(ch) > 127)
        raise GraphFormatError(f"non-ASCII character {text[bad]!r} in graph6", bad + shift) from None
    for offset, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise GraphFormatError(f"character {chr(byte)!r} outside graph6 range 63..126", offset + shift)

    n, pos = _graph6_size(data)
    if n > MAX_VERTICES:
        raise GraphFormatError(f"graph6 declares {n} vertices, limit is {MAX_VERTICES}", 0)
    bit_count = n * (n - 1) // 2
    needed = (bit_count + 5) // 6
    body = data[pos:]
    if len(body) < needed:
        raise GraphFormatError(f"truncated graph6 bit stream: expected {needed} bytes, got {len(body)}", len(data) + shift)
    if len(body) > needed:
        raise GraphFormatError("trailing bytes after graph6 bit stream", pos + needed + shift)

    adjacency = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                adjacency[i] |= 1 << j
                adjacency[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adjacency))


def encode_graph6(graph: Graph) -> str:
    """Inverse of parse_graph6 (no header, no newline)."""
    n = graph.n
    if n <= 62:
        header = [n + 63]
    elif n <= 258047:
        header = [126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)]
    else:
        header = [126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]
    bits = [graph.adjacency[i] >> j & 1 for j in range(1, n) for i in range(j)]
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for start in range(0, len(bits), 6):
        value = 0
        for bit in bits[start:start + 6]:
            value = (value << 1) | bit
        body.append(value + 63)
    return bytes(header + body).decode("ascii")


def parse_edge_list(text: str) -> Graph:
    """
    Parse "u v" lines. A first line holding a single integer declares n; otherwise n is
    max index + 1. Duplicate edges collapse, self-loops are rejected. '#' starts a comment.
    """
    rows: List[Tuple[int, List[str]]] = []
    for number, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((number, line.split()))
    if not rows:
        raise GraphFormatError("empty edge list")

    declared: Optional[int] = None
    if len(rows[0][1]) == 1:
        number, tokens = rows.pop(0)
        declared = _parse_index(tokens[0], number)

    edges: Set[Tuple[int, int]] = set()
    for number, tokens in rows:
        if len(tokens) != 2:
            raise GraphFormatError(f"line {number}: expected 'u v', got {' '.join(tokens)!r}")
        u, v = (_parse_index(token, number) for token in tokens)
        if u == v:
            raise GraphFormatError(f"line {number}: self-loop at vertex {u}")
        if declared is not None and max(u, v) >= declared:
            raise GraphFormatError(f"line {number}: vertex {max(u, v)} is not below declared n={declared}")
        edges.add((min(u, v), max(u, v)))

    n = declared if declared is not None else 1 + max(max(e) for e in edges)
    if n > MAX_VERTICES:
        raise GraphFormatError(f"edge list needs {n} vertices, limit is {MAX_VERTICES}")
    return Graph.from_edges(n, sorted(edges))


def _parse_index(token: str, number: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise GraphFormatError(f"line {number}: non-integer token {token!r}") from None
    if value < 0:
        raise GraphFormatError(f"line {number}: negative vertex index {value}")
    return value


def parse_graph(text: str) -> Graph:
    """Auto-detect by first byte: a digit means edge list, anything else graph6."""
    stripped = text.lstrip()
    if stripped[:1].isdigit():
        return parse_edge_list(text)
    lines = [line for line in text.splitlines() if line.strip()]
    if len(lines) != 1:
        raise GraphFormatError(f"expected exactly one graph6 line, got {len(lines)}")
    return parse_graph6(lines[0])


# -------------- Part 3: Vertex-split max-flow -------------- #

class _SplitNetwork:
    """
    Residual network over split vertices: v_in = 2v, v_out = 2v + 1.
    Arcs carry integer capacities; flow is stored antisymmetrically.
    """

    def __init__(self, size: int):
        self.capacity: List[Dict[int, int]] = [dict() for _ in range(size)]
        self.flow: List[Dict[int, int]] = [dict() for _ in range(size)]

    def add_arc(self, u: int, v: int, cap: int) -> None:
        self.capacity[u][v] = self.capacity[u].get(v, 0) + cap
        self.capacity[v].setdefault(u, 0)
        self.flow[u].setdefault(v, 0)
        self.flow[v].setdefault(u, 0)

    def residual(self, u: int, v: int) -> int:
        return self.capacity[u][v] - self.flow[u][v]

    def _augment(self, source: int, sink: int) -> int:
        parent = {source: source}
        queue = deque([source])
        while queue and sink not in parent:
            u = queue.popleft()
            for v in self.capacity[u]:
                if v not in parent and self.residual(u, v) > 0:
                    parent[v] = u
                    queue.append(v)
        if sink not in parent:
            return 0
        bottleneck = None
        v = sink
        while v != source:
            u = parent[v]
            r = self.residual(u, v)
            bottleneck = r if bottleneck is None else min(bottleneck, r)
            v = u
        v = sink
        while v != source:
            u = parent[v]
            self.flow[u][v] += bottleneck
            self.flow[v][u] -= bottleneck
            v = u
        return bottleneck

    def max_flow(self, source: int, sink: int, limit: Optional[int] = None) -> int:
        total = 0
        while limit is None or total < limit:
            pushed = self._augment(source, sink)
            if not pushed:
                break
            total += pushed
        return total

    def reachable(self, source: int) -> Set[int]:
        seen = {source}
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for v in self.capacity[u]:
                if v not in seen and self.residual(u, v) > 0:
                    seen.add(v)
                    queue.append(v)
        return seen

    def decompose(self, source: int, is_terminal) -> List[List[int]]:
        """Peel unit flow paths from source until a terminal node; returns node sequences."""
        remaining = [{v: f for v, f in arcs.items() if f > 0} for arcs in self.flow]
        paths = []
        while remaining[source]:
            walk = [source]
            u = source
            while not is_terminal(u):
                v = next(iter(remaining[u]))
                remaining[u][v] -= 1
                if remaining[u][v] == 0:
                    del remaining[u][v]
                walk.append(v)
                u = v
            paths.append(walk)
        return paths


def split_network(graph: Graph, source: int, terminals: Iterable[int]) -> _SplitNetwork:
    """
    Split digraph for flows leaving `source`: every other vertex has an inner arc of
    capacity 1, except terminals, which are entered (node 2t) but never left. No arc
    enters the source. Node 2n is spare for a super-sink.
    """
    big = max(graph.n, 1)
    stops = set(terminals)
    network = _SplitNetwork(2 * graph.n + 1)
    for v in range(graph.n):
        if v != source and v not in stops:
            network.add_arc(2 * v, 2 * v + 1, 1)
    for u, v in graph.edges():
        for a, b in ((u, v), (v, u)):
            if a not in stops and b != source:
                network.add_arc(2 * a + 1, 2 * b, big)
    return network


def _check_pair(graph: Graph, s: int, t: int) -> None:
    for v in (s, t):
        if not 0 <= v < graph.n:
            raise ValueError(f"vertex {v} is not in the graph")
    if s == t:
        raise ValueError("s and t must differ")
    if graph.has_edge(s, t):
        raise ValueError(f"{s}{t} is an edge: no vertex cut separates adjacent vertices")


def local_connectivity(graph: Graph, s: int, t: int, limit: Optional[int] = None) -> int:
    """Maximum number of internally disjoint s-t paths (stops early at `limit`)."""
    _check_pair(graph, s, t)
    network = split_network(graph, s, (t,))
    return network.max_flow(2 * s + 1, 2 * t, limit)


def min_vertex_cut(graph: Graph, s: int, t: int) -> VertexSet:
    """A minimum vertex set separating non-adjacent s and t."""
    _check_pair(graph, s, t)
    network = split_network(graph, s, (t,))
    network.max_flow(2 * s + 1, 2 * t)
    side = network.reachable(2 * s + 1)
    return frozenset(v for v in range(graph.n) if 2 * v in side and 2 * v + 1 not in side)


def disjoint_paths(graph: Graph, s: int, t: int) -> List[Tuple[int, ...]]:
    """Internally disjoint s-t paths read off the max flow (the Menger certificate)."""
    _check_pair(graph, s, t)
    network = split_network(graph, s, (t,))
    network.max_flow(2 * s + 1, 2 * t)
    walks = network.decompose(2 * s + 1, lambda node: node == 2 * t)
    return [walk_to_vertices(walk) for walk in walks]


def walk_to_vertices(walk: List[int]) -> Tuple[int, ...]:
    vertices: List[int] = []
    for node in walk:
        v = node // 2
        if not vertices or vertices[-1] != v:
            vertices.append(v)
    return tuple(vertices)


def vertex_connectivity(graph: Graph) -> int:
    """
    kappa(G): n-1 for complete graphs, 0 when disconnected, otherwise the minimum local
    connectivity over (0, t) for t outside N[0] and over non-adjacent pairs inside N(0).
    """
    n = graph.n
    if graph.is_complete():
        return max(n - 1, 0)
    if not is_connected(graph):
        return 0
    best = graph.min_degree()
    root_nbrs = graph.neighbors(0)
    pairs = [(0, t) for t in range(1, n) if not graph.has_edge(0, t)]
    pairs += [(u, v) for i, u in enumerate(root_nbrs) for v in root_nbrs[i + 1:] if not graph.has_edge(u, v)]
    for s, t in pairs:
        best = min(best, local_connectivity(graph, s, t, limit=best))
        if best == 0:
            break
    return best
