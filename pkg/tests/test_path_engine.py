import random

import pytest

from generators import complete_bipartite, complete_graph, random_k_connected
from graph_core import Graph
from path_engine import (
    DP_THRESHOLD,
    EnumerationIncomplete,
    Path,
    PathError,
    PathPair,
    enumerate_longest_paths,
    is_longest_path,
    longest_path_length,
    min_pairwise_intersection,
    pairwise_minimum,
    validate_path,
)


def cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


# -------------- Path types -------------- #

def test_path_properties():
    path = Path((3, 1, 4))
    assert path.length == 2
    assert (path.start, path.end) == (3, 4)
    assert 1 in path and 5 not in path
    assert path.reversed().vertices == (4, 1, 3)
    assert path.canonical().vertices == (3, 1, 4)
    assert Path((4, 1, 3)).canonical().vertices == (3, 1, 4)
    assert str(path) == "3 1 4"
    assert path.mask == 0b11010


def test_path_rejects_repeated_vertices():
    with pytest.raises(PathError):
        Path((0, 1, 0))


def test_path_pair_shared_set():
    pair = PathPair(Path((0, 1, 2)), Path((2, 3, 1)))
    assert pair.S == frozenset({1, 2})
    assert pair.size == 2


def test_validate_path():
    graph = path_graph(4)
    assert validate_path(graph, [0, 1, 2]).vertices == (0, 1, 2)
    with pytest.raises(PathError):
        validate_path(graph, [0, 2])
    with pytest.raises(PathError):
        validate_path(graph, [])
    with pytest.raises(PathError):
        validate_path(graph, [0, 9])


# -------------- Longest-path length -------------- #

@pytest.mark.parametrize(
    "graph, expected",
    [
        (path_graph(5), 4),
        (cycle(6), 5),
        (complete_graph(6), 5),
        (complete_bipartite(2, 6), 4),
        (complete_bipartite(3, 8), 6),
        (Graph(1, (0,)), 0),
        (Graph.from_edges(5, [(0, 1), (2, 3), (3, 4)]), 2),
    ],
)
def test_longest_path_length_known_values(graph, expected):
    for method in ("auto", "dp", "bnb", "naive"):
        assert longest_path_length(graph, method) == expected


def test_longest_path_length_methods_agree_on_random_graphs():
    rng = random.Random(9)
    for _ in range(150):
        n = rng.randint(2, 10)
        graph = random_k_connected(n, rng.uniform(0.35, 0.9), 1, rng.randrange(2**32))
        lengths = {method: longest_path_length(graph, method) for method in ("dp", "bnb", "naive")}
        assert len(set(lengths.values())) == 1, lengths


def test_longest_path_length_argument_checks():
    with pytest.raises(ValueError):
        longest_path_length(Graph(0, ()))
    with pytest.raises(ValueError):
        longest_path_length(Graph(65, (0,) * 65))
    with pytest.raises(ValueError):
        longest_path_length(path_graph(3), method="greedy")
    with pytest.raises(ValueError):
        longest_path_length(path_graph(DP_THRESHOLD + 1), method="dp")
    assert longest_path_length(path_graph(DP_THRESHOLD + 5)) == DP_THRESHOLD + 4


def test_is_longest_path():
    graph = cycle(5)
    assert is_longest_path(graph, Path((0, 1, 2, 3, 4)))
    assert not is_longest_path(graph, Path((0, 1, 2)))
    assert is_longest_path(graph, Path((0, 1, 2)), length=2)


# -------------- Enumeration and L(G) -------------- #

def test_enumeration_counts_modulo_reversal():
    assert enumerate_longest_paths(cycle(4)).count == 4
    assert enumerate_longest_paths(path_graph(4)).count == 1
    assert enumerate_longest_paths(complete_bipartite(2, 6)).count == 120
    assert enumerate_longest_paths(complete_graph(4)).count == 12


def test_enumeration_paths_are_canonical_longest_and_distinct():
    graph = complete_bipartite(2, 5)
    enumeration = enumerate_longest_paths(graph)
    assert enumeration.complete and enumeration.length == 4
    assert len(set(p.vertices for p in enumeration.paths)) == enumeration.count
    for path in enumeration.paths:
        assert path.start < path.end
        assert validate_path(graph, path.vertices).length == 4


def all_longest_by_brute_force(graph):
    """Unpruned DFS over every simple path, longest ones kept in canonical orientation."""
    found = set()
    best = 0

    def walk(trail, used):
        nonlocal best
        length = len(trail) - 1
        if length > best:
            best = length
            found.clear()
        if length == best:
            found.add(Path(tuple(trail)).canonical().vertices)
        for u in range(graph.n):
            if graph.has_edge(trail[-1], u) and not used >> u & 1:
                walk(trail + [u], used | 1 << u)

    for start in range(graph.n):
        walk([start], 1 << start)
    return best, found


def random_graphs(seed, count):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(2, 8)
        p = rng.uniform(0.2, 0.9)
        edges = [(a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < p]
        yield Graph.from_edges(n, edges)


def test_enumeration_matches_brute_force_on_random_graphs():
    for graph in random_graphs(seed=21, count=120):
        length, expected = all_longest_by_brute_force(graph)
        enumeration = enumerate_longest_paths(graph)
        assert enumeration.complete
        assert enumeration.length == length
        assert {path.vertices for path in enumeration.paths} == expected
        assert enumeration.count == len(expected)


def test_longest_path_ends_see_only_path_vertices():
    rng = random.Random(22)
    for _ in range(80):
        n = rng.randint(3, 10)
        graph = random_k_connected(n, rng.uniform(0.3, 0.9), 1, rng.randrange(2**32))
        for path in enumerate_longest_paths(graph).paths:
            for end in (path.start, path.end):
                assert graph.adjacency[end] & ~path.mask == 0


def test_connected_graphs_have_a_common_vertex():
    rng = random.Random(23)
    for _ in range(80):
        n = rng.randint(2, 10)
        graph = random_k_connected(n, rng.uniform(0.25, 0.9), 1, rng.randrange(2**32))
        L, _ = min_pairwise_intersection(graph)
        assert L >= 1


def test_enumeration_single_vertex():
    enumeration = enumerate_longest_paths(Graph(1, (0,)))
    assert [p.vertices for p in enumeration.paths] == [(0,)]
    assert enumeration.length == 0


def test_enumeration_budget_marks_incomplete():
    enumeration = enumerate_longest_paths(complete_bipartite(2, 6), budget=5)
    assert not enumeration.complete
    assert enumeration.count == 5
    with pytest.raises(EnumerationIncomplete) as err:
        enumeration.require_complete()
    assert err.value.enumeration is enumeration
    with pytest.raises(ValueError):
        enumerate_longest_paths(cycle(4), budget=0)


@pytest.mark.parametrize(
    "graph, expected",
    [
        (complete_bipartite(2, 6), 2),
        (complete_bipartite(1, 4), 1),
        (complete_bipartite(3, 8), 3),
        (path_graph(5), 5),
        (cycle(5), 5),
        (complete_graph(6), 6),
        (Graph.from_edges(2, [(0, 1)]), 2),
    ],
)
def test_min_pairwise_intersection_known_values(graph, expected):
    L, pair = min_pairwise_intersection(graph)
    assert L == expected
    assert len(pair.P.vertex_set & pair.Q.vertex_set) == L


def test_min_pairwise_intersection_on_disjoint_components_is_zero():
    graph = Graph.from_edges(6, [(0, 1), (1, 2), (3, 4), (4, 5)])
    L, pair = min_pairwise_intersection(graph)
    assert L == 0
    assert pair.size == 0


def test_tightness_witness_pair_shares_the_small_side():
    _, pair = min_pairwise_intersection(complete_bipartite(2, 6))
    assert pair.S == frozenset({0, 1})


def test_pairwise_minimum_requires_complete_unless_partial():
    enumeration = enumerate_longest_paths(complete_bipartite(2, 6), budget=10)
    with pytest.raises(EnumerationIncomplete):
        pairwise_minimum(enumeration)
    L, _ = pairwise_minimum(enumeration, partial=True)
    assert L >= 2
