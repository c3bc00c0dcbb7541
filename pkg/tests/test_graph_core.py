import pickle
import random

import networkx as nx
import pytest

from graph_core import (
    Graph,
    GraphFormatError,
    MAX_VERTICES,
    disjoint_paths,
    encode_graph6,
    is_connected,
    local_connectivity,
    min_vertex_cut,
    parse_edge_list,
    parse_graph,
    parse_graph6,
    reachable_mask,
    vertex_connectivity,
)
from generators import complete_bipartite, complete_graph


def cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def networkx_graph6(graph):
    return nx.to_graph6_bytes(graph.to_networkx(), header=False).decode("ascii").strip()


# -------------- Graph type -------------- #

def test_from_edges_builds_symmetric_bitsets():
    graph = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (1, 0)])
    assert graph.m == 3
    assert graph.neighbors(1) == [0, 2]
    assert graph.has_edge(2, 1) and not graph.has_edge(0, 3)
    assert graph.degree(1) == 2
    assert graph.min_degree() == 1
    assert graph.edges() == [(0, 1), (1, 2), (2, 3)]


def test_graph_rejects_bad_input():
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 3)])
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0))
    with pytest.raises(ValueError):
        Graph(MAX_VERTICES + 1, (0,) * (MAX_VERTICES + 1))


def test_graph_is_immutable_hashable_and_picklable():
    graph = cycle(5)
    with pytest.raises(AttributeError):
        graph.n = 7
    assert pickle.loads(pickle.dumps(graph)) == graph
    assert len({graph, cycle(5)}) == 1


def test_neighbourhood_mask_excludes_the_set_itself():
    graph = path_graph(5)
    assert graph.neighbourhood_mask([1, 2]) == 0b01001


def test_networkx_conversion_relabels_in_sorted_order():
    source = nx.Graph([("b", "c"), ("a", "c")])
    graph = Graph.from_networkx(source)
    assert graph.edges() == [(0, 2), (1, 2)]
    assert nx.is_isomorphic(graph.to_networkx(), source)


def test_reachable_mask_and_connectivity_flags():
    graph = Graph.from_edges(5, [(0, 1), (1, 2), (3, 4)])
    assert reachable_mask(graph, 1, graph.vertex_mask) == 0b00111
    assert reachable_mask(graph, 1, 0b00011) == 0b00011
    assert not is_connected(graph)
    assert is_connected(Graph(0, ()))
    assert is_connected(Graph(1, (0,)))


# -------------- graph6 and edge lists -------------- #

def test_graph6_small_known_strings():
    k2 = parse_graph6("A_")
    assert (k2.n, k2.edges()) == (2, [(0, 1)])
    assert parse_graph6("@").n == 1
    assert parse_graph6("?").n == 0
    assert parse_graph6(">>graph6<<A_") == k2
    assert encode_graph6(complete_graph(5)) == "D~{"


def test_graph6_matches_networkx_on_random_graphs():
    rng = random.Random(20261017)
    for _ in range(60):
        n = rng.randint(1, 70)
        source = nx.gnp_random_graph(n, rng.random(), seed=rng.randrange(2**32))
        graph = Graph.from_networkx(source)
        text = networkx_graph6(graph)
        assert encode_graph6(graph) == text
        assert parse_graph6(text) == graph


def test_graph6_large_header_round_trip():
    graph = Graph.from_edges(100, [(i, i + 1) for i in range(99)])
    text = encode_graph6(graph)
    assert text[0] == "~"
    assert parse_graph6(text) == graph


@pytest.mark.parametrize(
    "text, offset",
    [
        ("", 0),
        ("A", 1),
        ("A__", 2),
        ("A!", 1),
        ("~?", 2),
    ],
)
def test_graph6_errors_carry_offsets(text, offset):
    with pytest.raises(GraphFormatError) as err:
        parse_graph6(text)
    assert err.value.offset == offset
    assert "byte offset" in str(err.value)


def test_graph6_rejects_too_many_vertices():
    with pytest.raises(GraphFormatError):
        parse_graph6("~?BG")


def test_edge_list_with_and_without_declared_n():
    graph = parse_edge_list("5\n0 1\n1 2 # comment\n\n1 0\n")
    assert (graph.n, graph.edges()) == (5, [(0, 1), (1, 2)])
    assert parse_edge_list("0 3\n").n == 4


@pytest.mark.parametrize(
    "text",
    ["", "0 0\n", "3\n0 5\n", "0 x\n", "0 1 2\n", "-1 2\n"],
)
def test_edge_list_errors(text):
    with pytest.raises(GraphFormatError):
        parse_edge_list(text)


def test_parse_graph_autodetects_by_first_byte():
    assert parse_graph("A_\n") == parse_graph("0 1\n")
    with pytest.raises(GraphFormatError):
        parse_graph("A_\nA_\n")


# -------------- Flow and connectivity -------------- #

def test_local_connectivity_cut_and_paths_agree():
    graph = complete_bipartite(3, 4)
    assert local_connectivity(graph, 0, 1) == 4
    cut = min_vertex_cut(graph, 0, 1)
    assert cut == frozenset({3, 4, 5, 6})
    paths = disjoint_paths(graph, 0, 1)
    assert len(paths) == 4
    assert all(p[0] == 0 and p[-1] == 1 for p in paths)
    inner = [v for p in paths for v in p[1:-1]]
    assert len(inner) == len(set(inner))


def test_local_connectivity_rejects_adjacent_or_equal_pairs():
    graph = cycle(5)
    with pytest.raises(ValueError):
        local_connectivity(graph, 0, 1)
    with pytest.raises(ValueError):
        min_vertex_cut(graph, 2, 2)


def test_vertex_connectivity_known_values():
    assert vertex_connectivity(complete_graph(6)) == 5
    assert vertex_connectivity(cycle(7)) == 2
    assert vertex_connectivity(path_graph(5)) == 1
    assert vertex_connectivity(complete_bipartite(2, 6)) == 2
    assert vertex_connectivity(complete_bipartite(3, 8)) == 3
    assert vertex_connectivity(Graph.from_edges(4, [(0, 1), (2, 3)])) == 0
    assert vertex_connectivity(Graph(1, (0,))) == 0


def test_vertex_connectivity_matches_networkx():
    rng = random.Random(7)
    for _ in range(120):
        n = rng.randint(2, 12)
        source = nx.gnp_random_graph(n, rng.uniform(0.2, 0.95), seed=rng.randrange(2**32))
        graph = Graph.from_networkx(source)
        assert vertex_connectivity(graph) == nx.node_connectivity(source)
