import networkx as nx
import pytest

from generators import (
    GenerationError,
    GeneratorSpec,
    complete_bipartite,
    generate,
    generate_graph6,
    random_k_connected,
    tightness_witness,
    windmill,
)
from graph_core import parse_graph6, vertex_connectivity
from path_engine import min_pairwise_intersection


def test_complete_bipartite_layout():
    graph = complete_bipartite(2, 3)
    assert graph.n == 5 and graph.m == 6
    assert graph.neighbors(0) == [2, 3, 4]
    assert graph.neighbors(4) == [0, 1]
    with pytest.raises(ValueError):
        complete_bipartite(0, 3)


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_tightness_witness_has_connectivity_k(k):
    graph = tightness_witness(k)
    assert graph.n == 3 * k + 2
    assert vertex_connectivity(graph) == k


@pytest.mark.parametrize("k", [1, 2, 3])
def test_tightness_witness_is_tight(k):
    L, _ = min_pairwise_intersection(tightness_witness(k))
    assert L == k


def test_tightness_witness_rejects_k0():
    with pytest.raises(ValueError):
        tightness_witness(0)


def test_windmill_shape():
    graph = windmill(4, 4)
    assert graph.n == 13 and graph.m == 24
    assert graph.degree(0) == 12
    assert graph.min_degree() == 3
    assert vertex_connectivity(graph) == 1
    L, pair = min_pairwise_intersection(graph)
    assert L == 1 and pair.S == frozenset({0})
    with pytest.raises(ValueError):
        windmill(0, 3)


def test_random_k_connected_is_deterministic_and_k_connected():
    first = random_k_connected(10, 0.6, 3, seed=42)
    second = random_k_connected(10, 0.6, 3, seed=42)
    assert first == second
    assert vertex_connectivity(first) >= 3
    assert nx.node_connectivity(first.to_networkx()) >= 3


def test_random_k_connected_p_one_is_complete():
    graph = random_k_connected(7, 1.0, 6, seed=0)
    assert graph.is_complete() and graph.n == 7


def test_random_k_connected_argument_checks_and_exhaustion():
    with pytest.raises(ValueError):
        random_k_connected(5, 0.0, 1, seed=0)
    with pytest.raises(ValueError):
        random_k_connected(5, 0.5, 5, seed=0)
    with pytest.raises(GenerationError):
        random_k_connected(12, 0.05, 4, seed=1, max_attempts=3)


def test_generate_families():
    assert [g.n for g in generate(GeneratorSpec("tightness", k=1, count=3))] == [5, 8, 11]
    assert [g.m for g in generate(GeneratorSpec("complete-bipartite", a=2, b=6))] == [12]
    assert [g.n for g in generate(GeneratorSpec("windmill", blades=3, blade_size=3))] == [7]


def test_generate_gnp_uses_derived_seeds():
    spec = GeneratorSpec("gnp-kconn", n=9, p=0.6, k=2, seed=3, count=4)
    first = list(generate(spec))
    assert first == list(generate(spec))
    assert len(first) == 4
    assert all(vertex_connectivity(g) >= 2 for g in first)
    assert generate_graph6(spec)[0] == nx.to_graph6_bytes(first[0].to_networkx(), header=False).decode().strip()


def test_generator_spec_validation():
    with pytest.raises(ValueError):
        GeneratorSpec("petersen").validate()
    with pytest.raises(ValueError):
        GeneratorSpec("tightness", count=0).validate()
    with pytest.raises(ValueError):
        GeneratorSpec("gnp-kconn", n=5, k=5).validate()


def test_generate_graph6_lines_parse_back():
    lines = generate_graph6(GeneratorSpec("tightness", k=2, count=2))
    assert [parse_graph6(line).n for line in lines] == [8, 11]
