from itertools import combinations

import networkx as nx
import pytest

from nearly_independent.core.families import (
    complete,
    complete_bipartite,
    cycle,
    empty,
    k4_minus_edge,
    path,
    star,
)
from nearly_independent.core.graph import Graph, VertexSet, from_edge_list
from nearly_independent.engine.memo import MemoTable
from nearly_independent.engine.sigma import (
    SigmaMethod,
    induced_edge_count,
    sigma,
    sigma0_recursive,
    sigma1_recursive,
    sigma_bruteforce,
    sigma_components,
    sigma_distribution,
    sigma_pair,
)
from nearly_independent.source.errors import TooLarge, Unsupported
from nearly_independent.verifier.corpus import enumerate_connected
from tests.conftest import random_graph


def _brute_pair(graph: Graph):
    # у графа без рёбер распределение короче двух элементов
    return sigma_bruteforce(graph, 0).value, sigma_bruteforce(graph, 1).value


def _nx_sigma(graph: Graph, k: int) -> int:
    reference = nx.Graph()
    reference.add_nodes_from(range(graph.n))
    reference.add_edges_from(graph.edges())
    return sum(
        1
        for size in range(graph.n + 1)
        for subset in combinations(range(graph.n), size)
        if reference.subgraph(subset).number_of_edges() == k
    )


@pytest.mark.parametrize(
    "graph, expected",
    [
        (complete(4), 6),
        (k4_minus_edge(), 5),
        (complete_bipartite(2, 2), 4),
        (complete(3), 3),
        (cycle(5), 10),
        # P4: три ребра и подмножества {0,1,3}, {0,2,3}
        (path(4), 5),
        (path(2), 1),
        (empty(4), 0),
        (Graph([]), 0),
    ],
)
def test_sigma1_known_values(graph, expected):
    assert sigma(graph, 1).value == expected
    assert sigma_bruteforce(graph, 1).value == expected


def test_sigma0_known_values():
    assert sigma(path(3), 0).value == 5
    assert sigma(empty(5), 0).value == 32
    assert sigma(Graph([]), 0).value == 1
    # σ₀(P_n): числа Фибоначчи
    fibonacci = [2, 3]
    for _ in range(20):
        fibonacci.append(fibonacci[-1] + fibonacci[-2])
    for n in range(1, 23):
        assert sigma(path(n), 0).value == fibonacci[n - 1]


@pytest.mark.parametrize("n", range(2, 15))
def test_families(n):
    assert sigma(star(n), 1).value == n - 1
    if n >= 4:
        assert sigma(complete_bipartite(2, n - 2), 1).value == 2 * n - 4
    assert sigma(complete(n), 1).value == n * (n - 1) // 2


def test_disjoint_union_uses_convolution():
    two_edges = from_edge_list(4, [(0, 1), (2, 3)])
    assert sigma_pair(two_edges) == (9, 6)
    result = sigma1_recursive(two_edges)
    assert result.value == 6
    assert result.method is SigmaMethod.CONVOLUTION
    assert sigma0_recursive(path(4)).method is SigmaMethod.RECURSIVE
    assert sigma_components([(3, 1), (3, 1)]) == (9, 6)
    with pytest.raises(ValueError):
        sigma_components([])


def test_distribution_partitions_all_subsets(rng):
    for _ in range(500):
        n = rng.randint(0, 12)
        graph = random_graph(rng, n, rng.random())
        distribution = sigma_distribution(graph)
        assert len(distribution) == graph.m + 1
        assert sum(distribution) == 2 ** n
        assert distribution[0] == sigma(graph, 0).value


def test_distribution_of_triangle():
    assert sigma_distribution(complete(3)) == [4, 3, 0, 1]


def test_induced_edge_count():
    graph = complete(5)
    assert induced_edge_count(graph, VertexSet.of(5, [0, 1, 2])) == 3
    assert induced_edge_count(path(4), VertexSet.of(4, [0, 2])) == 0
    with pytest.raises(ValueError):
        induced_edge_count(graph, VertexSet.of(3, [0]))


def test_brute_force_cap():
    with pytest.raises(TooLarge):
        sigma_bruteforce(path(10), 1, cap=8)
    assert sigma_bruteforce(path(10), 2, cap=10).value == sigma_distribution(path(10))[2]
    assert sigma_bruteforce(path(3), 7).value == 0


def test_brute_force_cap_from_environment(monkeypatch):
    monkeypatch.setenv("NEARLY_INDEPENDENT_BRUTE_FORCE_CAP", "5")
    with pytest.raises(TooLarge):
        sigma_distribution(path(6))


def test_method_dispatch():
    graph = cycle(6)
    assert sigma(graph, 1).method is SigmaMethod.RECURSIVE
    assert sigma(graph, 1, method="brute").method is SigmaMethod.BRUTE_FORCE
    assert sigma(graph, 2).method is SigmaMethod.BRUTE_FORCE
    assert sigma(graph, 1, method="brute").value == sigma(graph, 1, method="recursive").value
    with pytest.raises(Unsupported):
        sigma(graph, 2, method="recursive")
    with pytest.raises(Unsupported):
        sigma(graph, 1, method="magic")


def test_memo_does_not_change_results(rng):
    for _ in range(200):
        graph = random_graph(rng, rng.randint(1, 16), rng.random())
        memo = MemoTable()
        assert sigma_pair(graph, memo) == sigma_pair(graph, MemoTable(enabled=False))
        assert len(memo) > 0 or graph.n == 0


def test_memo_table_is_bound_to_one_graph():
    memo = MemoTable()
    sigma_pair(cycle(5), memo)
    sigma_pair(cycle(5), memo)
    assert memo.hits > 0
    with pytest.raises(ValueError):
        sigma_pair(path(5), memo)


@pytest.mark.parametrize("n", range(1, 8))
def test_recursion_matches_brute_force_on_all_connected_graphs(n):
    for graph in enumerate_connected(n):
        assert sigma_pair(graph) == _brute_pair(graph)


def test_recursion_matches_brute_force_on_random_graphs(rng):
    for _ in range(1000):
        graph = random_graph(rng, rng.randint(8, 16), rng.random())
        assert sigma_pair(graph) == _brute_pair(graph)


def test_recursion_on_edgeless_graphs():
    for n in (1, 2, 15):
        assert sigma_pair(empty(n)) == _brute_pair(empty(n)) == (2 ** n, 0)


def test_brute_force_matches_networkx(rng):
    for _ in range(20):
        graph = random_graph(rng, rng.randint(1, 8), rng.random())
        for k in range(3):
            assert sigma_bruteforce(graph, k).value == _nx_sigma(graph, k)
