import networkx as nx
import pytest

from nearly_independent.core.families import complete, complete_bipartite, cycle, empty, path, star
from nearly_independent.core.graph import Graph, VertexSet, delete_vertices, from_edge_list
from nearly_independent.core.structure import bridges, component_masks, cut_vertices, has_cycle, is_connected
from nearly_independent.verifier.corpus import enumerate_connected
from tests.conftest import component_count, labeled_graphs, random_graph


def _without_edge(graph: Graph, u: int, v: int) -> Graph:
    rows = list(graph.rows)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return Graph(rows)


def _brute_bridges(graph: Graph):
    base = component_count(graph)
    return {(u, v) for u, v in graph.edges() if component_count(_without_edge(graph, u, v)) > base}


def _brute_cut_vertices(graph: Graph):
    base = component_count(graph)
    found = set()
    for v in range(graph.n):
        kept, _ = delete_vertices(graph, VertexSet.of(graph.n, [v]))
        # удаление изолированной вершины уменьшает число компонент, это не точка сочленения
        if component_count(kept) > base:
            found.add(v)
    return found


def test_connectivity_conventions():
    assert not is_connected(Graph([]))
    assert is_connected(empty(1))
    assert not is_connected(empty(2))
    assert is_connected(path(5))
    assert len(component_masks(from_edge_list(5, [(0, 1), (2, 3)]))) == 3


def test_cycles():
    assert not has_cycle(path(6))
    assert not has_cycle(star(6))
    assert has_cycle(cycle(3))
    assert has_cycle(complete_bipartite(2, 3))
    assert not has_cycle(from_edge_list(6, [(0, 1), (2, 3), (3, 4)]))


def test_known_bridges_and_cut_vertices():
    assert bridges(path(4)) == {(0, 1), (1, 2), (2, 3)}
    assert cut_vertices(path(4)) == {1, 2}
    assert bridges(cycle(5)) == set()
    assert cut_vertices(cycle(5)) == set()
    assert cut_vertices(star(5)) == {0}
    assert bridges(complete(4)) == set()
    # два треугольника с общей вершиной 2
    bowtie = from_edge_list(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
    assert cut_vertices(bowtie) == {2}
    assert bridges(bowtie) == set()


@pytest.mark.parametrize("n", range(1, 8))
def test_lowlink_matches_brute_force_on_connected_graphs(n):
    for graph in enumerate_connected(n):
        assert bridges(graph) == _brute_bridges(graph)
        assert cut_vertices(graph) == _brute_cut_vertices(graph)


def test_lowlink_on_disconnected_graphs():
    for graph in labeled_graphs(5):
        assert bridges(graph) == _brute_bridges(graph)
        assert cut_vertices(graph) == _brute_cut_vertices(graph)


def test_lowlink_matches_networkx(rng):
    for _ in range(200):
        n = rng.randint(2, 30)
        graph = random_graph(rng, n, rng.uniform(0.05, 0.3))
        reference = nx.Graph()
        reference.add_nodes_from(range(n))
        reference.add_edges_from(graph.edges())
        assert bridges(graph) == {tuple(sorted(edge)) for edge in nx.bridges(reference)}
        assert cut_vertices(graph) == set(nx.articulation_points(reference))
        assert is_connected(graph) == nx.is_connected(reference)
