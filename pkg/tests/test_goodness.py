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
from nearly_independent.core.graph import from_edge_list
from nearly_independent.core.structure import is_connected
from nearly_independent.engine.goodness import is_good, is_good_edge, is_good_graph
from nearly_independent.engine.sigma import sigma
from nearly_independent.source.errors import NotAnEdge
from nearly_independent.verifier.corpus import enumerate_connected


@pytest.mark.parametrize(
    "graph",
    [star(7), cycle(4), complete(5), k4_minus_edge(), complete_bipartite(2, 4), path(2), path(3)],
)
def test_good_graphs(graph):
    report = is_good_graph(graph)
    assert report.is_good_graph
    assert report.bad_edges == []
    assert is_good(graph)


def test_bad_edge_witness():
    verdict = is_good_edge(path(4), 0, 1)
    assert not verdict.good
    assert verdict.witness == 3
    assert is_good_edge(path(4), 2, 1).edge == (1, 2)
    assert is_good_edge(path(4), 1, 2).good


def test_report_lists_bad_edges():
    report = is_good_graph(cycle(6))
    assert not report.is_good_graph
    assert report.connected
    assert len(report.bad_edges) == 6
    assert report.witnesses[(0, 1)] == 3
    assert report.verdicts == {edge: False for edge in cycle(6).edges()}


def test_non_edge():
    with pytest.raises(NotAnEdge):
        is_good_edge(path(4), 0, 2)


def test_graphs_without_edges_are_not_good():
    assert not is_good(empty(1))
    assert not is_good(empty(3))
    assert not is_good_graph(empty(1)).is_good_graph


def test_disconnected_graph_is_not_good():
    two_triangles = from_edge_list(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    report = is_good_graph(two_triangles)
    assert not report.connected
    assert not report.is_good_graph
    assert not is_good(two_triangles)


@pytest.mark.parametrize("n", range(2, 8))
def test_sigma1_equals_m_exactly_for_good_graphs(n):
    for graph in enumerate_connected(n):
        assert is_good(graph) == (sigma(graph, 1).value == graph.m)
        assert is_good(graph) == is_good_graph(graph).is_good_graph
        assert is_connected(graph)
