import networkx as nx
import pytest

from nearly_independent.core.edgelist import parse_edge_list, read_edge_list, to_edge_list
from nearly_independent.core.families import complete, empty, path
from nearly_independent.core.graph import Graph
from nearly_independent.core.graph6 import from_graph6, iter_graph6, read_graph6_file, to_graph6
from nearly_independent.source.errors import (
    DuplicateEdge,
    MalformedGraph6,
    MalformedInput,
    Unsupported,
)
from tests.conftest import random_graph


@pytest.mark.parametrize(
    "text, graph",
    [
        ("Bw", complete(3)),
        ("A_", path(2)),
        ("B?", empty(3)),
        ("?", Graph([])),
        ("@", empty(1)),
    ],
)
def test_known_encodings(text, graph):
    assert to_graph6(graph) == text
    assert from_graph6(text) == graph


def test_header_and_whitespace_are_ignored():
    assert from_graph6(">>graph6<<Bw\n") == complete(3)
    assert from_graph6("  A_  ") == path(2)


def test_agrees_with_networkx(rng):
    for _ in range(200):
        n = rng.randint(1, 20)
        graph = random_graph(rng, n, rng.random())
        reference = nx.Graph()
        reference.add_nodes_from(range(n))
        reference.add_edges_from(graph.edges())
        expected = nx.to_graph6_bytes(reference, header=False).decode("ascii").strip()
        assert to_graph6(graph) == expected
        assert from_graph6(expected) == graph


def test_encode_decode_encode_is_stable(rng):
    for _ in range(10_000):
        graph = random_graph(rng, rng.randint(0, 20), rng.random())
        text = to_graph6(graph)
        decoded = from_graph6(text)
        assert decoded == graph
        assert to_graph6(decoded) == text


@pytest.mark.parametrize(
    "text",
    [
        "",
        "B",
        "Bww",
        "B w",
        "Bx",
        "C",
        "A>",
    ],
)
def test_malformed_graph6(text):
    with pytest.raises(MalformedGraph6):
        from_graph6(text)


def test_multibyte_size_is_unsupported():
    with pytest.raises(Unsupported):
        from_graph6("~??~" + "?" * 10)


def test_iter_graph6_reports_line_number():
    lines = ["Bw\n", "\n", "A_\n", "Bx\n"]
    stream = iter_graph6(lines)
    assert next(stream) == (1, complete(3))
    assert next(stream) == (3, path(2))
    with pytest.raises(MalformedInput) as err:
        next(stream)
    assert err.value.line_number == 4


def test_read_graph6_file(tmp_path):
    source = tmp_path / "graphs.g6"
    source.write_text(">>graph6<<Bw\nA_\n", encoding="ascii")
    assert [graph for _, graph in read_graph6_file(source)] == [complete(3), path(2)]


def test_edge_list_parsing():
    text = ["# треугольник с хвостом\n", "4\n", "0 1\n", "1 2\n", "\n", "2 0\n", "2 3\n"]
    graph = parse_edge_list(text)
    assert graph.n == 4
    assert graph.edges() == [(0, 1), (0, 2), (1, 2), (2, 3)]
    assert parse_edge_list(to_edge_list(graph).splitlines()) == graph


@pytest.mark.parametrize(
    "lines, line_number",
    [
        (["3", "0 1", "1 1"], 3),
        (["3", "0 1", "0 5"], 3),
        (["3", "0 1", "1 0"], 3),
        (["3", "0 1 2"], 2),
        (["x"], 1),
        (["# only comments"], None),
    ],
)
def test_edge_list_errors(lines, line_number):
    with pytest.raises(MalformedInput) as err:
        parse_edge_list(lines)
    assert err.value.line_number == line_number


def test_edge_list_error_keeps_cause():
    with pytest.raises(MalformedInput) as err:
        parse_edge_list(["2", "0 1", "0 1"])
    assert isinstance(err.value.__cause__, DuplicateEdge)


def test_read_edge_list_missing_file(tmp_path):
    with pytest.raises(OSError):
        read_edge_list(tmp_path / "absent.txt")
