import pytest

from nearly_independent.core.canonical import canonical_key
from nearly_independent.core.families import complete, cycle, path, star
from nearly_independent.core.graph import from_edge_list
from nearly_independent.core.graph6 import to_graph6
from nearly_independent.core.structure import is_connected
from nearly_independent.source.errors import MalformedInput, Unsupported
from nearly_independent.verifier.corpus import (
    REVERSE,
    GraphCorpus,
    Provenance,
    corpus_keys,
    enumerate_connected,
    enumerate_connected_labeled,
)
from tests.conftest import relabeled

CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}


@pytest.mark.parametrize("n, expected", sorted(CONNECTED_COUNTS.items()))
def test_connected_counts(n, expected):
    corpus = enumerate_connected(n)
    assert corpus.size_hint() == expected
    assert corpus.provenance is Provenance.BUILT_IN
    keys = corpus_keys(corpus)
    assert len(set(keys)) == expected
    assert all(is_connected(graph) and graph.n == n for graph in corpus)


@pytest.mark.slow
def test_connected_count_order_eight():
    assert enumerate_connected(8).size_hint() == 11117


@pytest.mark.parametrize("n", range(1, 7))
def test_generator_matches_labeled_enumeration(n):
    assert set(corpus_keys(enumerate_connected(n))) == set(corpus_keys(enumerate_connected_labeled(n)))


def test_reverse_configuration_gives_same_corpus():
    forward = [to_graph6(graph) for graph in enumerate_connected(7)]
    reverse = [to_graph6(graph) for graph in enumerate_connected(7, order=REVERSE)]
    assert forward == reverse


def test_corpus_is_sorted_by_edge_count():
    sizes = [graph.m for graph in enumerate_connected(6)]
    assert sizes == sorted(sizes)
    assert sizes[0] == 5
    assert sizes[-1] == 15


def test_builtin_limits():
    with pytest.raises(Unsupported):
        enumerate_connected(0)
    with pytest.raises(Unsupported):
        enumerate_connected(9)
    with pytest.raises(Unsupported):
        enumerate_connected_labeled(7)


def test_external_corpus_deduplicates(tmp_path, rng):
    graphs = list(enumerate_connected(5))
    lines = [to_graph6(relabeled(graph, rng)) for graph in graphs]
    lines.append(to_graph6(relabeled(graphs[3], rng)))
    source = tmp_path / "order5.g6"
    source.write_text(">>graph6<<" + "\n".join(lines) + "\n", encoding="ascii")

    corpus = GraphCorpus.from_graph6_file(source, 5)
    assert corpus.provenance is Provenance.EXTERNAL_GRAPH6
    assert corpus.size_hint() is None
    assert sorted(corpus_keys(corpus)) == sorted(corpus_keys(enumerate_connected(5)))
    # внешний корпус перечитывается при каждом проходе
    assert len(list(corpus)) == 21


@pytest.mark.parametrize(
    "graph",
    [
        from_edge_list(4, [(0, 1), (2, 3)]),
        cycle(5),
    ],
)
def test_external_corpus_validation(tmp_path, graph):
    source = tmp_path / "bad.g6"
    source.write_text(to_graph6(path(4)) + "\n" + to_graph6(graph) + "\n", encoding="ascii")
    with pytest.raises(MalformedInput) as err:
        list(GraphCorpus.from_graph6_file(source, 4))
    assert err.value.line_number == 2


def test_external_corpus_missing_file(tmp_path):
    with pytest.raises(FileNotFoundError):
        GraphCorpus.from_graph6_file(tmp_path / "absent.g6", 5)


def test_small_corpora_contents():
    assert corpus_keys(enumerate_connected(3)) == [
        canonical_key(path(3)).decode("ascii"),
        canonical_key(complete(3)).decode("ascii"),
    ]
    assert canonical_key(star(4)).decode("ascii") in corpus_keys(enumerate_connected(4))
