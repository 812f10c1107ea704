import random
from itertools import combinations
from typing import Iterator

import pytest

from nearly_independent.core.graph import Graph, bits
from nearly_independent.core.structure import component_masks


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    rows = [0] * n
    for u, v in combinations(range(n), 2):
        if rng.random() < p:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
    return Graph(rows)


def labeled_graphs(n: int) -> Iterator[Graph]:
    """Все помеченные графы на n вершинах."""
    pairs = list(combinations(range(n), 2))
    for edge_mask in range(1 << len(pairs)):
        rows = [0] * n
        for index in bits(edge_mask):
            u, v = pairs[index]
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        yield Graph(rows)


def component_count(graph: Graph) -> int:
    return len(component_masks(graph))


def relabeled(graph: Graph, rng: random.Random) -> Graph:
    order = list(range(graph.n))
    rng.shuffle(order)
    rows = [0] * graph.n
    for u, v in graph.edges():
        a, b = order[u], order[v]
        rows[a] |= 1 << b
        rows[b] |= 1 << a
    return Graph(rows)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20241019)
