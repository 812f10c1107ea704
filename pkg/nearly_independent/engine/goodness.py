"""
Хорошие рёбра и хорошие графы.

Ребро uv хорошее, если N[u] ∪ N[v] = V(G), то есть каждая вершина совпадает
с u или v либо смежна с одной из них. Граф хороший, если он связен, имеет хотя
бы одно ребро и все его рёбра хорошие: графы без рёбер по соглашению не считаются хорошими.
"""
from typing import Dict, List, Optional

from pydantic import BaseModel

from nearly_independent.core.graph import Edge, Graph
from nearly_independent.core.structure import is_connected
from nearly_independent.source.errors import NotAnEdge


class EdgeVerdict(BaseModel):
    u: int
    v: int
    good: bool
    # вершина вне N[u] ∪ N[v]; только для плохих рёбер
    witness: Optional[int] = None

    @property
    def edge(self) -> Edge:
        return self.u, self.v


class GoodnessReport(BaseModel):
    edges: List[EdgeVerdict]
    connected: bool
    is_good_graph: bool

    @property
    def verdicts(self) -> Dict[Edge, bool]:
        return {verdict.edge: verdict.good for verdict in self.edges}

    @property
    def witnesses(self) -> Dict[Edge, int]:
        return {verdict.edge: verdict.witness for verdict in self.edges if not verdict.good}

    @property
    def bad_edges(self) -> List[Edge]:
        return [verdict.edge for verdict in self.edges if not verdict.good]


def _uncovered(graph: Graph, u: int, v: int) -> int:
    rows = graph.rows
    return graph.vertex_mask & ~(rows[u] | rows[v] | 1 << u | 1 << v)


def is_good_edge(graph: Graph, u: int, v: int) -> EdgeVerdict:
    """Хорошее ли ребро uv; для плохого ребра указывает наименьшую непокрытую вершину."""
    if not graph.adjacent(u, v):
        raise NotAnEdge(f"Вершины {u} и {v} не смежны")
    u, v = min(u, v), max(u, v)
    missing = _uncovered(graph, u, v)
    if not missing:
        return EdgeVerdict(u=u, v=v, good=True)
    return EdgeVerdict(u=u, v=v, good=False, witness=(missing & -missing).bit_length() - 1)


def is_good_graph(graph: Graph) -> GoodnessReport:
    verdicts = [is_good_edge(graph, u, v) for u, v in graph.edges()]
    connected = is_connected(graph)
    return GoodnessReport(
        edges=verdicts,
        connected=connected,
        is_good_graph=connected and graph.m >= 1 and all(verdict.good for verdict in verdicts),
    )


def is_good(graph: Graph) -> bool:
    """Быстрая проверка принадлежности хорошим графам без построения отчёта."""
    if graph.m == 0 or not is_connected(graph):
        return False
    return all(not _uncovered(graph, u, v) for u, v in graph.edges())
