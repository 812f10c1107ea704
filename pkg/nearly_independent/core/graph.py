from typing import Dict, Iterable, Iterator, List, NamedTuple, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from nearly_independent.source.errors import (
    DuplicateEdge,
    EmptyGraph,
    InvalidEdge,
    InvalidVertex,
    Unsupported,
)
from nearly_independent.source.settings import MAX_ORDER

Edge = Tuple[int, int]


def bits(mask: int) -> Iterator[int]:
    """Номера установленных битов маски по возрастанию."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def full_mask(n: int) -> int:
    return (1 << n) - 1


class VertexSet:
    """
    Подмножество вершин графа-хозяина порядка `order`, хранится как битовая маска.

    Неизменяемо; члены перечисляются по возрастанию.
    """

    __slots__ = ("_order", "_mask")

    def __init__(self, order: int, mask: int = 0):
        if mask < 0 or mask >> order:
            raise InvalidVertex(f"Множество {mask:#x} выходит за пределы графа порядка {order}")
        self._order = order
        self._mask = mask

    @classmethod
    def of(cls, order: int, members: Iterable[int]) -> "VertexSet":
        mask = 0
        for v in members:
            if not 0 <= v < order:
                raise InvalidVertex(f"Вершина {v} вне диапазона 0..{order - 1}")
            mask |= 1 << v
        return cls(order, mask)

    @property
    def order(self) -> int:
        return self._order

    @property
    def mask(self) -> int:
        return self._mask

    @property
    def members(self) -> Tuple[int, ...]:
        return tuple(bits(self._mask))

    def complement(self) -> "VertexSet":
        return VertexSet(self._order, full_mask(self._order) & ~self._mask)

    def __or__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self._order, self._mask | other._mask)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self._order, self._mask & other._mask)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self._order, self._mask & ~other._mask)

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and 0 <= v < self._order and bool(self._mask >> v & 1)

    def __iter__(self) -> Iterator[int]:
        return bits(self._mask)

    def __len__(self) -> int:
        return self._mask.bit_count()

    def __bool__(self) -> bool:
        return self._mask != 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, VertexSet):
            return self._order == other._order and self._mask == other._mask
        if isinstance(other, (set, frozenset)):
            return set(self) == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._order, self._mask))

    def __repr__(self) -> str:
        return f"VertexSet({set(self) or '{}'})"


class Graph:
    """
    Простой неориентированный граф на вершинах 0..n-1.

    Строка смежности каждой вершины — битовая маска (n ≤ 62), поэтому операции
    с окрестностями и подмножествами сводятся к операциям над словами.
    Экземпляры неизменяемы, их можно передавать между процессами.
    """

    __slots__ = ("_rows", "_m")

    def __init__(self, rows: Sequence[int]):
        n = len(rows)
        if n > MAX_ORDER:
            raise Unsupported(f"Порядок {n} больше предела {MAX_ORDER}")
        limit = full_mask(n)
        degree_sum = 0
        for v, row in enumerate(rows):
            if row < 0 or row & ~limit:
                raise InvalidVertex(f"Строка смежности вершины {v} ссылается на вершину вне графа")
            if row >> v & 1:
                raise InvalidEdge(f"Петля в вершине {v}")
            for u in bits(row):
                if not rows[u] >> v & 1:
                    raise InvalidEdge(f"Ребро {v}-{u} задано только в одну сторону")
            degree_sum += row.bit_count()
        self._rows = tuple(rows)
        self._m = degree_sum // 2

    @classmethod
    def _trusted(cls, rows: Sequence[int]) -> "Graph":
        """Сборка без проверок: только для строк, полученных из уже корректного графа."""
        graph = cls.__new__(cls)
        graph._rows = tuple(rows)
        graph._m = sum(row.bit_count() for row in rows) // 2
        return graph

    @property
    def n(self) -> int:
        return len(self._rows)

    @property
    def m(self) -> int:
        return self._m

    @property
    def rows(self) -> Tuple[int, ...]:
        return self._rows

    @property
    def vertex_mask(self) -> int:
        return full_mask(len(self._rows))

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < len(self._rows):
            raise InvalidVertex(f"Вершина {v} вне диапазона 0..{len(self._rows) - 1}")

    def adjacent(self, u: int, v: int) -> bool:
        self.check_vertex(u)
        self.check_vertex(v)
        return bool(self._rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        self.check_vertex(v)
        return self._rows[v].bit_count()

    def degrees(self) -> List[int]:
        return [row.bit_count() for row in self._rows]

    def edges(self) -> List[Edge]:
        """Рёбра (u, v) с u < v в лексикографическом порядке."""
        return [(u, v) for u, row in enumerate(self._rows) for v in bits(row >> (u + 1) << (u + 1))]

    def induced(self, mask: int) -> Tuple["Graph", Dict[int, int]]:
        """Индуцированный подграф на `mask` с плотной перенумерацией и картой старых меток в новые."""
        label_map = {old: new for new, old in enumerate(bits(mask))}
        rows = []
        for old in label_map:
            row = 0
            for u in bits(self._rows[old] & mask):
                row |= 1 << label_map[u]
            rows.append(row)
        return Graph._trusted(rows), label_map

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __getstate__(self):
        return self._rows

    def __setstate__(self, rows):
        self._rows = rows
        self._m = sum(row.bit_count() for row in rows) // 2

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


class DegreeProfile(BaseModel):
    """Вершина степени q с отсортированными степенями соседей: (d_1, …, d_q)-вершина."""

    model_config = ConfigDict(frozen=True)

    degree: int
    neighbor_degrees: Tuple[int, ...]

    @model_validator(mode="after")
    def _check(self) -> "DegreeProfile":
        if len(self.neighbor_degrees) != self.degree:
            raise ValueError("длина профиля должна совпадать со степенью вершины")
        if list(self.neighbor_degrees) != sorted(self.neighbor_degrees):
            raise ValueError("степени соседей должны идти по возрастанию")
        return self

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.neighbor_degrees)) + ")-vertex"


class Deletion(NamedTuple):
    graph: Graph
    label_map: Dict[int, int]


def from_edge_list(n: int, edges: Iterable[Edge]) -> Graph:
    """Строит граф по списку рёбер. Петли, номера вне диапазона и повторы рёбер — ошибки."""
    if n < 0:
        raise InvalidVertex(f"Отрицательный порядок графа: {n}")
    if n > MAX_ORDER:
        raise Unsupported(f"Порядок {n} больше предела {MAX_ORDER}")
    rows = [0] * n
    for u, v in edges:
        add_edge(rows, u, v)
    return Graph._trusted(rows)


def add_edge(rows: List[int], u: int, v: int) -> None:
    """Добавляет ребро в строки смежности строящегося графа со строгой проверкой."""
    n = len(rows)
    if not 0 <= u < n or not 0 <= v < n:
        raise InvalidVertex(f"Ребро ({u}, {v}) выходит за диапазон 0..{n - 1}")
    if u == v:
        raise InvalidEdge(f"Петля в вершине {u}")
    if rows[u] >> v & 1:
        raise DuplicateEdge(f"Ребро ({u}, {v}) задано повторно")
    rows[u] |= 1 << v
    rows[v] |= 1 << u


def neighborhood(graph: Graph, v: int) -> VertexSet:
    """N(v)."""
    graph.check_vertex(v)
    return VertexSet(graph.n, graph.rows[v])


def closed_neighborhood(graph: Graph, v: int) -> VertexSet:
    """N[v] = N(v) ∪ {v}."""
    graph.check_vertex(v)
    return VertexSet(graph.n, graph.rows[v] | 1 << v)


def delete_vertices(graph: Graph, removed: VertexSet) -> Deletion:
    """G − S: индуцированный подграф на V(G)∖S, метки сжимаются с сохранением порядка."""
    if removed.order != graph.n:
        raise InvalidVertex(f"Множество для графа порядка {removed.order}, а граф имеет порядок {graph.n}")
    kept, label_map = graph.induced(graph.vertex_mask & ~removed.mask)
    return Deletion(kept, label_map)


def min_degree(graph: Graph) -> int:
    """δ(G)."""
    if graph.n == 0:
        raise EmptyGraph("У графа без вершин нет минимальной степени")
    return min(graph.degrees())


def max_degree(graph: Graph) -> int:
    """Δ(G)."""
    if graph.n == 0:
        raise EmptyGraph("У графа без вершин нет максимальной степени")
    return max(graph.degrees())


def degree_profile(graph: Graph, v: int) -> DegreeProfile:
    graph.check_vertex(v)
    degrees = graph.degrees()
    return DegreeProfile(
        degree=degrees[v],
        neighbor_degrees=tuple(sorted(degrees[u] for u in bits(graph.rows[v]))),
    )


def complement(graph: Graph) -> Graph:
    everything = graph.vertex_mask
    return Graph._trusted([everything & ~row & ~(1 << v) for v, row in enumerate(graph.rows)])
