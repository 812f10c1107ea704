"""
Канонический ключ графа: минимальная битовая строка верхнего треугольника
матрицы смежности по всем перестановкам вершин.

Перебор перестановок ограничен разбиением вершин по степеням (с итеративным
уточнением по степеням соседей): позиции заполняются классами в фиксированном
порядке, внутри класса перебираются все вершины. Ключ записан как graph6
переставленного графа, поэтому сравнение ключей совпадает со сравнением битовых строк.
"""
from typing import Dict, List, NewType, Optional

from nearly_independent.core.graph import Graph, bits
from nearly_independent.core.graph6 import to_graph6
from nearly_independent.source.errors import Unsupported
from nearly_independent.source.settings import get_limits

CanonicalKey = NewType("CanonicalKey", bytes)


def refine_colors(graph: Graph) -> List[int]:
    """Устойчивая раскраска: степень, затем мультимножество цветов соседей, до стабилизации."""
    rows = graph.rows
    colors = graph.degrees()
    classes = len(set(colors))
    while True:
        signatures = [
            (colors[v], tuple(sorted(colors[u] for u in bits(row))))
            for v, row in enumerate(rows)
        ]
        palette = {sig: index for index, sig in enumerate(sorted(set(signatures)))}
        refined = [palette[sig] for sig in signatures]
        if len(palette) == classes:
            return refined
        colors, classes = refined, len(palette)


def canonical_order(graph: Graph) -> List[int]:
    """Порядок вершин (позиция → вершина), дающий минимальную битовую строку."""
    n = graph.n
    rows = graph.rows
    colors = refine_colors(graph)
    slot_colors = sorted(colors)
    members: Dict[int, List[int]] = {}
    for v in range(n):
        members.setdefault(colors[v], []).append(v)

    best: Optional[List[int]] = None
    best_order: List[int] = []
    placed: List[int] = []
    columns: List[int] = []

    def extend(used: int) -> None:
        nonlocal best, best_order
        depth = len(placed)
        if depth == n:
            if best is None or columns < best:
                best = columns[:]
                best_order = placed[:]
            return

        scored = []
        for v in members[slot_colors[depth]]:
            if used >> v & 1:
                continue
            column = 0
            for u in placed:
                column = column << 1 | (rows[v] >> u & 1)
            scored.append((column, v))
        lowest = min(column for column, _ in scored)
        if best is not None and columns + [lowest] > best[:depth + 1]:
            return

        tried: List[int] = []
        for column, v in scored:
            if column != lowest:
                continue
            # перестановка близнецов является автоморфизмом, размещённые вершины остаются на месте
            if any((rows[v] ^ rows[w]) & ~(1 << v | 1 << w) == 0 for w in tried):
                continue
            tried.append(v)
            placed.append(v)
            columns.append(column)
            extend(used | 1 << v)
            placed.pop()
            columns.pop()

    extend(0)
    return best_order


def relabel(graph: Graph, order: List[int]) -> Graph:
    """Граф, в котором вершина order[p] получает метку p."""
    position = {v: p for p, v in enumerate(order)}
    rows = []
    for v in order:
        row = 0
        for u in bits(graph.rows[v]):
            row |= 1 << position[u]
        rows.append(row)
    return Graph._trusted(rows)


def canonical_form(graph: Graph, cap: Optional[int] = None) -> Graph:
    limit = get_limits().canonical_cap if cap is None else cap
    if graph.n > limit:
        raise Unsupported(
            f"Точная канонизация ограничена n ≤ {limit}, получено n={graph.n}; "
            f"для больших графов используйте внешние канонизаторы"
        )
    return relabel(graph, canonical_order(graph))


def canonical_key(graph: Graph, cap: Optional[int] = None) -> CanonicalKey:
    """Ключ, равный для изоморфных графов и различный для неизоморфных."""
    return CanonicalKey(to_graph6(canonical_form(graph, cap=cap)).encode("ascii"))


def is_isomorphic(first: Graph, second: Graph, cap: Optional[int] = None) -> bool:
    if first.n != second.n or first.m != second.m or sorted(first.degrees()) != sorted(second.degrees()):
        return False
    return canonical_key(first, cap=cap) == canonical_key(second, cap=cap)
