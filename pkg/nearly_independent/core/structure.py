from typing import List, Optional, Sequence, Set

from nearly_independent.core.graph import Edge, Graph, VertexSet, bits


def component_masks(graph: Graph, within: Optional[int] = None) -> List[int]:
    """Компоненты связности индуцированного подграфа на `within` (по умолчанию на всём графе)."""
    return split_components(graph.rows, graph.vertex_mask if within is None else within)


def split_components(rows: Sequence[int], remaining: int) -> List[int]:
    """Маски компонент связности подграфа, индуцированного маской `remaining`."""
    components = []
    while remaining:
        seed = remaining & -remaining
        reached = seed
        frontier = seed
        while frontier:
            grown = 0
            for v in bits(frontier):
                grown |= rows[v]
            frontier = grown & remaining & ~reached
            reached |= frontier
        components.append(reached)
        remaining &= ~reached
    return components


def is_connected(graph: Graph) -> bool:
    """Граф без вершин считается несвязным, граф из одной вершины — связным."""
    if graph.n == 0:
        return False
    return len(component_masks(graph)) == 1


def has_cycle(graph: Graph) -> bool:
    # у леса ровно n − c рёбер
    return graph.m > graph.n - len(component_masks(graph))


def _lowlink(graph: Graph):
    """
    Итеративный обход в глубину с вычислением low-link.
    Возвращает (мосты, точки сочленения) за один проход по всем компонентам.
    """
    n = graph.n
    rows = graph.rows
    order = [-1] * n
    low = [0] * n
    found_bridges: Set[Edge] = set()
    cut_mask = 0
    counter = 0

    for root in range(n):
        if order[root] != -1:
            continue
        order[root] = low[root] = counter
        counter += 1
        root_children = 0
        # (вершина, родитель, ещё не просмотренные соседи)
        stack = [(root, -1, rows[root])]
        while stack:
            v, parent, pending = stack[-1]
            if pending:
                u = (pending & -pending).bit_length() - 1
                stack[-1] = (v, parent, pending & (pending - 1))
                if u == parent:
                    continue
                if order[u] == -1:
                    order[u] = low[u] = counter
                    counter += 1
                    if v == root:
                        root_children += 1
                    stack.append((u, v, rows[u]))
                else:
                    low[v] = min(low[v], order[u])
                continue
            stack.pop()
            if parent == -1:
                continue
            low[parent] = min(low[parent], low[v])
            if low[v] > order[parent]:
                found_bridges.add((min(parent, v), max(parent, v)))
            if parent != root and low[v] >= order[parent]:
                cut_mask |= 1 << parent
        if root_children > 1:
            cut_mask |= 1 << root

    return found_bridges, VertexSet(n, cut_mask)


def bridges(graph: Graph) -> Set[Edge]:
    """Рёбра, удаление которых увеличивает число компонент; пары (u, v) с u < v."""
    return _lowlink(graph)[0]


def cut_vertices(graph: Graph) -> VertexSet:
    """Вершины, удаление которых увеличивает число компонент."""
    return _lowlink(graph)[1]
