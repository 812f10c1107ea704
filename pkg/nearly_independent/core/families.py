"""
Стандартные семейства графов с фиксированной нумерацией вершин:
пути и циклы — по порядку вершин, у K_{r,s} доля X = {0..r-1}, Y = {r..r+s-1},
у звезды центр — вершина 0, у K₄−e удалено ребро (2, 3).
"""
from typing import Callable, Dict, List

from nearly_independent.core.graph import Graph, from_edge_list, full_mask
from nearly_independent.source.errors import InvalidFamilyParams


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise InvalidFamilyParams(message)


def path(n: int) -> Graph:
    """P_n."""
    _require(n >= 1, f"P_n требует n ≥ 1, получено {n}")
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    """C_n."""
    _require(n >= 3, f"C_n требует n ≥ 3, получено {n}")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    """K_n."""
    _require(n >= 1, f"K_n требует n ≥ 1, получено {n}")
    everything = full_mask(n)
    return Graph([everything & ~(1 << v) for v in range(n)])


def complete_bipartite(r: int, s: int) -> Graph:
    """K_{r,s}."""
    _require(r >= 1 and s >= 1, f"K_{{r,s}} требует r, s ≥ 1, получено r={r}, s={s}")
    x = full_mask(r)
    y = full_mask(r + s) & ~x
    return Graph([y] * r + [x] * s)


def star(n: int) -> Graph:
    """K_{1,n-1}."""
    _require(n >= 2, f"Звезда K_{{1,n-1}} требует n ≥ 2, получено {n}")
    return complete_bipartite(1, n - 1)


def k4_minus_edge() -> Graph:
    """K₄ без ребра (2, 3)."""
    return from_edge_list(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


def empty(n: int) -> Graph:
    """Граф без рёбер на n вершинах."""
    _require(n >= 0, f"Порядок не может быть отрицательным: {n}")
    return Graph([0] * n)


FAMILIES: Dict[str, Callable[..., Graph]] = {
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "bipartite": complete_bipartite,
    "star": star,
    "k4-minus-edge": k4_minus_edge,
    "empty": empty,
}


def family(name: str, *params: int) -> Graph:
    """Граф семейства `name` с параметрами `params` (n, либо r и s для bipartite)."""
    constructor = FAMILIES.get(name)
    if constructor is None:
        raise InvalidFamilyParams(f"Неизвестное семейство {name!r}, доступны: {', '.join(FAMILIES)}")
    try:
        return constructor(*params)
    except TypeError as err:
        raise InvalidFamilyParams(f"Неверное число параметров для {name!r}: {params}") from err


def family_names() -> List[str]:
    return list(FAMILIES)
