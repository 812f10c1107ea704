"""
Точный подсчёт σ_k(G) — числа подмножеств вершин, индуцирующих ровно k рёбер.

Полный перебор годится для любого k. Для k ∈ {0, 1} есть рекурсия по опорной
вершине v:
    σ₀(G) = σ₀(G − v) + σ₀(G − N[v])
    σ₁(G) = σ₁(G − v) + σ₁(G − N[v]) + Σ_{u ∈ N(v)} σ₀(G − (N[u] ∪ N[v]))
Слагаемые σ₁ считают подмножества без v, с v как изолированной вершиной и
с v как концом единственного индуцированного ребра. На пустом графе σ₀ = 1, σ₁ = 0.
"""
from enum import Enum
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, Field

from nearly_independent.core.graph import Graph, VertexSet, bits
from nearly_independent.core.structure import split_components
from nearly_independent.engine.memo import MemoTable, Pair
from nearly_independent.source.errors import TooLarge, Unsupported
from nearly_independent.source.settings import get_limits


class SigmaMethod(str, Enum):
    BRUTE_FORCE = "brute-force"
    RECURSIVE = "recursive"
    CONVOLUTION = "convolution"


class SigmaCount(BaseModel):
    k: int = Field(ge=0)
    value: int = Field(ge=0)
    method: SigmaMethod


def induced_edge_count(graph: Graph, subset: VertexSet) -> int:
    """Число рёбер с обоими концами в `subset`."""
    if subset.order != graph.n:
        raise ValueError(f"Множество для графа порядка {subset.order}, а граф имеет порядок {graph.n}")
    mask = subset.mask
    return sum((graph.rows[v] & mask).bit_count() for v in bits(mask)) // 2


def sigma_distribution(graph: Graph, cap: Optional[int] = None) -> List[int]:
    """
    [σ₀(G), σ₁(G), …, σ_m(G)] полным перебором всех 2^n подмножеств.

    Число рёбер подмножеств считается векторно: подмножества с наибольшей
    вершиной v получаются из подмножеств младших вершин добавлением v.
    """
    limit = get_limits().brute_force_cap if cap is None else cap
    n = graph.n
    if n > limit:
        raise TooLarge(f"Полный перебор ограничен n ≤ {limit}, получено n={n}")
    counts = np.zeros(1, dtype=np.int16)
    for v, row in enumerate(graph.rows):
        earlier = row & ((1 << v) - 1)
        subsets = np.arange(1 << v, dtype=np.int64)
        gained = np.bitwise_count(subsets & earlier).astype(np.int16)
        counts = np.concatenate((counts, counts + gained))
    return [int(c) for c in np.bincount(counts, minlength=graph.m + 1)]


def sigma_bruteforce(graph: Graph, k: int, cap: Optional[int] = None) -> SigmaCount:
    if k < 0:
        raise ValueError(f"k должно быть неотрицательным, получено {k}")
    distribution = sigma_distribution(graph, cap=cap)
    value = distribution[k] if k < len(distribution) else 0
    return SigmaCount(k=k, value=value, method=SigmaMethod.BRUTE_FORCE)


def sigma_components(parts: Iterable[Pair]) -> Pair:
    """
    Свёртка пар (σ₀, σ₁) по компонентам дизъюнктного объединения:
    σ₀ перемножается, а единственное индуцированное ребро лежит ровно в одной компоненте.
    """
    folded: Optional[Pair] = None
    for zero, one in parts:
        if folded is None:
            folded = (zero, one)
        else:
            folded = (folded[0] * zero, folded[1] * zero + folded[0] * one)
    if folded is None:
        raise ValueError("Свёртка требует хотя бы одну компоненту")
    return folded


def _pivot(rows: Sequence[int], mask: int) -> Tuple[int, int]:
    """Вершина максимальной степени в подграфе, при равенстве — с наименьшей меткой."""
    pivot, best = -1, -1
    for v in bits(mask):
        degree = (rows[v] & mask).bit_count()
        if degree > best:
            pivot, best = v, degree
    return pivot, best


def _pair(rows: Sequence[int], mask: int, memo: MemoTable) -> Pair:
    if not mask:
        return 1, 0
    cached = memo.get(mask)
    if cached is not None:
        return cached

    v, degree = _pivot(rows, mask)
    if degree == 0:
        result = (1 << mask.bit_count(), 0)
    else:
        components = split_components(rows, mask)
        if len(components) > 1:
            result = sigma_components(_pair(rows, part, memo) for part in components)
        else:
            neighbors = rows[v] & mask
            rest = mask & ~(neighbors | 1 << v)
            without_v = _pair(rows, mask & ~(1 << v), memo)
            isolated_v = _pair(rows, rest, memo)
            edge_at_v = sum(_pair(rows, rest & ~rows[u], memo)[0] for u in bits(neighbors))
            result = (without_v[0] + isolated_v[0], without_v[1] + isolated_v[1] + edge_at_v)

    memo.put(mask, result)
    return result


def sigma_pair(graph: Graph, memo: Optional[MemoTable] = None) -> Pair:
    """(σ₀(G), σ₁(G)) одной рекурсией с общим кэшем."""
    memo = MemoTable() if memo is None else memo
    memo.bind(graph.rows)
    return _pair(graph.rows, graph.vertex_mask, memo)


def _recursive_method(graph: Graph) -> SigmaMethod:
    if len(split_components(graph.rows, graph.vertex_mask)) > 1:
        return SigmaMethod.CONVOLUTION
    return SigmaMethod.RECURSIVE


def sigma0_recursive(graph: Graph, memo: Optional[MemoTable] = None) -> SigmaCount:
    return SigmaCount(k=0, value=sigma_pair(graph, memo)[0], method=_recursive_method(graph))


def sigma1_recursive(graph: Graph, memo: Optional[MemoTable] = None) -> SigmaCount:
    return SigmaCount(k=1, value=sigma_pair(graph, memo)[1], method=_recursive_method(graph))


def sigma(graph: Graph, k: int, method: str = "auto", cap: Optional[int] = None) -> SigmaCount:
    """σ_k(G) выбранным методом: auto — рекурсия для k ≤ 1, иначе полный перебор."""
    if method == "auto":
        method = "recursive" if k <= 1 else "brute"
    if method == "brute":
        return sigma_bruteforce(graph, k, cap=cap)
    if method != "recursive":
        raise Unsupported(f"Неизвестный метод {method!r}: ожидается auto, brute или recursive")
    if k == 0:
        return sigma0_recursive(graph)
    if k == 1:
        return sigma1_recursive(graph)
    raise Unsupported(f"Рекурсия есть только для k ∈ {{0, 1}}, запрошено k={k}")
