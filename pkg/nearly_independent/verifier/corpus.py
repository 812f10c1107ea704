"""
Корпуса попарно неизоморфных связных графов фиксированного порядка.

Встроенный генератор расширяет каждый связный граф порядка n−1 новой вершиной,
присоединённой к каждому непустому подмножеству старых вершин, и убирает
изоморфные повторы по каноническому ключу. Перебор полон: у связного графа
всегда есть вершина, удаление которой оставляет граф связным.
"""
from enum import Enum
from functools import lru_cache
from itertools import combinations
from pathlib import Path
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Tuple

from loguru import logger

from nearly_independent.core.canonical import canonical_form, canonical_key
from nearly_independent.core.graph import Graph, bits
from nearly_independent.core.graph6 import read_graph6_file, to_graph6
from nearly_independent.core.structure import is_connected
from nearly_independent.source.errors import MalformedInput, Unsupported
from nearly_independent.source.settings import MAX_BUILTIN_ORDER, MIN_BUILTIN_ORDER, get_limits

# полный перебор помеченных графов разумен только до этого порядка (2^15 графов)
MAX_LABELED_ORDER = 6

FORWARD = "forward"
REVERSE = "reverse"


class Provenance(str, Enum):
    BUILT_IN = "built-in"
    EXTERNAL_GRAPH6 = "external-graph6"


class GraphCorpus:
    """
    Поток попарно неизоморфных связных графов порядка n.

    Встроенный корпус хранится списком в порядке (m, канонический ключ);
    внешний перечитывается из файла при каждом проходе.
    """

    def __init__(
            self,
            n: int,
            provenance: Provenance,
            graphs: Optional[Tuple[Graph, ...]] = None,
            stream: Optional[Callable[[], Iterator[Graph]]] = None,
            source: Optional[Path] = None,
    ):
        self.n = n
        self.provenance = provenance
        self.source = source
        self._graphs = graphs
        self._stream = stream
        # результаты вычислений по корпусу, см. verifier.evaluate
        self.facts_cache: Dict[float, list] = {}

    @classmethod
    def from_graph6_file(cls, path: Path, n: int) -> "GraphCorpus":
        path = Path(path)
        if not path.is_file():
            raise FileNotFoundError(f"Файл корпуса {path} не найден")
        return cls(n, Provenance.EXTERNAL_GRAPH6, stream=lambda: _stream_external(path, n), source=path)

    def size_hint(self) -> Optional[int]:
        return None if self._graphs is None else len(self._graphs)

    def __iter__(self) -> Iterator[Graph]:
        if self._graphs is not None:
            return iter(self._graphs)
        return self._stream()

    def __repr__(self) -> str:
        where = f", source={self.source}" if self.source else ""
        return f"GraphCorpus(n={self.n}, provenance={self.provenance.value}{where})"


def _sort_key(graph: Graph) -> Tuple[int, str]:
    return graph.m, to_graph6(graph)


def _extend(parent: Graph, neighbors: int) -> Graph:
    n = parent.n
    rows = list(parent.rows)
    for u in bits(neighbors):
        rows[u] |= 1 << n
    rows.append(neighbors)
    return Graph._trusted(rows)


@lru_cache(maxsize=None)
def _connected_level(n: int, order: str) -> Tuple[Graph, ...]:
    if n == 1:
        return (Graph([0]),)
    parents = _connected_level(n - 1, order)
    subsets: Iterable[int] = range(1, 1 << (n - 1))
    if order == REVERSE:
        parents = parents[::-1]
        subsets = range((1 << (n - 1)) - 1, 0, -1)
    subsets = tuple(subsets)

    found: Dict[str, Graph] = {}
    candidates = 0
    for parent in parents:
        for neighbors in subsets:
            form = canonical_form(_extend(parent, neighbors))
            found.setdefault(to_graph6(form), form)
            candidates += 1
    logger.debug(f" - Порядок {n}: {candidates} расширений, {len(found)} неизоморфных связных графов")
    return tuple(sorted(found.values(), key=_sort_key))


def enumerate_connected(n: int, order: str = FORWARD) -> GraphCorpus:
    """
    Все связные графы порядка n с точностью до изоморфизма (встроенный генератор, 1 ≤ n ≤ 8).

    `order` меняет порядок обхода родителей и подмножеств (forward/reverse) —
    вторая независимая конфигурация генератора для сверки результатов.
    """
    if not MIN_BUILTIN_ORDER <= n <= MAX_BUILTIN_ORDER:
        raise Unsupported(
            f"Встроенный генератор работает для {MIN_BUILTIN_ORDER} ≤ n ≤ {MAX_BUILTIN_ORDER}, "
            f"для n={n} нужен внешний файл graph6"
        )
    if order not in (FORWARD, REVERSE):
        raise Unsupported(f"Неизвестный порядок обхода {order!r}")
    return GraphCorpus(n, Provenance.BUILT_IN, graphs=_connected_level(n, order))


def enumerate_connected_labeled(n: int) -> GraphCorpus:
    """Эталон: все 2^(n(n−1)/2) помеченных графов, фильтр связности, удаление изоморфных (n ≤ 6)."""
    if not 1 <= n <= MAX_LABELED_ORDER:
        raise Unsupported(f"Перебор помеченных графов поддерживается для 1 ≤ n ≤ {MAX_LABELED_ORDER}")
    pairs = list(combinations(range(n), 2))
    found: Dict[str, Graph] = {}
    for edge_mask in range(1 << len(pairs)):
        rows = [0] * n
        for index in bits(edge_mask):
            u, v = pairs[index]
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        graph = Graph._trusted(rows)
        if is_connected(graph):
            form = canonical_form(graph)
            found.setdefault(to_graph6(form), form)
    return GraphCorpus(n, Provenance.BUILT_IN, graphs=tuple(sorted(found.values(), key=_sort_key)))


def _stream_external(path: Path, n: int) -> Iterator[Graph]:
    dedup = n <= get_limits().canonical_cap
    seen = set()
    repeats = 0
    for line_number, graph in read_graph6_file(path):
        if graph.n != n:
            raise MalformedInput(f"граф порядка {graph.n}, а корпус объявлен порядка {n}", path, line_number)
        if not is_connected(graph):
            raise MalformedInput("несвязный граф в корпусе связных графов", path, line_number)
        if dedup:
            key = canonical_key(graph)
            if key in seen:
                repeats += 1
                continue
            seen.add(key)
        yield graph
    if repeats:
        logger.warning(f" - В {path} пропущено изоморфных повторов: {repeats}")


def corpus_keys(corpus: GraphCorpus) -> List[str]:
    """Канонические ключи графов корпуса в порядке выдачи."""
    return [canonical_key(graph).decode("ascii") for graph in corpus]
