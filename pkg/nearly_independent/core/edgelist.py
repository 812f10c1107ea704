"""
Текстовый формат списка рёбер: первая значащая строка — n, далее строки "u v"
с номерами от 0. Строки, начинающиеся с '#', и пустые строки пропускаются.
"""
from pathlib import Path
from typing import Iterable, List, Optional

from nearly_independent.core.graph import Graph, add_edge
from nearly_independent.source.errors import GraphError, MalformedInput, Unsupported
from nearly_independent.source.settings import MAX_ORDER


def parse_edge_list(lines: Iterable[str], path: Optional[Path] = None) -> Graph:
    rows: Optional[List[int]] = None
    for line_number, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        try:
            if rows is None:
                if len(tokens) != 1:
                    raise ValueError("первая строка должна содержать только число вершин")
                n = int(tokens[0])
                if not 0 <= n <= MAX_ORDER:
                    raise Unsupported(f"число вершин должно быть в диапазоне 0..{MAX_ORDER}, получено {n}")
                rows = [0] * n
                continue
            if len(tokens) != 2:
                raise ValueError(f"ожидалась пара вершин 'u v', получено {line!r}")
            add_edge(rows, int(tokens[0]), int(tokens[1]))
        except (ValueError, GraphError, Unsupported) as err:
            raise MalformedInput(str(err), path=path, line_number=line_number) from err
    if rows is None:
        raise MalformedInput("нет строки с числом вершин", path=path)
    return Graph._trusted(rows)


def read_edge_list(path: Path) -> Graph:
    path = Path(path)
    with path.open(encoding="utf-8") as f:
        return parse_edge_list(f, path=path)


def to_edge_list(graph: Graph) -> str:
    lines = [str(graph.n)]
    lines.extend(f"{u} {v}" for u, v in graph.edges())
    return "\n".join(lines) + "\n"
