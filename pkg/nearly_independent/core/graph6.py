"""
Формат graph6: байт размера (n + 63), затем биты верхнего треугольника матрицы
смежности по столбцам — (0,1), (0,2), (1,2), (0,3), … — порциями по 6 бит со
сдвигом 63, последняя порция дополняется нулями.
"""
from pathlib import Path
from typing import Iterable, Iterator, Optional, Tuple

from nearly_independent.core.graph import Graph
from nearly_independent.source.errors import MalformedGraph6, MalformedInput, Unsupported
from nearly_independent.source.settings import MAX_ORDER

GRAPH6_HEADER = ">>graph6<<"
_OFFSET = 63
_LAST_CHAR = 126


def _payload_length(n: int) -> int:
    return (n * (n - 1) // 2 + 5) // 6


def to_graph6(graph: Graph) -> str:
    n = graph.n
    if n > MAX_ORDER:
        raise Unsupported(f"graph6 с однобайтовым размером поддерживает n ≤ {MAX_ORDER}, получено {n}")
    rows = graph.rows
    chars = [chr(n + _OFFSET)]
    chunk = 0
    filled = 0
    for j in range(1, n):
        column = rows[j]
        for i in range(j):
            chunk = chunk << 1 | (column >> i & 1)
            filled += 1
            if filled == 6:
                chars.append(chr(chunk + _OFFSET))
                chunk = 0
                filled = 0
    if filled:
        chars.append(chr((chunk << (6 - filled)) + _OFFSET))
    return "".join(chars)


def from_graph6(text: str) -> Graph:
    line = text.strip()
    if line.startswith(GRAPH6_HEADER):
        line = line[len(GRAPH6_HEADER):]
    if not line:
        raise MalformedGraph6("Пустая строка graph6")
    for position, char in enumerate(line):
        if not _OFFSET <= ord(char) <= _LAST_CHAR:
            raise MalformedGraph6(f"Символ {char!r} в позиции {position} вне диапазона 63..126")
    if ord(line[0]) == _LAST_CHAR:
        raise Unsupported(f"Многобайтовый размер graph6 (n > {MAX_ORDER}) не поддерживается")
    n = ord(line[0]) - _OFFSET
    payload = line[1:]
    expected = _payload_length(n)
    if len(payload) < expected:
        raise MalformedGraph6(f"Данные обрезаны: ожидалось {expected} символов для n={n}, получено {len(payload)}")
    if len(payload) > expected:
        raise MalformedGraph6(f"Лишние символы: ожидалось {expected} символов для n={n}, получено {len(payload)}")

    rows = [0] * n
    stream = _bit_stream(payload)
    for j in range(1, n):
        for i in range(j):
            if next(stream):
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    if any(stream):
        raise MalformedGraph6("Ненулевые биты выравнивания в конце строки graph6")
    return Graph._trusted(rows)


def _bit_stream(payload: str) -> Iterator[int]:
    for char in payload:
        value = ord(char) - _OFFSET
        for shift in range(5, -1, -1):
            yield value >> shift & 1


def iter_graph6(lines: Iterable[str], path: Optional[Path] = None) -> Iterator[Tuple[int, Graph]]:
    """Построчно разбирает поток graph6: пары (номер строки, граф). Пустые строки пропускаются."""
    for line_number, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        try:
            yield line_number, from_graph6(line)
        except (MalformedGraph6, Unsupported) as err:
            raise MalformedInput(str(err), path=path, line_number=line_number) from err


def read_graph6_file(path: Path) -> Iterator[Tuple[int, Graph]]:
    """Потоковое чтение файла graph6 с постоянным расходом памяти."""
    with Path(path).open(encoding="ascii", errors="replace") as f:
        yield from iter_graph6(f, path=Path(path))
