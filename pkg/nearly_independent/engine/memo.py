from typing import Dict, Optional, Tuple

from loguru import logger

Pair = Tuple[int, int]


class MemoTable:
    """
    Кэш пар (σ₀, σ₁) для индуцированных подграфов одного корневого графа.

    Ключ — маска вершин корня, задающая подграф; таблица живёт в пределах
    одного вычисления и не разделяется между процессами.
    """

    def __init__(self, enabled: bool = True):
        self.enabled = enabled
        self.hits = 0
        self.misses = 0
        self._entries: Dict[int, Pair] = {}
        self._root: Optional[Tuple[int, ...]] = None

    def bind(self, rows: Tuple[int, ...]) -> None:
        """Привязывает таблицу к корневому графу; записи другого корня были бы неверны."""
        if self._root is None:
            self._root = rows
        elif self._root != rows:
            raise ValueError("MemoTable уже используется для другого графа")

    def get(self, mask: int) -> Optional[Pair]:
        if not self.enabled:
            return None
        pair = self._entries.get(mask)
        if pair is None:
            self.misses += 1
        else:
            self.hits += 1
        return pair

    def put(self, mask: int, pair: Pair) -> None:
        if not self.enabled:
            return
        known = self._entries.setdefault(mask, pair)
        if known != pair:
            raise AssertionError(f"Запись кэша для {mask:#x} изменилась: {known} → {pair}")

    def __len__(self) -> int:
        return len(self._entries)

    def log_stats(self) -> None:
        logger.debug(f" - Кэш σ: {len(self._entries)} записей, {self.hits} попаданий, {self.misses} промахов")
