"""Исключения пакета nearly_independent.

Библиотечные модули только бросают их; в коды выхода их превращает CLI.
"""
from pathlib import Path
from typing import Optional


class NearlyIndependentError(Exception):
    """Базовое исключение пакета."""


class GraphError(NearlyIndependentError):
    """Некорректный граф или операция над ним."""


class InvalidEdge(GraphError):
    pass


class InvalidVertex(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class EmptyGraph(GraphError):
    pass


class NotAnEdge(GraphError):
    pass


class InvalidFamilyParams(GraphError):
    pass


class FormatError(NearlyIndependentError):
    """Ошибка разбора входных данных."""


class MalformedGraph6(FormatError):
    pass


class MalformedInput(FormatError):
    """Ошибка во входном файле с указанием строки."""

    def __init__(self, message: str, path: Optional[Path] = None, line_number: Optional[int] = None):
        self.path = path
        self.line_number = line_number
        where = str(path) if path is not None else "<input>"
        if line_number is not None:
            where = f"{where}:{line_number}"
        super().__init__(f"{where}: {message}")


class Unsupported(NearlyIndependentError):
    """Запрос вне поддерживаемых пределов (порядок графа, метод, формат)."""


class TooLarge(NearlyIndependentError):
    """Превышен предел полного перебора."""


class NoGraphs(NearlyIndependentError):
    """После фильтрации не осталось ни одного графа."""
