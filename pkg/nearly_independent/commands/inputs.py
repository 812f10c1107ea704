import sys
from contextlib import contextmanager
from enum import Enum
from pathlib import Path
from typing import Iterator, Optional, Tuple

import typer
from loguru import logger
from pydantic import BaseModel, Field, ValidationError, model_validator

from nearly_independent.core.edgelist import read_edge_list
from nearly_independent.core.families import family
from nearly_independent.core.graph import Graph
from nearly_independent.core.graph6 import iter_graph6, to_graph6
from nearly_independent.source.errors import NearlyIndependentError
from nearly_independent.source.messages import INPUT_SOURCE_HINT
from nearly_independent.source.settings import DEFAULT_AUDIT_FRACTION

EXIT_FAILED = 1
EXIT_USAGE = 2


class Method(str, Enum):
    AUTO = "auto"
    BRUTE = "brute"
    RECURSIVE = "recursive"


class OutputFormat(str, Enum):
    HUMAN = "human"
    RECORDS = "records"


class CliConfig(BaseModel):
    """Проверенные параметры одного вызова CLI."""

    subcommand: str
    graph6: Optional[Path] = None
    edges: Optional[Path] = None
    family: Optional[str] = None
    n: Optional[int] = Field(default=None, ge=0)
    r: Optional[int] = None
    s: Optional[int] = None
    k: int = Field(default=1, ge=0)
    all_k: bool = False
    min_n: Optional[int] = Field(default=None, ge=1)
    max_n: Optional[int] = Field(default=None, ge=1)
    method: Method = Method.AUTO
    workers: int = Field(default=1, ge=1)
    output: OutputFormat = OutputFormat.HUMAN
    audit_fraction: float = Field(default=DEFAULT_AUDIT_FRACTION, ge=0.0, le=1.0)

    @model_validator(mode="after")
    def _check(self) -> "CliConfig":
        if self.subcommand in ("sigma", "good"):
            sources = [self.graph6 is not None, self.edges is not None, self.family is not None]
            if sum(sources) != 1:
                raise ValueError(INPUT_SOURCE_HINT)
        if self.min_n is not None and self.max_n is not None and self.min_n > self.max_n:
            raise ValueError(f"Пустой диапазон порядков: {self.min_n}..{self.max_n}")
        return self

    def family_params(self) -> Tuple[int, ...]:
        if self.family == "k4-minus-edge":
            return ()
        if self.family == "bipartite":
            if self.r is None or self.s is None:
                if self.n is None or self.r is None:
                    raise ValueError("Для bipartite укажите --r и --s (или --r и --n)")
                return self.r, self.n - self.r
            return self.r, self.s
        if self.n is None:
            raise ValueError(f"Для семейства {self.family} укажите --n")
        return (self.n,)


@contextmanager
def input_errors():
    """Ошибки входных данных и параметров → сообщение в лог и код выхода 2."""
    try:
        yield
    except (NearlyIndependentError, OSError, ValidationError, ValueError) as err:
        logger.error(f" - {err}")
        raise typer.Exit(EXIT_USAGE)


def build_config(**values) -> CliConfig:
    with input_errors():
        return CliConfig(**values)


def iter_input_graphs(config: CliConfig) -> Iterator[Tuple[str, Graph]]:
    """Пары (подпись, граф) из выбранного источника; graph6 читается построчно."""
    if config.family is not None:
        graph = family(config.family, *config.family_params())
        yield to_graph6(graph), graph
    elif config.edges is not None:
        graph = read_edge_list(config.edges)
        yield to_graph6(graph), graph
    elif str(config.graph6) == "-":
        for _, graph in iter_graph6(sys.stdin, path=Path("<stdin>")):
            yield to_graph6(graph), graph
    else:
        with config.graph6.open(encoding="ascii", errors="replace") as f:
            for _, graph in iter_graph6(f, path=config.graph6):
                yield to_graph6(graph), graph
