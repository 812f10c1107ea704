from pathlib import Path
from typing import Optional

import typer
from loguru import logger

from nearly_independent.commands.inputs import Method, OutputFormat, build_config, input_errors, iter_input_graphs
from nearly_independent.engine.sigma import sigma as count_sigma
from nearly_independent.engine.sigma import sigma_distribution
from nearly_independent.source.messages import FAMILY_NAMES_HELP


def sigma(
        graph6: Optional[Path] = typer.Option(None, "--graph6", help="Файл graph6 (по графу в строке), '-' — stdin"),
        edges: Optional[Path] = typer.Option(None, "--edges", help="Файл со списком рёбер"),
        family: Optional[str] = typer.Option(None, "--family", help=f"Семейство: {FAMILY_NAMES_HELP}"),
        n: Optional[int] = typer.Option(None, "--n", help="Порядок графа семейства"),
        r: Optional[int] = typer.Option(None, "--r", help="Размер доли X для bipartite"),
        s: Optional[int] = typer.Option(None, "--s", help="Размер доли Y для bipartite"),
        k: int = typer.Option(1, "--k", help="Число индуцированных рёбер"),
        all_k: bool = typer.Option(False, "--all-k", help="Напечатать σ_0, …, σ_m полным перебором"),
        method: Method = typer.Option(Method.AUTO, "--method", help="auto: рекурсия для k ≤ 1, иначе перебор"),
        output: OutputFormat = typer.Option(OutputFormat.HUMAN, "--format", help="human или records"),
):
    """Команда: nearly-independent sigma — печатает σ_k для каждого входного графа."""
    config = build_config(
        subcommand="sigma", graph6=graph6, edges=edges, family=family, n=n, r=r, s=s,
        k=k, all_k=all_k, method=method, output=output,
    )

    with input_errors():
        for label, graph in iter_input_graphs(config):
            if config.all_k:
                distribution = sigma_distribution(graph)
                if config.output is OutputFormat.RECORDS:
                    typer.echo(f"graph6={label} distribution={','.join(map(str, distribution))}")
                else:
                    typer.echo(" ".join(map(str, distribution)))
                continue

            result = count_sigma(graph, config.k, method=config.method.value)
            logger.debug(f" - σ_{result.k}({label}) = {result.value} ({result.method.value})")
            if config.output is OutputFormat.RECORDS:
                typer.echo(f"graph6={label} k={result.k} sigma={result.value} method={result.method.value}")
            else:
                typer.echo(str(result.value))
