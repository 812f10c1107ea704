from pathlib import Path
from typing import Optional

import typer
from rich.console import Console
from rich.table import Table

from nearly_independent.commands.inputs import OutputFormat, build_config, input_errors, iter_input_graphs
from nearly_independent.engine.goodness import GoodnessReport, is_good_graph
from nearly_independent.source.messages import FAMILY_NAMES_HELP


def _record(label: str, report: GoodnessReport) -> str:
    bad = ",".join(f"{v.u}-{v.v}/{v.witness}" for v in report.edges if not v.good)
    return (
        f"graph6={label} good={int(report.is_good_graph)} connected={int(report.connected)} "
        f"edges={len(report.edges)} bad={bad}"
    )


def _table(label: str, report: GoodnessReport) -> Table:
    verdict = "хороший" if report.is_good_graph else "не хороший"
    table = Table(title=f"{label}: {verdict}", title_justify="left")
    table.add_column("ребро")
    table.add_column("хорошее")
    table.add_column("непокрытая вершина", justify="right")
    for edge in report.edges:
        table.add_row(
            f"{edge.u}-{edge.v}",
            "[green]да[/green]" if edge.good else "[red]нет[/red]",
            "" if edge.witness is None else str(edge.witness),
        )
    return table


def good(
        graph6: Optional[Path] = typer.Option(None, "--graph6", help="Файл graph6 (по графу в строке), '-' — stdin"),
        edges: Optional[Path] = typer.Option(None, "--edges", help="Файл со списком рёбер"),
        family: Optional[str] = typer.Option(None, "--family", help=f"Семейство: {FAMILY_NAMES_HELP}"),
        n: Optional[int] = typer.Option(None, "--n", help="Порядок графа семейства"),
        r: Optional[int] = typer.Option(None, "--r", help="Размер доли X для bipartite"),
        s: Optional[int] = typer.Option(None, "--s", help="Размер доли Y для bipartite"),
        output: OutputFormat = typer.Option(OutputFormat.HUMAN, "--format", help="human или records"),
):
    """Команда: nearly-independent good — отчёт о хороших рёбрах каждого входного графа."""
    config = build_config(subcommand="good", graph6=graph6, edges=edges, family=family, n=n, r=r, s=s, output=output)
    console = Console()

    with input_errors():
        for label, graph in iter_input_graphs(config):
            report = is_good_graph(graph)
            if config.output is OutputFormat.RECORDS:
                typer.echo(_record(label, report))
            else:
                console.print(_table(label, report))
