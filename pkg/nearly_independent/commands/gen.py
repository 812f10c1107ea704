from typing import Optional

import typer

from nearly_independent.commands.inputs import build_config, input_errors, iter_input_graphs
from nearly_independent.core.graph6 import to_graph6
from nearly_independent.source.messages import FAMILY_NAMES_HELP
from nearly_independent.verifier.corpus import enumerate_connected


def gen(
        family: Optional[str] = typer.Option(None, "--family", help=f"Семейство: {FAMILY_NAMES_HELP}"),
        n: Optional[int] = typer.Option(None, "--n", help="Порядок графа семейства"),
        r: Optional[int] = typer.Option(None, "--r", help="Размер доли X для bipartite"),
        s: Optional[int] = typer.Option(None, "--s", help="Размер доли Y для bipartite"),
        connected: Optional[int] = typer.Option(None, "--connected", help="Все связные графы порядка N (N ≤ 8)"),
):
    """Команда: nearly-independent gen — печатает графы в формате graph6."""
    with input_errors():
        if (family is None) == (connected is None):
            raise ValueError("Укажите ровно одно из --family или --connected")
        if connected is not None:
            for graph in enumerate_connected(connected):
                typer.echo(to_graph6(graph))
            return
        config = build_config(subcommand="gen", family=family, n=n, r=r, s=s)
        for label, _ in iter_input_graphs(config):
            typer.echo(label)
