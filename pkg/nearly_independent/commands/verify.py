from pathlib import Path
from typing import List, Optional

import typer
from loguru import logger
from rich.console import Console
from rich.table import Table

from nearly_independent.commands.inputs import (
    EXIT_FAILED,
    OutputFormat,
    build_config,
    input_errors,
)
from nearly_independent.source.messages import CLAUSE_TITLES, STATEMENT_TITLES
from nearly_independent.source.settings import DEFAULT_AUDIT_FRACTION, STATEMENTS
from nearly_independent.verifier.checks import verify_range
from nearly_independent.verifier.evaluate import VerifyOptions
from nearly_independent.verifier.report import VerificationReport

DEFAULT_MIN_ORDER = 3


def _print_human(reports: List[VerificationReport]) -> None:
    console = Console()
    table = Table(title="Проверка утверждений", title_justify="left")
    table.add_column("утверждение")
    table.add_column("n")
    table.add_column("графов", justify="right")
    table.add_column("вердикт")
    table.add_column("графы с равенством")
    for report in reports:
        verdict = "[green]PASS[/green]" if report.passed else "[red]FAIL[/red]"
        table.add_row(report.statement, report.n_range, str(report.graphs_checked), verdict, ", ".join(report.witnesses))
    console.print(table)

    for report in reports:
        console.print(f"[bold]{report.statement}[/bold]: {STATEMENT_TITLES.get(report.statement, '')}")
        for name, verdict in report.clauses.items():
            console.print(f"  {name}: {verdict.value}  [dim]{CLAUSE_TITLES.get(name, '')}[/dim]")
        for counterexample in report.counterexamples:
            console.print(f"  [red]контрпример[/red] {counterexample.to_field()}")


def verify(
        statement: str = typer.Option("all", "--statement", help=f"{', '.join(STATEMENTS)} или all"),
        min_n: Optional[int] = typer.Option(None, "--min-n", help=f"Наименьший порядок (по умолчанию {DEFAULT_MIN_ORDER})"),
        max_n: int = typer.Option(..., "--max-n", help="Наибольший порядок (≤ 8 для встроенного корпуса)"),
        corpus: Optional[Path] = typer.Option(None, "--corpus", help="Внешний корпус graph6 порядка --max-n"),
        workers: int = typer.Option(1, "--workers", help="Число процессов"),
        audit_fraction: float = typer.Option(DEFAULT_AUDIT_FRACTION, "--audit-fraction", help="Доля графов для сверки перебором"),
        output: OutputFormat = typer.Option(OutputFormat.HUMAN, "--format", help="human или records"),
        progress: bool = typer.Option(False, "--progress", help="Показывать прогресс вычислений"),
):
    """Команда: nearly-independent verify — проверяет утверждения на всех связных графах порядков min-n..max-n."""
    if min_n is None:
        min_n = max_n if corpus is not None else min(DEFAULT_MIN_ORDER, max_n)
    config = build_config(
        subcommand="verify", min_n=min_n, max_n=max_n, workers=workers,
        audit_fraction=audit_fraction, output=output,
    )

    with input_errors():
        if corpus is not None and config.min_n != config.max_n:
            raise ValueError("Внешний корпус содержит графы одного порядка: задайте --min-n равным --max-n")
        statements = list(STATEMENTS) if statement == "all" else [statement]
        options = VerifyOptions(workers=config.workers, audit_fraction=config.audit_fraction, progress=progress)
        reports = verify_range(statements, range(config.min_n, config.max_n + 1), options, corpus_path=corpus)

    for report in reports:
        logger.info(f" - {report.statement} n={report.n_range}: {report.verdict.value} за {report.elapsed:.2f} с")

    if config.output is OutputFormat.RECORDS:
        for report in reports:
            typer.echo(report.to_record())
    else:
        _print_human(reports)

    if not all(report.passed for report in reports):
        logger.warning(" - Найдены контрпримеры")
        raise typer.Exit(EXIT_FAILED)
    logger.success(" - Все утверждения подтверждены")
