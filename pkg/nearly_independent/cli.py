import sys

import typer
from loguru import logger

from nearly_independent.commands import gen, good, sigma, verify
from nearly_independent.source.messages import APP_HELP, GEN_HELP, GOOD_HELP, SIGMA_HELP, VERIFY_HELP
from nearly_independent.source.settings import LOG_FORMAT


# Настройка loguru: результаты команд идут в stdout, журнал в stderr
def configure_logging(level: str = "INFO") -> None:
    logger.remove()
    logger.add(sink=sys.stderr, format=LOG_FORMAT, level=level)


configure_logging()


app = typer.Typer(
    name="nearly-independent",
    help=APP_HELP,
    no_args_is_help=True,
    rich_markup_mode="rich",
)


@app.callback()
def main(
        verbose: bool = typer.Option(False, "--verbose", "-v", help="Подробный журнал (DEBUG)"),
        quiet: bool = typer.Option(False, "--quiet", "-q", help="Только предупреждения и ошибки"),
):
    if verbose:
        configure_logging("DEBUG")
    elif quiet:
        configure_logging("WARNING")


app.command(help=SIGMA_HELP)(sigma.sigma)
app.command(help=GOOD_HELP)(good.good)
app.command(help=GEN_HELP)(gen.gen)
app.command(help=VERIFY_HELP)(verify.verify)


if __name__ == "__main__":
    app()
