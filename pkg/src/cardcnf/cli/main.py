"""Main CLI entry point for cardcnf."""

import logging
from typing import Optional

import typer

from cardcnf import __version__
from cardcnf.cli import bench, check_pc, circuit, count, encode, instance, verify
from cardcnf.cli.common import is_json_output, output_json, set_json_output
from cardcnf.utils.config import get_config

app = typer.Typer(
    name="cardcnf",
    help="CNF encodings of at-most-one and at-most-k cardinality constraints.",
    no_args_is_help=True,
)


def version_callback(value: bool) -> None:
    """Print version and exit."""
    if value:
        typer.echo(f"cardcnf version {__version__}")
        raise typer.Exit()


@app.callback()
def main(
    version: Optional[bool] = typer.Option(
        None,
        "--version",
        "-v",
        callback=version_callback,
        is_eager=True,
        help="Show version and exit.",
    ),
    json_output: bool = typer.Option(
        False,
        "--json",
        "-j",
        help="Output results as JSON.",
    ),
    log_level: Optional[str] = typer.Option(
        None,
        "--log-level",
        help="Logging level (default from CARDCNF_LOG_LEVEL or WARNING).",
    ),
) -> None:
    """cardcnf - build, verify, count and benchmark cardinality encodings."""
    set_json_output(json_output)
    level = (log_level or get_config().log_level).upper()
    logging.basicConfig(
        level=getattr(logging, level, logging.WARNING),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )


app.command("encode")(encode.encode)
app.command("verify")(verify.verify)
app.command("check-pc")(check_pc.check_pc)
app.command("count")(count.count)
app.command("gen-instance")(instance.gen_instance)
app.command("bench")(bench.bench)
app.command("circuit-audit")(circuit.circuit_audit)

__all__ = ["app", "is_json_output", "output_json", "set_json_output"]


if __name__ == "__main__":
    app()
