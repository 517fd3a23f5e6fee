"""The check-pc command: search for propagation-completeness counterexamples."""

from pathlib import Path
from typing import Optional

import typer

from cardcnf.cli.common import EXIT_FAILURE, EXIT_USAGE, fail, report
from cardcnf.cli.verify import load_encoding
from cardcnf.errors import CardCnfError
from cardcnf.utils.output import format_pairs
from cardcnf.verify.completeness import check_propagation_complete


def check_pc(
    in_path: Optional[Path] = typer.Option(None, "--in", "-i", help="DIMACS file to check"),
    encoder: Optional[str] = typer.Option(None, "--encoder", "-e", help="Encoder name"),
    n: Optional[int] = typer.Option(None, "--n", "-n", help="Number of inputs"),
    k: Optional[int] = typer.Option(None, "--k", "-k", help="Bound for AMK encoders"),
    params: str = typer.Option("", "--params", help="Encoder params as key=value,..."),
    prefixes: Optional[int] = typer.Option(
        None, "--prefixes", help="Random prefixes to test (default from config)"
    ),
    seed: int = typer.Option(0, "--seed", help="Seed for the random prefixes"),
) -> None:
    """Check that unit propagation derives every entailed input literal.

    Exits 0 when no counterexample is found and 1 with the failing prefix
    otherwise.
    """
    try:
        encoding = load_encoding(in_path, encoder, n, k, params)
        result = check_propagation_complete(encoding, prefixes, seed)
    except typer.BadParameter as e:
        fail("usage", str(e), EXIT_USAGE)
    except (CardCnfError, OSError) as e:
        fail("encoding", str(e), EXIT_USAGE)

    data = result.to_dict()
    summary = {"encoder": encoding.encoder_name, "checked": result.checked}
    if result.passed:
        verdict = "complete" if result.exhaustive else "no-counterexample"
        report("check-pc", data, [f"PASS {format_pairs(summary)} verdict={verdict}"])
        return

    prefix = ",".join(map(str, result.counterexample or []))
    fail(
        "not-propagation-complete",
        "unit propagation misses an entailed literal",
        EXIT_FAILURE,
        lines=[
            "FAIL " + format_pairs(summary),
            f"counterexample prefix={prefix} missing={result.missing}",
        ],
        result=data,
    )
