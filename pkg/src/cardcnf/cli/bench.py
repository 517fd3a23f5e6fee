"""The bench command: run the benchmark matrix against an external solver."""

from pathlib import Path
from typing import Optional

import typer

from cardcnf.bench.runner import resolve_solver, run_matrix
from cardcnf.cli.common import EXIT_USAGE, fail, parse_int_list, parse_params_option, report
from cardcnf.errors import CardCnfError
from cardcnf.instances.families import VARIANTS

SUMMARY_COLUMNS = ("family", "encoder", "n", "seed", "status", "wall_time_ms", "clause_count")


def _split(text: str) -> list[str]:
    return [part.strip() for part in text.split(",") if part.strip()]


def bench(
    family: str = typer.Option(
        ..., "--family", "-f", help=f"Comma-separated variants: {', '.join(VARIANTS)}"
    ),
    encoders: str = typer.Option(
        "seqcounter", "--encoders", "-e", help="Comma-separated encoder names"
    ),
    sizes: str = typer.Option(..., "--sizes", "-n", help="Comma-separated sizes"),
    seeds: str = typer.Option("0", "--seeds", help="Comma-separated seeds"),
    k: int = typer.Option(2, "--k", "-k", help="Cardinality bound"),
    params: str = typer.Option("", "--params", help="Encoder params as key=value,..."),
    solver: Optional[str] = typer.Option(
        None, "--solver", help="Solver command (CARDCNF_SOLVER overrides)"
    ),
    timeout: Optional[int] = typer.Option(None, "--timeout", help="Per-run limit in ms"),
    repeats: Optional[int] = typer.Option(None, "--repeats", help="Runs per cell"),
    parallel: int = typer.Option(0, "--parallel", help="Concurrent cells (0 = sequential)"),
    csv_path: Optional[Path] = typer.Option(None, "--csv", help="CSV output path"),
) -> None:
    """Generate, encode and solve every family x encoder x size x seed cell.

    Failed cells become ERROR rows; the run continues.
    """
    if not resolve_solver(solver):
        fail(
            "usage",
            "no solver configured",
            EXIT_USAGE,
            "pass --solver CMD or set CARDCNF_SOLVER",
        )
    families = _split(family)
    unknown = [name for name in families if name not in VARIANTS]
    if unknown:
        fail("usage", f"unknown family {', '.join(unknown)}", EXIT_USAGE)
    if repeats is not None and repeats < 1:
        fail("usage", f"--repeats must be positive, got {repeats}", EXIT_USAGE)

    try:
        records = run_matrix(
            families,
            _split(encoders),
            parse_int_list(sizes),
            parse_int_list(seeds),
            solver=solver,
            timeout_ms=timeout,
            k=k,
            repeats=repeats,
            parallel=parallel,
            csv_path=csv_path,
            encoder_params=parse_params_option(params),
        )
    except typer.BadParameter as e:
        fail("usage", str(e), EXIT_USAGE)
    except CardCnfError as e:
        fail("bench", str(e), EXIT_USAGE)

    rows = [record.to_row() for record in records]
    lines = [" ".join(f"{col}={row[col]}" for col in SUMMARY_COLUMNS) for row in rows]
    mismatches = sum(record.mismatch for record in records)
    lines.append(f"cells={len(records)} mismatches={mismatches}")
    if csv_path is not None:
        lines.append(f"csv={csv_path}")
    report("bench", {"records": rows, "csv": str(csv_path) if csv_path else None}, lines)
