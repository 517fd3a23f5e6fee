"""The encode command: build an encoding and write it as DIMACS."""

import logging
from pathlib import Path
from typing import Any, Optional

import typer

from cardcnf.cli.common import (
    EXIT_FAILURE,
    EXIT_USAGE,
    encoder_suggestion,
    fail,
    parse_params_option,
    report,
)
from cardcnf.cnf.dimacs import write_dimacs
from cardcnf.cnf.encoding import ConstraintKind
from cardcnf.encoders.registry import build_encoding, count_encoding, get_registry
from cardcnf.errors import CardCnfError
from cardcnf.utils.output import format_pairs

logger = logging.getLogger(__name__)


def resolve_bound(constraint: str | None, encoder: str, k: int | None) -> int | None:
    """Bound passed to the registry for a --constraint / --k combination.

    Raises:
        typer.BadParameter: On an unknown constraint or a missing AMK bound.
    """
    info = get_registry().require(encoder)
    if constraint is None:
        constraint = "amk" if info.kind is ConstraintKind.AMK and k is not None else "amo"
    constraint = constraint.lower()
    if constraint == "amo":
        if k not in (None, 1):
            raise typer.BadParameter(f"--constraint amo takes no --k other than 1, got {k}")
        return 1 if info.kind is ConstraintKind.AMK else None
    if constraint == "amk":
        if k is None:
            raise typer.BadParameter("--constraint amk needs --k")
        return k
    raise typer.BadParameter(f"unknown constraint '{constraint}' (expected amo or amk)")


def encoder_params(encoder: str, params: str, seed: int | None) -> dict[str, Any]:
    """Raw params from --params, plus --seed for encoders that take one."""
    raw: dict[str, Any] = parse_params_option(params)
    if seed is not None:
        if get_registry().require(encoder).param("seed") is not None:
            raw.setdefault("seed", seed)
        else:
            logger.debug(f"Encoder {encoder} is deterministic; ignoring --seed {seed}")
    return raw


def encode(
    encoder: str = typer.Option(..., "--encoder", "-e", help="Encoder name"),
    n: Optional[int] = typer.Option(None, "--n", "-n", help="Number of inputs"),
    constraint: Optional[str] = typer.Option(None, "--constraint", help="amo or amk"),
    k: Optional[int] = typer.Option(None, "--k", "-k", help="Bound for amk"),
    seed: Optional[int] = typer.Option(None, "--seed", help="Seed for randomized encoders"),
    params: str = typer.Option("", "--params", help="Encoder params as key=value,..."),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="DIMACS output path"),
) -> None:
    """Build an encoding; print `clauses=<c> aux=<a>` and optionally write DIMACS."""
    try:
        bound = resolve_bound(constraint, encoder, k)
        if n is None:
            raise typer.BadParameter("--n is required")
        raw = encoder_params(encoder, params, seed)
        if out is None:
            stats = count_encoding(encoder, n, bound, raw)
        else:
            encoding = build_encoding(encoder, n, bound, raw)
            write_dimacs(encoding, out)
            stats = encoding.stats
    except typer.BadParameter as e:
        fail("usage", str(e), EXIT_USAGE)
    except CardCnfError as e:
        suggestion = encoder_suggestion() if "unknown encoder" in str(e) else None
        fail("encoding", str(e), EXIT_USAGE, suggestion)
    except OSError as e:
        fail("io", f"cannot write {out}: {e}", EXIT_FAILURE)

    result = stats.to_dict()
    if out is not None:
        result["out"] = str(out)
    counts = {"clauses": stats.num_clauses, "aux": stats.num_aux}
    report("encode", result, [format_pairs(counts)])
