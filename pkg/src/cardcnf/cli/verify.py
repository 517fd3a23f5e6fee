"""The verify command: check an encoding against its cardinality predicate."""

from pathlib import Path
from typing import Optional

import typer

from cardcnf.cli.common import EXIT_FAILURE, EXIT_USAGE, fail, parse_params_option, report
from cardcnf.cli.encode import resolve_bound
from cardcnf.cnf.dimacs import read_dimacs
from cardcnf.cnf.encoding import Encoding
from cardcnf.encoders.registry import build_encoding
from cardcnf.errors import CardCnfError, DimacsError, StrategyError
from cardcnf.utils.output import format_pairs
from cardcnf.verify.oracle import EXHAUSTIVE_LIMIT, Strategy, check_encoding_correct


def load_encoding(
    in_path: Path | None,
    encoder: str | None,
    n: int | None,
    k: int | None,
    params: str,
) -> Encoding:
    """Read --in, or build from --encoder/--n/--k.

    Raises:
        typer.BadParameter: If neither source is given.
        DimacsError: On a malformed file.
        EncodingError: On a bad encoder invocation.
    """
    if in_path is not None:
        return read_dimacs(in_path)
    if encoder is None or n is None:
        raise typer.BadParameter("give --in PATH or --encoder NAME with --n N")
    bound = resolve_bound("amk" if k is not None else None, encoder, k)
    return build_encoding(encoder, n, bound, parse_params_option(params))


def verify(
    in_path: Optional[Path] = typer.Option(None, "--in", "-i", help="DIMACS file to check"),
    encoder: Optional[str] = typer.Option(None, "--encoder", "-e", help="Encoder name"),
    n: Optional[int] = typer.Option(None, "--n", "-n", help="Number of inputs"),
    k: Optional[int] = typer.Option(None, "--k", "-k", help="Bound for AMK encoders"),
    params: str = typer.Option("", "--params", help="Encoder params as key=value,..."),
    strategy: Optional[str] = typer.Option(
        None,
        "--strategy",
        "-s",
        help="exhaustive or weight-window (default: exhaustive up to "
        f"{EXHAUSTIVE_LIMIT} inputs)",
    ),
    seed: int = typer.Option(0, "--seed", help="Seed for sampled assignments"),
) -> None:
    """Check that an encoding is satisfiable exactly under the allowed inputs.

    Exits 0 on pass, 1 with a witness assignment on mismatch, 2 when the
    strategy is infeasible.
    """
    try:
        encoding = load_encoding(in_path, encoder, n, k, params)
        if strategy is None:
            chosen = (
                Strategy.EXHAUSTIVE
                if encoding.num_inputs <= EXHAUSTIVE_LIMIT
                else Strategy.WEIGHT_WINDOW
            )
        else:
            try:
                chosen = Strategy(strategy)
            except ValueError:
                raise typer.BadParameter(
                    f"unknown strategy '{strategy}' (expected exhaustive or weight-window)"
                ) from None
        result = check_encoding_correct(encoding, chosen, seed=seed)
    except typer.BadParameter as e:
        fail("usage", str(e), EXIT_USAGE)
    except StrategyError as e:
        fail("strategy", str(e), EXIT_USAGE)
    except DimacsError as e:
        fail("dimacs", str(e), EXIT_USAGE)
    except CardCnfError as e:
        fail("encoding", str(e), EXIT_USAGE)
    except OSError as e:
        fail("io", str(e), EXIT_USAGE)

    data = result.to_dict(encoding.input_vars)
    data.update(encoder=encoding.encoder_name, constraint=str(encoding.constraint))
    summary = {
        "strategy": chosen.value,
        "checked": result.checked_assignments,
        "encoder": encoding.encoder_name,
        "constraint": str(encoding.constraint).replace(" ", ""),
    }
    if result.passed:
        report("verify", data, ["PASS " + format_pairs(summary)])
        return

    witness = data["witness"]
    witness_pairs = {
        "true_inputs": ",".join(map(str, witness["true_inputs"])) or "-",
        "weight": witness["weight"],
        "expected": witness["expected"],
        "got": witness["got"],
    }
    fail(
        "mismatch",
        f"encoding disagrees with {encoding.constraint} on an input assignment",
        EXIT_FAILURE,
        lines=["FAIL " + format_pairs(summary), "witness " + format_pairs(witness_pairs)],
        result=data,
    )
