"""The count command: clause and auxiliary counts without storing clauses."""

from typing import Any, Optional

import typer

from cardcnf.bench.reference import REFERENCE_ENCODERS, REFERENCE_K, compare, reference_sizes
from cardcnf.cli.common import EXIT_USAGE, fail, parse_int_list, parse_params_option, report
from cardcnf.encoders.registry import count_encoding
from cardcnf.errors import CardCnfError
from cardcnf.utils.output import format_pairs

DEFAULT_REFERENCE_SIZES = "200000,1000000,3000000"


def _row_line(row: dict[str, Any]) -> str:
    pairs = dict(row)
    for key in ("clause_deviation", "aux_deviation"):
        if key in pairs:
            pairs[key] = f"{pairs[key]:+.2%}"
    return format_pairs(pairs)


def count(
    encoders: str = typer.Option(
        ",".join(REFERENCE_ENCODERS), "--encoders", "-e", help="Comma-separated encoder names"
    ),
    sizes: Optional[str] = typer.Option(
        None, "--n", "-n", help="Comma-separated input counts"
    ),
    k: int = typer.Option(REFERENCE_K, "--k", "-k", help="Cardinality bound"),
    params: str = typer.Option("", "--params", help="Encoder params as key=value,..."),
    reference: bool = typer.Option(
        False, "--reference", help="Show published counts and relative deviations"
    ),
) -> None:
    """Count clauses and auxiliaries for each encoder and n.

    With --reference (k = 2) the published clause and auxiliary counts are
    printed next to the emitted ones. Rows without a published value show
    the emitted counts only.
    """
    try:
        names = [name.strip() for name in encoders.split(",") if name.strip()]
        ns = parse_int_list(sizes or DEFAULT_REFERENCE_SIZES)
        raw = parse_params_option(params)
        rows: list[dict[str, Any]] = []
        for name in names:
            for n in ns:
                stats = count_encoding(name, n, k, raw)
                row = compare(name, n, stats.num_clauses, stats.num_aux, k)
                if not reference:
                    row = {key: row[key] for key in ("encoder", "n", "clauses", "aux")}
                rows.append(row)
    except typer.BadParameter as e:
        fail("usage", str(e), EXIT_USAGE)
    except CardCnfError as e:
        fail("encoding", str(e), EXIT_USAGE)

    lines = [_row_line(row) for row in rows]
    if reference and k == REFERENCE_K:
        missing = sorted(set(ns) - set(reference_sizes()))
        if missing:
            lines.append(f"no published row for n={','.join(map(str, missing))}")
    report("count", {"k": k, "rows": rows}, lines)
