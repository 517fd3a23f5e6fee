"""The gen-instance command: write a benchmark family instance as DIMACS."""

from pathlib import Path

import typer

from cardcnf.cli.common import EXIT_FAILURE, EXIT_USAGE, fail, parse_params_option, report
from cardcnf.cnf.dimacs import write_formula
from cardcnf.errors import CardCnfError
from cardcnf.instances.families import VARIANTS, InstanceSpec, generate_instance
from cardcnf.utils.output import format_pairs


def gen_instance(
    family: str = typer.Option(..., "--family", "-f", help=f"One of {', '.join(VARIANTS)}"),
    size: int = typer.Option(..., "--size", "-n", help="n for L and D, machines for M"),
    k: int = typer.Option(2, "--k", "-k", help="Cardinality bound"),
    encoder: str = typer.Option("seqcounter", "--encoder", "-e", help="AMK encoder under test"),
    params: str = typer.Option("", "--params", help="Encoder params as key=value,..."),
    seed: int = typer.Option(0, "--seed", help="Generator seed"),
    out: Path = typer.Option(..., "--out", "-o", help="DIMACS output path"),
) -> None:
    """Generate an instance of family L, M or D.

    The DIMACS file carries `c family`, `c expected`, `c seed`, `c encoder`,
    `c k` and `c size` comments.
    """
    try:
        spec = InstanceSpec.from_variant(
            family,
            size,
            k=k,
            encoder=encoder,
            seed=seed,
            encoder_params=parse_params_option(params),
        )
        instance = generate_instance(spec)
        write_formula(instance.formula, out, instance.comments())
    except (CardCnfError, ValueError) as e:
        fail("instance", str(e), EXIT_USAGE)
    except OSError as e:
        fail("io", f"cannot write {out}: {e}", EXIT_FAILURE)

    formula = instance.formula
    result = {
        **instance.comments(),
        "vars": formula.max_var,
        "clauses": len(formula),
        "out": str(out),
    }
    counts = {"vars": formula.max_var, "clauses": len(formula), "expected": instance.expected.value}
    report("gen-instance", result, [format_pairs(counts)])
