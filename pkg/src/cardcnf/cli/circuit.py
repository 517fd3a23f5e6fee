"""The circuit-audit command: build a threshold circuit and report its structure."""

from collections.abc import Callable
from pathlib import Path
from typing import Any, Optional

import numpy as np
import typer

from cardcnf.circuits.circuit import Circuit, audit, dump_circuit, evaluate_batch
from cardcnf.circuits.threshold import build_s2, build_t2_multipartite, build_t2_product, build_t3
from cardcnf.cli.common import EXIT_FAILURE, EXIT_USAGE, fail, report
from cardcnf.utils.output import format_pairs

# name: (builder, threshold of the last output)
BUILDERS: dict[str, tuple[Callable[[int], Circuit], int]] = {
    "t2-multipartite": (build_t2_multipartite, 2),
    "t2-product": (build_t2_product, 2),
    "s2": (build_s2, 2),
    "t3": (build_t3, 3),
}


def sample_mismatches(circuit: Circuit, threshold: int, samples: int, seed: int) -> int:
    """Random assignments on which the last output differs from weight >= threshold."""
    rng = np.random.default_rng(seed)
    n = circuit.num_inputs
    # Sparse rows keep the weights near the threshold.
    matrix = rng.random((samples, n)) < min(1.0, (threshold + 1) / max(n, 1))
    got = evaluate_batch(circuit, matrix)[:, -1]
    expected = matrix.sum(axis=1) >= threshold
    return int(np.count_nonzero(got != expected))


def circuit_audit(
    n: int = typer.Option(..., "--n", "-n", help="Number of inputs"),
    kind: str = typer.Option(
        "t2-multipartite", "--circuit", "-c", help=f"One of {', '.join(BUILDERS)}"
    ),
    dump: Optional[Path] = typer.Option(None, "--dump", help="Write the gate list here"),
    samples: int = typer.Option(0, "--samples", help="Random assignments to check"),
    seed: int = typer.Option(0, "--seed", help="Seed for the samples"),
) -> None:
    """Report gate count, monotonicity and AND depth of a threshold circuit.

    With --samples the last output is compared against the threshold
    predicate on random inputs; any disagreement exits 1.
    """
    if kind not in BUILDERS:
        choices = ", ".join(BUILDERS)
        fail("usage", f"unknown circuit '{kind}'", EXIT_USAGE, f"choose from {choices}")
    if n < 1:
        fail("usage", f"n must be positive, got {n}", EXIT_USAGE)
    builder, threshold = BUILDERS[kind]
    circuit = builder(n)
    summary = audit(circuit)

    result: dict[str, Any] = {"circuit": kind, "n": n, **summary.to_dict()}
    if dump is not None:
        try:
            dump.write_text(dump_circuit(circuit), encoding="utf-8")
        except OSError as e:
            fail("io", f"cannot write {dump}: {e}", EXIT_FAILURE)
        result["dump"] = str(dump)
    if samples > 0:
        result["samples"] = samples
        result["mismatches"] = sample_mismatches(circuit, threshold, samples, seed)
        if result["mismatches"]:
            fail(
                "mismatch",
                f"{kind} disagrees with the threshold-{threshold} predicate",
                EXIT_FAILURE,
                lines=[format_pairs(result)],
                result=result,
            )
    report("circuit-audit", result, [format_pairs(result)])
