"""External solver harness.

The solver contract: the command reads a DIMACS file named by its last
argument and prints a status line starting with `s SATISFIABLE` or
`s UNSATISFIABLE`. Timing covers the solver subprocess only.
"""

import itertools
import logging
import os
import shlex
import subprocess
import tempfile
from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from cardcnf.bench.records import BenchRecord, RunStatus, write_csv
from cardcnf.cnf.dimacs import read_comments, write_formula
from cardcnf.errors import CardCnfError, SolverError
from cardcnf.instances.families import InstanceSpec, generate_instance
from cardcnf.utils.config import get_config
from cardcnf.utils.timing import Stopwatch

logger = logging.getLogger(__name__)

EXCERPT_CHARS = 200


@dataclass
class SolverRun:
    """Result of one solver invocation.

    Attributes:
        status: Parsed status
        wall_time_ms: Wall time around the subprocess
        output: Excerpt of the solver output when the status is ERROR
    """

    status: RunStatus
    wall_time_ms: float
    output: str = ""


def parse_status(stdout: str) -> RunStatus | None:
    """Find the status line in solver output."""
    for line in stdout.splitlines():
        if line.startswith("s SATISFIABLE"):
            return RunStatus.SAT
        if line.startswith("s UNSATISFIABLE"):
            return RunStatus.UNSAT
    return None


def solver_name(solver_command: str) -> str:
    """Short name of a solver command: the basename of its executable."""
    parts = shlex.split(solver_command)
    return Path(parts[0]).name if parts else ""


def run_solver(dimacs_path: str | Path, solver_command: str, timeout_ms: int) -> SolverRun:
    """Run the solver on one DIMACS file.

    Args:
        dimacs_path: File passed as the last argument.
        solver_command: Command line, split with shell rules.
        timeout_ms: Wall-clock limit; exceeding it yields TIMEOUT.

    Returns:
        SolverRun with the status and wall time.

    Raises:
        SolverError: If the command is empty or cannot be started.
    """
    argv = shlex.split(solver_command)
    if not argv:
        raise SolverError("no solver command configured (use --solver or CARDCNF_SOLVER)")
    argv.append(str(dimacs_path))

    watch = Stopwatch()
    try:
        with watch:
            result = subprocess.run(
                argv, capture_output=True, text=True, timeout=timeout_ms / 1000.0
            )
    except subprocess.TimeoutExpired:
        logger.debug(f"{argv[0]} timed out after {timeout_ms} ms on {dimacs_path}")
        return SolverRun(RunStatus.TIMEOUT, watch.elapsed_ms)
    except OSError as e:
        raise SolverError(f"cannot start solver '{argv[0]}': {e}") from e

    status = parse_status(result.stdout)
    if status is None:
        excerpt = (result.stdout + result.stderr).strip()[:EXCERPT_CHARS]
        logger.warning(f"No status line from {argv[0]} (exit {result.returncode}): {excerpt}")
        return SolverRun(RunStatus.ERROR, watch.elapsed_ms, excerpt)
    return SolverRun(status, watch.elapsed_ms)


def read_expected_status(path: str | Path) -> RunStatus | None:
    """The status promised by a `c expected <SAT|UNSAT>` comment, if any."""
    value = read_comments(path).get("expected")
    try:
        return RunStatus(value) if value else None
    except ValueError:
        return None


def resolve_solver(solver: str | None) -> str:
    """Pick the solver command: CARDCNF_SOLVER wins, then the flag, then config."""
    return os.environ.get("CARDCNF_SOLVER") or solver or get_config().solver_command


@dataclass(frozen=True)
class BenchCell:
    """One point of the benchmark matrix."""

    family: str
    encoder: str
    size: int
    seed: int
    k: int
    encoder_params: tuple[tuple[str, Any], ...] = ()


def _temp_path(temp_dir: str, cell: BenchCell) -> Path:
    Path(temp_dir).mkdir(parents=True, exist_ok=True)
    fd, name = tempfile.mkstemp(
        prefix=f"cardcnf-{cell.family}-{cell.encoder}-{cell.size}-{cell.seed}-",
        suffix=".cnf",
        dir=temp_dir,
    )
    os.close(fd)
    return Path(name)


def _error_record(
    cell: BenchCell, solver: str, parallel: bool, repeats: int, message: str
) -> BenchRecord:
    return BenchRecord(
        family=cell.family,
        params=dict(cell.encoder_params),
        encoder=cell.encoder,
        n=cell.size,
        k=cell.k,
        seed=cell.seed,
        clause_count=0,
        aux_count=0,
        solver_name=solver_name(solver),
        wall_time_ms=0.0,
        status=RunStatus.ERROR,
        repeats=repeats,
        parallel=parallel,
        output=message[:EXCERPT_CHARS],
    )


def run_cell(
    cell: BenchCell,
    solver: str,
    timeout_ms: int,
    repeats: int = 1,
    parallel: bool = False,
    temp_dir: str | None = None,
) -> BenchRecord:
    """Generate, encode, write and solve one cell.

    Failures are recorded as an ERROR record instead of raised. The
    reported wall time is the mean over repeats; the last status wins.
    """
    try:
        spec = InstanceSpec.from_variant(
            cell.family,
            cell.size,
            k=cell.k,
            encoder=cell.encoder,
            seed=cell.seed,
            encoder_params=dict(cell.encoder_params),
        )
        with Stopwatch() as encode_watch:
            instance = generate_instance(spec)
        formula = instance.formula
        path = _temp_path(temp_dir or get_config().temp_dir, cell)
        try:
            write_formula(formula, path, instance.comments())
            expected = read_expected_status(path)
            runs = [run_solver(path, solver, timeout_ms) for _ in range(repeats)]
        finally:
            path.unlink(missing_ok=True)
    except (CardCnfError, OSError) as e:
        logger.error(f"Cell {cell.family}/{cell.encoder} size={cell.size} seed={cell.seed}: {e}")
        return _error_record(cell, solver, parallel, repeats, str(e))

    status = runs[-1].status
    output = next((run.output for run in runs if run.status is RunStatus.ERROR), "")
    mismatch = False
    if expected is not None and status in (RunStatus.SAT, RunStatus.UNSAT):
        mismatch = status is not expected
    if mismatch and expected is not None:
        logger.warning(
            f"Status mismatch for {cell.family}/{cell.encoder} size={cell.size}: "
            f"expected {expected.value}, got {status.value}"
        )
    record = BenchRecord(
        family=cell.family,
        params=dict(cell.encoder_params),
        encoder=cell.encoder,
        n=cell.size,
        k=cell.k,
        seed=cell.seed,
        clause_count=len(formula),
        aux_count=len(formula.aux_vars),
        solver_name=solver_name(solver),
        wall_time_ms=sum(run.wall_time_ms for run in runs) / len(runs),
        status=status,
        expected=expected,
        mismatch=mismatch,
        encode_time_ms=encode_watch.elapsed_ms,
        repeats=repeats,
        parallel=parallel,
        output=output,
    )
    logger.info(
        f"Cell {cell.family}/{cell.encoder} size={cell.size} seed={cell.seed}: "
        f"{status.value} in {record.wall_time_ms:.1f} ms"
    )
    return record


def run_matrix(
    families: Sequence[str],
    encoders: Sequence[str],
    sizes: Sequence[int],
    seeds: Sequence[int],
    solver: str | None = None,
    timeout_ms: int | None = None,
    k: int = 2,
    repeats: int | None = None,
    parallel: int = 0,
    csv_path: str | Path | None = None,
    encoder_params: dict[str, Any] | None = None,
) -> list[BenchRecord]:
    """Run the Cartesian product families x encoders x sizes x seeds.

    Cells run one at a time unless `parallel` > 1, in which case up to that
    many cells run concurrently, each with its own temp file.

    Args:
        families: Family variants (L, L-sat, M, M-sat, D).
        encoders: Registry names of the AMK encoders under test.
        sizes: Instance sizes.
        seeds: Generator seeds.
        solver: Solver command; CARDCNF_SOLVER overrides it.
        timeout_ms: Per-run limit (default from config).
        k: Cardinality bound.
        repeats: Runs per cell (default from config).
        parallel: Worker count; 0 or 1 runs sequentially.
        csv_path: If given, the records are written there.
        encoder_params: Params passed to every encoder.

    Returns:
        One record per cell, in matrix order.

    Raises:
        SolverError: If no solver command is configured.
    """
    config = get_config()
    command = resolve_solver(solver)
    if not command:
        raise SolverError("no solver command configured (use --solver or CARDCNF_SOLVER)")
    timeout = timeout_ms if timeout_ms is not None else config.timeout_ms
    runs = repeats if repeats is not None else config.repeats
    params = tuple(sorted((encoder_params or {}).items()))
    cells = [
        BenchCell(family, encoder, size, seed, k, params)
        for family, encoder, size, seed in itertools.product(families, encoders, sizes, seeds)
    ]
    logger.info(f"Running {len(cells)} cells with {solver_name(command)}")

    concurrent = parallel > 1
    if concurrent:
        with ThreadPoolExecutor(max_workers=parallel) as pool:
            records = list(
                pool.map(lambda c: run_cell(c, command, timeout, runs, True), cells)
            )
    else:
        records = [run_cell(c, command, timeout, runs, False) for c in cells]

    if csv_path is not None:
        write_csv(records, csv_path)
    return records
