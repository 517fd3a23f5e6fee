"""Benchmark harness: records, solver runs and the benchmark matrix."""

from cardcnf.bench.records import (
    CSV_COLUMNS,
    BenchRecord,
    RunStatus,
    format_record_params,
    parse_record_params,
    read_csv,
    write_csv,
)
from cardcnf.bench.reference import (
    REFERENCE_ENCODERS,
    REFERENCE_K,
    ReferenceCounts,
    compare,
    deviation,
    reference_counts,
    reference_sizes,
)
from cardcnf.bench.runner import (
    BenchCell,
    SolverRun,
    parse_status,
    read_expected_status,
    resolve_solver,
    run_cell,
    run_matrix,
    run_solver,
    solver_name,
)

__all__ = [
    "CSV_COLUMNS",
    "BenchRecord",
    "RunStatus",
    "format_record_params",
    "parse_record_params",
    "read_csv",
    "write_csv",
    "REFERENCE_ENCODERS",
    "REFERENCE_K",
    "ReferenceCounts",
    "compare",
    "deviation",
    "reference_counts",
    "reference_sizes",
    "BenchCell",
    "SolverRun",
    "parse_status",
    "read_expected_status",
    "resolve_solver",
    "run_cell",
    "run_matrix",
    "run_solver",
    "solver_name",
]
