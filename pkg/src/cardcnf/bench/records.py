"""Benchmark result records and their CSV form."""

import csv
from enum import Enum
from pathlib import Path
from typing import Any, TextIO

from pydantic import BaseModel, Field, field_validator


class RunStatus(str, Enum):
    """Outcome of one solver run."""

    SAT = "SAT"
    UNSAT = "UNSAT"
    TIMEOUT = "TIMEOUT"
    ERROR = "ERROR"


def format_record_params(params: dict[str, Any]) -> str:
    """Render params as `key=value;key=value` with sorted keys."""
    return ";".join(f"{key}={params[key]}" for key in sorted(params))


def parse_record_params(text: str) -> dict[str, Any]:
    """Inverse of format_record_params; integer-looking values become ints."""
    params: dict[str, Any] = {}
    for item in filter(None, text.split(";")):
        key, _, value = item.partition("=")
        params[key] = int(value) if value.lstrip("-").isdigit() else value
    return params


class BenchRecord(BaseModel):
    """One (instance, encoder) cell of a benchmark run.

    Field order is the CSV column order. `output` holds the captured solver
    output (or the failure message) of an ERROR cell.
    """

    family: str
    params: dict[str, Any] = Field(default_factory=dict)
    encoder: str
    n: int
    k: int
    seed: int
    clause_count: int = Field(ge=0)
    aux_count: int = Field(ge=0)
    solver_name: str
    wall_time_ms: float = Field(ge=0)
    status: RunStatus
    expected: RunStatus | None = None
    mismatch: bool = False
    encode_time_ms: float = Field(default=0.0, ge=0)
    repeats: int = Field(default=1, ge=1)
    parallel: bool = False
    output: str = ""

    @field_validator("params", mode="before")
    @classmethod
    def _parse_params(cls, value: Any) -> Any:
        return parse_record_params(value) if isinstance(value, str) else value

    @field_validator("expected", mode="before")
    @classmethod
    def _empty_expected(cls, value: Any) -> Any:
        return None if value == "" else value

    def to_row(self) -> dict[str, str]:
        """Flatten into CSV cell strings."""
        row: dict[str, str] = {}
        for name in type(self).model_fields:
            value = getattr(self, name)
            if name == "params":
                row[name] = format_record_params(value)
            elif isinstance(value, Enum):
                row[name] = value.value
            elif value is None:
                row[name] = ""
            elif isinstance(value, bool):
                row[name] = "true" if value else "false"
            else:
                row[name] = str(value)
        return row


CSV_COLUMNS = list(BenchRecord.model_fields)


def write_csv(records: list[BenchRecord], destination: str | Path | TextIO) -> None:
    """Write records with one header row, columns in field order."""

    def body(out: TextIO) -> None:
        writer = csv.DictWriter(out, fieldnames=CSV_COLUMNS, lineterminator="\n")
        writer.writeheader()
        for record in records:
            writer.writerow(record.to_row())

    if isinstance(destination, (str, Path)):
        with open(destination, "w", encoding="utf-8", newline="") as f:
            body(f)
    else:
        body(destination)


def read_csv(source: str | Path | TextIO) -> list[BenchRecord]:
    """Parse records written by write_csv."""
    if isinstance(source, (str, Path)):
        with open(source, encoding="utf-8", newline="") as f:
            return [BenchRecord.model_validate(row) for row in csv.DictReader(f)]
    return [BenchRecord.model_validate(row) for row in csv.DictReader(source)]
