"""DIMACS CNF reading and writing.

Metadata travels in comment lines before the header:

    c encoder <name>
    c constraint <AMO|AMK k|AMO-INDICATOR|unknown>
    c input-vars <ids>
    c params <key=value ...>

Files are UTF-8 with LF line endings. Output is deterministic for a given
Encoding.
"""

import logging
from array import array
from collections.abc import Callable, Iterator
from io import StringIO
from pathlib import Path
from typing import Any, TextIO

from cardcnf.cnf.encoding import Constraint, Encoding
from cardcnf.cnf.formula import CnfFormula, normalize_clause
from cardcnf.errors import DimacsError, EncodingError

logger = logging.getLogger(__name__)

Destination = str | Path | TextIO
Source = str | Path | TextIO


def format_params(params: dict[str, Any]) -> str:
    """Render params as sorted space-separated key=value pairs."""
    return " ".join(f"{key}={params[key]}" for key in sorted(params))


def parse_params(text: str) -> dict[str, Any]:
    """Parse key=value pairs; integer-looking values become ints."""
    params: dict[str, Any] = {}
    for item in text.split():
        key, sep, value = item.partition("=")
        if not sep:
            raise ValueError(f"param '{item}' is not key=value")
        params[key] = int(value) if value.lstrip("-").isdigit() else value
    return params


def _clause_lines(formula: CnfFormula) -> Iterator[str]:
    for clause in formula.clauses():
        if clause:
            yield " ".join(map(str, clause)) + " 0\n"
        else:
            yield "0\n"


def _write_lines(
    out: TextIO,
    comments: list[str],
    formula: CnfFormula,
) -> None:
    for comment in comments:
        out.write(f"c {comment}\n" if comment else "c\n")
    out.write(f"p cnf {formula.max_var} {len(formula)}\n")
    out.writelines(_clause_lines(formula))


def _open_for_write(destination: Destination, body: Callable[[TextIO], None]) -> None:
    if isinstance(destination, (str, Path)):
        with open(destination, "w", encoding="utf-8", newline="\n") as f:
            body(f)
    else:
        body(destination)


def encoding_comments(encoding: Encoding) -> list[str]:
    """The metadata comment lines of an encoding (without the leading 'c ')."""
    inputs = " ".join(map(str, encoding.formula.input_vars))
    params = format_params(encoding.params)
    return [
        f"encoder {encoding.encoder_name}",
        f"constraint {encoding.constraint}",
        f"input-vars {inputs}".rstrip(),
        f"params {params}".rstrip(),
    ]


def write_dimacs(
    encoding: Encoding,
    destination: Destination,
    extra: dict[str, Any] | None = None,
) -> None:
    """Write an encoding as DIMACS with metadata comments.

    Args:
        encoding: Encoding to serialize.
        destination: Path or writable text stream.
        extra: Additional `c <key> <value>` comments emitted after the metadata.
    """
    comments = encoding_comments(encoding)
    for key, value in (extra or {}).items():
        comments.append(f"{key} {value}")
    _open_for_write(destination, lambda f: _write_lines(f, comments, encoding.formula))
    logger.debug(f"Wrote {len(encoding.formula)} clauses for {encoding.encoder_name}")


def write_formula(
    formula: CnfFormula,
    destination: Destination,
    comments: dict[str, Any] | None = None,
) -> None:
    """Write a bare formula, e.g. a benchmark instance, with `c <key> <value>` comments."""
    lines = [f"{key} {value}" for key, value in (comments or {}).items()]
    _open_for_write(destination, lambda f: _write_lines(f, lines, formula))


def dimacs_text(encoding: Encoding) -> str:
    """Return the DIMACS serialization of an encoding as a string."""
    buffer = StringIO()
    write_dimacs(encoding, buffer)
    return buffer.getvalue()


def _read_text(source: Source) -> str:
    if isinstance(source, (str, Path)):
        return Path(source).read_text(encoding="utf-8")
    return source.read()


def read_comments(source: Source) -> dict[str, str]:
    """Return the `c <key> <value>` comments that precede the header."""
    return _parse(_read_text(source), comments_only=True)[1]


def read_dimacs(source: Source) -> Encoding:
    """Read a DIMACS file written by write_dimacs (metadata optional).

    Without metadata the constraint is unknown and every variable is an
    input.

    Raises:
        DimacsError: On a malformed header, out-of-range literal, missing 0
            terminator, tautology, or clause count mismatch.
    """
    return parse_dimacs(_read_text(source))


def parse_dimacs(text: str) -> Encoding:
    """Parse DIMACS text into an Encoding (see read_dimacs)."""
    encoding, _ = _parse(text, comments_only=False)
    assert encoding is not None
    return encoding


def _parse(text: str, comments_only: bool) -> tuple[Encoding | None, dict[str, str]]:
    comments: dict[str, str] = {}
    header: tuple[int, int, int] | None = None
    literals = array("i")
    ends = array("q")
    last_line = 0

    for number, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line:
            continue
        last_line = number
        if line.startswith("c"):
            if header is None:
                key, _, value = line[1:].strip().partition(" ")
                if key:
                    comments.setdefault(key, value.strip())
            continue
        if line.startswith("p"):
            if header is not None:
                raise DimacsError("duplicate header", number)
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf" or not all(p.isdigit() for p in parts[2:]):
                raise DimacsError(f"malformed header '{line}'", number)
            header = (int(parts[2]), int(parts[3]), number)
            if comments_only:
                return None, comments
            continue
        if header is None:
            raise DimacsError("clause before header", number)
        try:
            values = [int(token) for token in line.split()]
        except ValueError:
            raise DimacsError(f"non-integer token in '{line}'", number) from None
        if values[-1] != 0:
            raise DimacsError("missing 0 terminator", number)
        body = values[:-1]
        if 0 in body:
            raise DimacsError("more than one clause on a line", number)
        max_var = header[0]
        for lit in body:
            if abs(lit) > max_var:
                raise DimacsError(f"literal {lit} out of range 1..{max_var}", number)
        try:
            clause = normalize_clause(body)
        except EncodingError as e:
            raise DimacsError(str(e), number) from None
        literals.extend(clause)
        ends.append(len(literals))

    if header is None:
        raise DimacsError("missing 'p cnf' header", max(last_line, 1))
    if comments_only:
        return None, comments

    max_var, declared_clauses, header_line = header
    if len(ends) != declared_clauses:
        raise DimacsError(
            f"clause count mismatch: header declares {declared_clauses}, found {len(ends)}",
            last_line,
        )

    try:
        encoding = _assemble(literals, ends, max_var, comments)
    except (EncodingError, ValueError) as e:
        raise DimacsError(str(e), header_line) from None
    logger.debug(f"Read {len(ends)} clauses over {max_var} variables")
    return encoding, comments


def _assemble(
    literals: array,
    ends: array,
    max_var: int,
    comments: dict[str, str],
) -> Encoding:
    if "input-vars" in comments:
        inputs = array("i", (int(v) for v in comments["input-vars"].split()))
    else:
        inputs = array("i", range(1, max_var + 1))
    input_set = set(inputs)
    if len(input_set) != len(inputs):
        raise EncodingError("duplicate ids in input-vars")
    if inputs and (min(inputs) < 1 or max(inputs) > max_var):
        raise EncodingError(f"input-vars outside 1..{max_var}")
    aux = array("i", (v for v in range(1, max_var + 1) if v not in input_set))

    formula = CnfFormula(literals, ends, max_var, inputs, aux)
    constraint = Constraint.parse(comments.get("constraint", "unknown"))
    params = parse_params(comments.get("params", ""))
    return Encoding(
        formula=formula,
        constraint=constraint,
        encoder_name=comments.get("encoder", "unknown"),
        params=params,
    )
