"""Running clause emitters into builders."""

import logging
from collections.abc import Callable, Sequence
from typing import Any

from cardcnf.cnf.encoding import Constraint, Encoding, EncodingStats
from cardcnf.cnf.formula import ClauseCounter, ClauseSink, FormulaBuilder, Literal
from cardcnf.cnf.pool import VariablePool, VarRole
from cardcnf.errors import EncodingError

logger = logging.getLogger(__name__)

# An emitter writes clauses for the inputs into the sink and returns its params.
Emitter = Callable[[ClauseSink, Sequence[Literal]], dict[str, Any] | None]


def check_bound(n: int, k: int) -> None:
    """Require 1 <= k < n for an at-most-k encoder."""
    if not 1 <= k < n:
        raise EncodingError(f"k out of range: need 1 <= k < n, got k={k}, n={n}")


def encode_with(
    name: str,
    constraint: Constraint,
    xs: Sequence[int],
    emit: Emitter,
    inputs: Sequence[int] | None = None,
) -> Encoding:
    """Run `emit` on fresh variables and wrap the result.

    Args:
        name: Encoder name recorded in the Encoding.
        constraint: Encoded constraint.
        xs: Variables passed to the emitter.
        emit: Clause emitter.
        inputs: Input variables to declare (default: xs).

    Raises:
        EncodingError: On empty or duplicate inputs.
    """
    declared = list(xs if inputs is None else inputs)
    if not declared:
        raise EncodingError("at least one input variable is required")
    pool = VariablePool()
    pool.declare(declared, VarRole.INPUT)
    builder = FormulaBuilder(pool)
    params = emit(builder, list(xs)) or {}
    encoding = Encoding(
        formula=builder.build(),
        constraint=constraint,
        encoder_name=name,
        params=params,
        groups=dict(builder.groups),
    )
    logger.debug(
        f"{name}: n={encoding.num_inputs} clauses={encoding.num_clauses} aux={encoding.num_aux}"
    )
    return encoding


def count_with(
    name: str,
    constraint: Constraint,
    num_inputs: int,
    emit: Emitter,
    emit_count: int | None = None,
) -> EncodingStats:
    """Run `emit` in count-only mode over inputs 1..num_inputs.

    Args:
        emit_count: Number of leading inputs handed to the emitter
            (default: all).
    """
    pool = VariablePool()
    pool.declare(range(1, num_inputs + 1), VarRole.INPUT)
    counter = ClauseCounter(pool)
    xs = range(1, (num_inputs if emit_count is None else emit_count) + 1)
    params = emit(counter, xs) or {}
    return EncodingStats(
        encoder=name,
        constraint=constraint,
        num_inputs=num_inputs,
        num_clauses=counter.num_clauses,
        num_aux=counter.num_aux,
        groups=dict(counter.groups),
        params=params,
    )
