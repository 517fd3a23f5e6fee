"""Monotone AND/OR circuits.

Wires are numbered: 0 is the constant-false wire, 1..n are the inputs, and
gate g drives wire n + 1 + g. Every gate reads two earlier wires, so the
gate list is already in topological order.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from enum import Enum
from typing import Any, NamedTuple

import numpy as np

FALSE_WIRE = 0


class GateOp(str, Enum):
    """Gate operations; only monotone ones exist."""

    AND = "AND"
    OR = "OR"


class Gate(NamedTuple):
    op: GateOp
    a: int
    b: int


@dataclass(frozen=True)
class Circuit:
    """A fan-in-2 AND/OR circuit.

    Attributes:
        num_inputs: Number of input wires
        gates: Gates in topological order
        outputs: Output wires
    """

    num_inputs: int
    gates: tuple[Gate, ...]
    outputs: tuple[int, ...]

    def __post_init__(self) -> None:
        errors = self.validate()
        if errors:
            raise ValueError("; ".join(errors))

    def validate(self) -> list[str]:
        """Check that every gate reads earlier wires and outputs exist.

        Returns:
            List of validation error messages (empty if valid).
        """
        errors: list[str] = []
        for g, gate in enumerate(self.gates):
            wire = self.wire_of(g)
            if not (0 <= gate.a < wire and 0 <= gate.b < wire):
                errors.append(f"gate {g} reads a wire that is not earlier")
        for out in self.outputs:
            if not 0 <= out < self.num_wires:
                errors.append(f"output wire {out} does not exist")
        return errors

    @property
    def num_wires(self) -> int:
        return self.num_inputs + 1 + len(self.gates)

    @property
    def gate_count(self) -> int:
        return len(self.gates)

    def wire_of(self, gate_index: int) -> int:
        return self.num_inputs + 1 + gate_index


class CircuitBuilder:
    """Appends gates, folding constants and trivial gates away."""

    def __init__(self, num_inputs: int) -> None:
        self.num_inputs = num_inputs
        self.gates: list[Gate] = []

    def input(self, i: int) -> int:
        """Wire of input i (1-based)."""
        return i

    def inputs(self) -> list[int]:
        return list(range(1, self.num_inputs + 1))

    def _gate(self, op: GateOp, a: int, b: int) -> int:
        self.gates.append(Gate(op, a, b))
        return self.num_inputs + len(self.gates)

    def and_(self, a: int, b: int) -> int:
        if a == FALSE_WIRE or b == FALSE_WIRE:
            return FALSE_WIRE
        if a == b:
            return a
        return self._gate(GateOp.AND, a, b)

    def or_(self, a: int, b: int) -> int:
        if a == FALSE_WIRE:
            return b
        if b == FALSE_WIRE or a == b:
            return a
        return self._gate(GateOp.OR, a, b)

    def or_all(self, wires: Sequence[int]) -> int:
        """OR of all wires (constant false when empty)."""
        result = FALSE_WIRE
        for wire in wires:
            result = self.or_(result, wire)
        return result

    def build(self, outputs: Sequence[int]) -> Circuit:
        return Circuit(self.num_inputs, tuple(self.gates), tuple(outputs))


def evaluate(circuit: Circuit, assignment: Sequence[bool]) -> list[bool]:
    """Evaluate the circuit on one input vector.

    Raises:
        ValueError: If the assignment length differs from the input count.
    """
    if len(assignment) != circuit.num_inputs:
        raise ValueError(f"expected {circuit.num_inputs} input values, got {len(assignment)}")
    values = [False, *map(bool, assignment)]
    for gate in circuit.gates:
        if gate.op is GateOp.AND:
            values.append(values[gate.a] and values[gate.b])
        else:
            values.append(values[gate.a] or values[gate.b])
    return [values[out] for out in circuit.outputs]


def evaluate_batch(circuit: Circuit, matrix: np.ndarray) -> np.ndarray:
    """Evaluate the circuit on every row of a boolean matrix.

    Rows are packed into bits, so one topological pass evaluates eight
    assignments per byte.

    Returns:
        Boolean array of shape (rows, len(outputs)).

    Raises:
        ValueError: If the column count differs from the input count.
    """
    matrix = np.asarray(matrix, dtype=bool)
    if matrix.ndim != 2 or matrix.shape[1] != circuit.num_inputs:
        raise ValueError(f"expected a (rows, {circuit.num_inputs}) matrix, got {matrix.shape}")
    rows = matrix.shape[0]
    packed = np.packbits(matrix.T, axis=1)
    wires = np.zeros((circuit.num_wires, packed.shape[1]), dtype=np.uint8)
    wires[1 : circuit.num_inputs + 1] = packed
    base = circuit.num_inputs + 1
    for g, gate in enumerate(circuit.gates):
        if gate.op is GateOp.AND:
            np.bitwise_and(wires[gate.a], wires[gate.b], out=wires[base + g])
        else:
            np.bitwise_or(wires[gate.a], wires[gate.b], out=wires[base + g])
    outputs = wires[list(circuit.outputs)]
    return np.unpackbits(outputs, axis=1, count=rows).T.astype(bool)


@dataclass(frozen=True)
class CircuitAudit:
    """Structural summary of a circuit.

    Attributes:
        gate_count: Number of gates
        is_monotone_structure: True if every gate is AND or OR
        max_and_depth: Most AND gates on any input-to-output path
    """

    gate_count: int
    is_monotone_structure: bool
    max_and_depth: int

    def to_dict(self) -> dict[str, Any]:
        return {
            "gate_count": self.gate_count,
            "is_monotone_structure": self.is_monotone_structure,
            "max_and_depth": self.max_and_depth,
        }


def audit(circuit: Circuit) -> CircuitAudit:
    """Count gates, check the gate alphabet and measure AND depth."""
    depth = [0] * circuit.num_wires
    base = circuit.num_inputs + 1
    for g, gate in enumerate(circuit.gates):
        below = max(depth[gate.a], depth[gate.b])
        depth[base + g] = below + 1 if gate.op is GateOp.AND else below
    return CircuitAudit(
        gate_count=circuit.gate_count,
        is_monotone_structure=all(gate.op in (GateOp.AND, GateOp.OR) for gate in circuit.gates),
        max_and_depth=max((depth[out] for out in circuit.outputs), default=0),
    )


def dump_circuit(circuit: Circuit) -> str:
    """Text form: one `g<i> = AND|OR w<a> w<b>` line per gate, then `out w<a>` lines."""
    lines = [f"g{g} = {gate.op.value} w{gate.a} w{gate.b}" for g, gate in enumerate(circuit.gates)]
    lines.extend(f"out w{out}" for out in circuit.outputs)
    return "\n".join(lines) + "\n"
