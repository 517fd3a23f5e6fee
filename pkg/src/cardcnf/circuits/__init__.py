"""Monotone threshold circuits: model, evaluation, audit and builders."""

from cardcnf.circuits.circuit import (
    FALSE_WIRE,
    Circuit,
    CircuitAudit,
    CircuitBuilder,
    Gate,
    GateOp,
    audit,
    dump_circuit,
    evaluate,
    evaluate_batch,
)
from cardcnf.circuits.threshold import (
    build_s2,
    build_t2_multipartite,
    build_t2_product,
    build_t3,
)

__all__ = [
    "FALSE_WIRE",
    "GateOp",
    "Gate",
    "Circuit",
    "CircuitBuilder",
    "CircuitAudit",
    "evaluate",
    "evaluate_batch",
    "audit",
    "dump_circuit",
    "build_s2",
    "build_t3",
    "build_t2_multipartite",
    "build_t2_product",
]
