"""Encodings: a formula plus the constraint it encodes."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any

from cardcnf.cnf.formula import CnfFormula
from cardcnf.errors import EncodingError


class ConstraintKind(str, Enum):
    """Kinds of encoded constraints."""

    AMO = "AMO"
    AMK = "AMK"
    AMO_INDICATOR = "AMO-INDICATOR"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Constraint:
    """Descriptor of the encoded cardinality constraint.

    AMO_INDICATOR is at-most-one over all inputs but the last, which acts
    as an indicator implied by every other input.

    Attributes:
        kind: Constraint kind
        k: Bound for AMK (1 for AMO and AMO_INDICATOR, None when unknown)
    """

    kind: ConstraintKind
    k: int | None = None

    @classmethod
    def amo(cls) -> Constraint:
        return cls(ConstraintKind.AMO, 1)

    @classmethod
    def amk(cls, k: int) -> Constraint:
        if k < 1:
            raise EncodingError(f"AMK bound must be positive, got {k}")
        return cls(ConstraintKind.AMK, k)

    @classmethod
    def amo_indicator(cls) -> Constraint:
        return cls(ConstraintKind.AMO_INDICATOR, 1)

    @classmethod
    def unknown(cls) -> Constraint:
        return cls(ConstraintKind.UNKNOWN, None)

    @classmethod
    def parse(cls, text: str) -> Constraint:
        """Parse the DIMACS metadata form ('AMO', 'AMK 3', 'AMO-INDICATOR')."""
        parts = text.split()
        if not parts:
            return cls.unknown()
        head = parts[0]
        if head == "AMO" and len(parts) == 1:
            return cls.amo()
        if head == "AMO-INDICATOR" and len(parts) == 1:
            return cls.amo_indicator()
        if head == "AMK" and len(parts) == 2 and parts[1].isdigit():
            return cls.amk(int(parts[1]))
        if head == "unknown":
            return cls.unknown()
        raise EncodingError(f"unrecognized constraint '{text}'")

    @property
    def is_known(self) -> bool:
        return self.kind is not ConstraintKind.UNKNOWN

    def holds(self, values: list[bool]) -> bool:
        """Evaluate the constraint on a full assignment of the inputs (in order)."""
        if self.kind is ConstraintKind.AMO_INDICATOR:
            weight = sum(values[:-1])
            return weight <= 1 and (weight == 0 or values[-1])
        if self.kind is ConstraintKind.UNKNOWN or self.k is None:
            raise EncodingError("cannot evaluate an unknown constraint")
        return sum(values) <= self.k

    def __str__(self) -> str:
        if self.kind is ConstraintKind.AMK:
            return f"AMK {self.k}"
        return self.kind.value


@dataclass(frozen=True)
class EncodingStats:
    """Size statistics of an encoding, available without storing clauses.

    Attributes:
        encoder: Encoder name
        constraint: Encoded constraint
        num_inputs: Number of input variables
        num_clauses: Number of clauses
        num_aux: Number of auxiliary variables
        groups: Clause counts per named constraint group
        params: Encoder parameters
    """

    encoder: str
    constraint: Constraint
    num_inputs: int
    num_clauses: int
    num_aux: int
    groups: dict[str, int] = field(default_factory=dict)
    params: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return {
            "encoder": self.encoder,
            "constraint": str(self.constraint),
            "n": self.num_inputs,
            "clauses": self.num_clauses,
            "aux": self.num_aux,
            "groups": dict(self.groups),
            "params": dict(self.params),
        }


@dataclass(frozen=True)
class Encoding:
    """A CNF formula together with the constraint it encodes.

    Attributes:
        formula: The clauses with input/auxiliary roles
        constraint: The encoded constraint
        encoder_name: Registry name of the encoder that produced it
        params: Key/value metadata (m, ell, p, q, seed, ...)
        groups: Clause counts per named constraint group
    """

    formula: CnfFormula
    constraint: Constraint
    encoder_name: str
    params: dict[str, Any] = field(default_factory=dict)
    groups: dict[str, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        errors = self.validate()
        if errors:
            raise EncodingError("; ".join(errors))

    def validate(self) -> list[str]:
        """Check the constraint against the formula's inputs.

        Returns:
            List of validation error messages (empty if valid).
        """
        errors: list[str] = []
        if self.constraint.kind is ConstraintKind.AMK:
            k = self.constraint.k or 0
            if not 1 <= k <= self.num_inputs:
                errors.append(f"AMK bound {k} outside [1, {self.num_inputs}]")
        if self.constraint.kind is ConstraintKind.AMO_INDICATOR and self.num_inputs < 1:
            errors.append("AMO-INDICATOR needs the indicator among the inputs")
        return errors

    @property
    def input_vars(self) -> list[int]:
        return list(self.formula.input_vars)

    @property
    def num_inputs(self) -> int:
        return len(self.formula.input_vars)

    @property
    def num_clauses(self) -> int:
        return len(self.formula)

    @property
    def num_aux(self) -> int:
        return len(self.formula.aux_vars)

    @property
    def stats(self) -> EncodingStats:
        return EncodingStats(
            encoder=self.encoder_name,
            constraint=self.constraint,
            num_inputs=self.num_inputs,
            num_clauses=self.num_clauses,
            num_aux=self.num_aux,
            groups=dict(self.groups),
            params=dict(self.params),
        )
