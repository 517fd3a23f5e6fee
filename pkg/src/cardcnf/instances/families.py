"""Benchmark instance families L, M and D.

- L: n inputs under at-most-k, plus k+1 (or k for the satisfiable variant)
  disjoint positive 10-clauses.
- M: M machines and T jobs; each job runs on some machine, each machine
  takes at most c jobs, and at most k machines may be active.
- D: a layered DAG from a source through k-1 layers of width n to a sink;
  every active vertex but the sink needs an active successor, and at most
  k vertices may be active.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from cardcnf.cnf.formula import CnfFormula, FormulaBuilder
from cardcnf.cnf.pool import VariablePool, VarRole
from cardcnf.encoders.amk import emit_sequential
from cardcnf.encoders.registry import emitter_for
from cardcnf.errors import InstanceError

logger = logging.getLogger(__name__)

SUBSET_SIZE = 10


class FamilyName(str, Enum):
    L = "L"
    M = "M"
    D = "D"


class Status(str, Enum):
    SAT = "SAT"
    UNSAT = "UNSAT"


VARIANTS = ("L", "L-sat", "M", "M-sat", "D")


class InstanceSpec(BaseModel):
    """Parameters of one benchmark instance.

    L uses n; M uses machines, jobs and capacity; D uses n. Every family
    uses k, the encoder under test and its params.
    """

    model_config = ConfigDict(frozen=True)

    family: FamilyName
    k: int = Field(default=2, ge=1)
    encoder: str = "seqcounter"
    encoder_params: dict[str, Any] = Field(default_factory=dict)
    seed: int = 0
    n: int | None = Field(default=None, ge=1)
    satisfiable: bool = False
    machines: int | None = Field(default=None, ge=1)
    jobs: int | None = Field(default=None, ge=1)
    capacity: int | None = Field(default=None, ge=1)

    @classmethod
    def from_variant(
        cls,
        variant: str,
        size: int,
        k: int = 2,
        encoder: str = "seqcounter",
        seed: int = 0,
        encoder_params: dict[str, Any] | None = None,
    ) -> "InstanceSpec":
        """Build a spec from a variant name and one size.

        L, L-sat and D use size as n. M and M-sat use size machines of
        capacity size with k*size + 1 (M) or k*size (M-sat) jobs.

        Raises:
            InstanceError: On an unknown variant.
        """
        common: dict[str, Any] = {
            "k": k,
            "encoder": encoder,
            "seed": seed,
            "encoder_params": encoder_params or {},
        }
        if variant in ("L", "L-sat"):
            return cls(family=FamilyName.L, n=size, satisfiable=variant == "L-sat", **common)
        if variant in ("M", "M-sat"):
            jobs = k * size if variant == "M-sat" else k * size + 1
            return cls(family=FamilyName.M, machines=size, capacity=size, jobs=jobs, **common)
        if variant == "D":
            return cls(family=FamilyName.D, n=size, **common)
        raise InstanceError(f"unknown family variant '{variant}' (expected one of {VARIANTS})")

    @property
    def size(self) -> int:
        """The single size used to index bench rows."""
        if self.family is FamilyName.M:
            return self.machines or 0
        return self.n or 0

    def validate_feasible(self) -> list[str]:
        """Check family-specific feasibility.

        Returns:
            List of validation error messages (empty if valid).
        """
        errors: list[str] = []
        if self.family is FamilyName.L:
            if self.n is None:
                errors.append("family L needs n")
            elif self.n < SUBSET_SIZE * (self.k + 1):
                errors.append(f"family L needs n >= {SUBSET_SIZE * (self.k + 1)}, got {self.n}")
        elif self.family is FamilyName.M:
            if None in (self.machines, self.jobs, self.capacity):
                errors.append("family M needs machines, jobs and capacity")
            elif self.machines < self.k:
                errors.append(f"family M needs machines >= k, got {self.machines} < {self.k}")
        else:
            if self.n is None:
                errors.append("family D needs n")
            if self.k < 2:
                errors.append(f"family D needs k >= 2, got {self.k}")
        return errors


@dataclass
class Instance:
    """A generated instance with its expected status.

    Attributes:
        spec: Generating parameters
        formula: The CNF
        expected: Status the construction guarantees
        base_vars: Variables before encoder auxiliaries
        details: Family-specific structure (subsets, layers)
    """

    spec: InstanceSpec
    formula: CnfFormula
    expected: Status
    base_vars: int
    details: dict[str, Any] = field(default_factory=dict)

    def comments(self) -> dict[str, Any]:
        """DIMACS comments identifying the instance."""
        variant = self.spec.family.value
        if self.spec.family is not FamilyName.D and self.expected is Status.SAT:
            variant += "-sat"
        return {
            "family": variant,
            "expected": self.expected.value,
            "seed": self.spec.seed,
            "encoder": self.spec.encoder,
            "k": self.spec.k,
            "size": self.spec.size,
        }


def _builder_with_inputs(count: int) -> tuple[FormulaBuilder, list[int]]:
    pool = VariablePool()
    xs = pool.allocate(count, VarRole.INPUT)
    return FormulaBuilder(pool), xs


def _check(spec: InstanceSpec, family: FamilyName) -> None:
    if spec.family is not family:
        raise InstanceError(f"expected a family {family.value} spec, got {spec.family.value}")
    errors = spec.validate_feasible()
    if errors:
        raise InstanceError("; ".join(errors))


def gen_family_l(spec: InstanceSpec) -> Instance:
    """At-most-k over n inputs plus disjoint positive 10-clauses.

    Each subset is drawn uniformly from the inputs not used by earlier
    subsets. k+1 subsets make the instance unsatisfiable, k keep it
    satisfiable.

    Raises:
        InstanceError: If n < 10(k+1).
    """
    _check(spec, FamilyName.L)
    n, k = spec.n or 0, spec.k
    builder, xs = _builder_with_inputs(n)
    emitter_for(spec.encoder, k, spec.encoder_params)(builder, xs)

    rng = np.random.default_rng(spec.seed)
    remaining = np.arange(n)
    subsets: list[list[int]] = []
    for _ in range(k if spec.satisfiable else k + 1):
        picked = rng.choice(len(remaining), SUBSET_SIZE, replace=False)
        subset = sorted(int(remaining[i]) + 1 for i in picked)
        remaining = np.delete(remaining, picked)
        subsets.append(subset)
        builder.add_clause(subset)

    expected = Status.SAT if spec.satisfiable else Status.UNSAT
    logger.info(f"Family L n={n} k={k} {expected.value}: {builder.num_clauses} clauses")
    return Instance(spec, builder.build(), expected, n, {"subsets": subsets})


def gen_family_m(spec: InstanceSpec) -> Instance:
    """Machines and jobs: unsatisfiable exactly when jobs > k * capacity.

    Variables x(m, t) = (m-1)*T + t come first, then the machine activity
    variables a_m. Per-machine capacity uses the sequential counter so only
    the at-most-k over machines depends on the encoder under test.

    Raises:
        InstanceError: If machines < k or a parameter is missing.
    """
    _check(spec, FamilyName.M)
    machines, jobs, capacity, k = spec.machines or 0, spec.jobs or 0, spec.capacity or 0, spec.k
    builder, variables = _builder_with_inputs(machines * jobs + machines)
    x = np.asarray(variables[: machines * jobs], dtype=np.int64).reshape(machines, jobs)
    active = np.asarray(variables[machines * jobs :], dtype=np.int64)

    with builder.group("jobs"):
        builder.add_rows(x.T)
    with builder.group("activation"):
        builder.add_rows(np.stack([-x.reshape(-1), np.repeat(active, jobs)], axis=1))
    with builder.group("machines"):
        emitter_for(spec.encoder, k, spec.encoder_params)(builder, active.tolist())
    with builder.group("capacity"):
        for m in range(machines):
            emit_sequential(builder, x[m].tolist(), capacity)

    expected = Status.SAT if jobs <= k * capacity else Status.UNSAT
    logger.info(f"Family M machines={machines} jobs={jobs} c={capacity} k={k}: {expected.value}")
    return Instance(spec, builder.build(), expected, machines * jobs + machines)


def gen_family_d(spec: InstanceSpec) -> Instance:
    """Layered DAG whose source forces a path of k+1 active vertices.

    Layer 1 is the source, layers 2..k hold n vertices each and layer k+1
    is the sink. Every vertex has an edge to each vertex of the next layer.

    Raises:
        InstanceError: If n < 1 or k < 2.
    """
    _check(spec, FamilyName.D)
    n, k = spec.n or 0, spec.k
    layers_sizes = [1, *([n] * (k - 1)), 1]
    builder, variables = _builder_with_inputs(sum(layers_sizes))
    layers: list[list[int]] = []
    start = 0
    for size in layers_sizes:
        layers.append(variables[start : start + size])
        start += size

    builder.add(layers[0][0])
    with builder.group("successor"):
        for layer, successors in zip(layers, layers[1:]):
            for v in layer:
                builder.add_clause([-v, *successors])
    with builder.group("bound"):
        emitter_for(spec.encoder, k, spec.encoder_params)(builder, variables)

    logger.info(f"Family D n={n} k={k}: {len(variables)} vertices")
    return Instance(spec, builder.build(), Status.UNSAT, len(variables), {"layers": layers})


def generate_instance(spec: InstanceSpec) -> Instance:
    """Dispatch to the generator of spec.family."""
    generators = {
        FamilyName.L: gen_family_l,
        FamilyName.M: gen_family_m,
        FamilyName.D: gen_family_d,
    }
    return generators[spec.family](spec)
