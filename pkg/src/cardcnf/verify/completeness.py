"""Propagation-completeness checks.

An encoding is propagation complete if, for every partial assignment of
the inputs, each input literal it entails is derived by unit propagation,
or unit propagation reaches a conflict. Checking all partial assignments
is intractable; at-most-one encodings get the single-positive-literal
check plus random prefixes, other constraints random prefixes only.
"""

import logging
from dataclasses import dataclass
from typing import Any

import numpy as np

from cardcnf.cnf.encoding import ConstraintKind, Encoding
from cardcnf.cnf.formula import Literal, PartialAssignment
from cardcnf.utils.config import get_config
from cardcnf.verify.propagation import Propagator
from cardcnf.verify.solver import Solver

logger = logging.getLogger(__name__)

# Entailment result meaning "the prefix itself violates the constraint".
CONFLICT = None


@dataclass
class CompletenessReport:
    """Result of a propagation-completeness check.

    Attributes:
        checked: Number of prefixes checked
        counterexample: Input literals of a failing prefix, if any
        missing: An entailed literal not derived (0 when a conflict was missed)
        exhaustive: True for at-most-one, where the single-literal check
            covers every prefix, so a pass is a proof rather than evidence
    """

    checked: int
    counterexample: list[Literal] | None = None
    missing: Literal | None = None
    exhaustive: bool = False

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    def __bool__(self) -> bool:
        return self.passed

    def to_dict(self) -> dict[str, Any]:
        result: dict[str, Any] = {"checked": self.checked, "passed": self.passed}
        if self.counterexample is not None:
            result["counterexample"] = self.counterexample
            result["missing"] = self.missing
        else:
            result["verdict"] = "complete" if self.exhaustive else "no counterexample found"
        return result


class _Entailment:
    """Input literals entailed by a prefix, from the constraint semantics."""

    def __init__(self, encoding: Encoding) -> None:
        self.encoding = encoding
        self.inputs = encoding.input_vars
        self.kind = encoding.constraint.kind
        self.k = encoding.constraint.k or 1
        self._solver: Solver | None = None

    def __call__(self, prefix: PartialAssignment) -> list[Literal] | None:
        if self.kind is ConstraintKind.AMK or self.kind is ConstraintKind.AMO:
            return self._bounded(prefix, self.inputs)
        if self.kind is ConstraintKind.AMO_INDICATOR:
            return self._indicator(prefix)
        return self._by_solver(prefix)

    def _bounded(self, prefix: PartialAssignment, xs: list[int]) -> list[Literal] | None:
        weight = sum(1 for v in xs if prefix.get(v) is True)
        if weight > self.k:
            return CONFLICT
        if weight == self.k:
            return [-v for v in xs if v not in prefix]
        return []

    def _indicator(self, prefix: PartialAssignment) -> list[Literal] | None:
        *xs, z = self.inputs
        weight = sum(1 for v in xs if prefix.get(v) is True)
        if weight > 1 or (weight == 1 and prefix.get(z) is False):
            return CONFLICT
        if weight == 1:
            entailed = [-v for v in xs if v not in prefix]
            return entailed + ([z] if z not in prefix else [])
        if prefix.get(z) is False:
            return [-v for v in xs if v not in prefix]
        return []

    def _by_solver(self, prefix: PartialAssignment) -> list[Literal] | None:
        if self._solver is None:
            self._solver = Solver(self.encoding.formula)
        if not self._solver.solve(prefix):
            return CONFLICT
        entailed: list[Literal] = []
        for v in self.inputs:
            if v in prefix:
                continue
            for lit in (v, -v):
                if not self._solver.solve({**prefix, v: lit < 0}):
                    entailed.append(lit)
        return entailed


def _check_prefix(
    propagator: Propagator,
    entails: _Entailment,
    literals: list[Literal],
) -> Literal | None:
    """Return the first entailed literal not derived (0 for a missed conflict), else None."""
    prefix = {abs(lit): lit > 0 for lit in literals}
    result = propagator.run(prefix)
    if result.conflict:
        return None
    entailed = entails(prefix)
    if entailed is CONFLICT:
        return 0
    return next((lit for lit in entailed if not result.implies(lit)), None)


def _random_prefix(rng: np.random.Generator, inputs: list[int], k: int) -> list[Literal]:
    n = len(inputs)
    positives = int(rng.integers(1, min(n, k + 1) + 1))
    negatives = int(rng.integers(0, n - positives + 1)) if n > positives else 0
    negatives = min(negatives, int(rng.integers(0, k + 3)))
    chosen = rng.permutation(n)[: positives + negatives]
    lits = [inputs[i] for i in chosen[:positives]] + [-inputs[i] for i in chosen[positives:]]
    order = rng.permutation(len(lits))
    return [lits[i] for i in order]


def check_propagation_complete(
    encoding: Encoding,
    prefixes: int | None = None,
    seed: int = 0,
) -> CompletenessReport:
    """Search for a prefix whose entailed input literals unit propagation misses.

    At-most-one encodings first assert every input alone; then `prefixes`
    seeded random literal prefixes are tested for every constraint kind. A
    pass on the random part is evidence, not proof.

    Args:
        encoding: Encoding to check.
        prefixes: Number of random prefixes (default from config).
        seed: Seed for the prefixes.
    """
    count = prefixes if prefixes is not None else get_config().pc_prefixes
    propagator = Propagator(encoding.formula)
    entails = _Entailment(encoding)
    inputs = encoding.input_vars
    kind = encoding.constraint.kind
    checked = 0

    if kind in (ConstraintKind.AMO, ConstraintKind.AMO_INDICATOR):
        singles = inputs[:-1] if kind is ConstraintKind.AMO_INDICATOR else inputs
        for v in singles:
            checked += 1
            missing = _check_prefix(propagator, entails, [v])
            if missing is not None:
                logger.info(f"{encoding.encoder_name}: asserting {v} misses {missing}")
                return CompletenessReport(checked, [v], missing)

    rng = np.random.default_rng(seed)
    k = encoding.constraint.k or 1
    for _ in range(count):
        literals = _random_prefix(rng, inputs, k)
        checked += 1
        missing = _check_prefix(propagator, entails, literals)
        if missing is not None:
            logger.info(f"{encoding.encoder_name}: prefix {literals} misses {missing}")
            return CompletenessReport(checked, literals, missing)

    logger.info(f"{encoding.encoder_name}: {checked} prefixes propagate completely")
    return CompletenessReport(checked, exhaustive=kind is ConstraintKind.AMO)
