"""Semantic equivalence of encodings against their cardinality predicate."""

import itertools
import logging
from collections.abc import Iterator
from dataclasses import dataclass
from enum import Enum
from math import comb
from typing import Any

import numpy as np

from cardcnf.cnf.encoding import Encoding
from cardcnf.errors import StrategyError
from cardcnf.utils.config import get_config
from cardcnf.verify.solver import Solver

logger = logging.getLogger(__name__)

EXHAUSTIVE_LIMIT = 20


class Strategy(str, Enum):
    """Which input assignments the oracle checks."""

    EXHAUSTIVE = "exhaustive"
    WEIGHT_WINDOW = "weight-window"


@dataclass(frozen=True)
class Mismatch:
    """An input assignment on which the formula disagrees with the constraint.

    Attributes:
        assignment: Values of the input variables, in input order
        expected: Constraint value
        got: Satisfiability of the restricted formula
    """

    assignment: tuple[bool, ...]
    expected: bool
    got: bool

    @property
    def weight(self) -> int:
        return sum(self.assignment)

    def true_inputs(self, input_vars: list[int]) -> list[int]:
        return [v for v, value in zip(input_vars, self.assignment) if value]


@dataclass
class EquivalenceReport:
    """Result of an equivalence check.

    Attributes:
        strategy: Strategy used
        checked_assignments: Number of input assignments checked
        first_mismatch: First disagreement found, if any
    """

    strategy: Strategy
    checked_assignments: int
    first_mismatch: Mismatch | None = None

    @property
    def passed(self) -> bool:
        return self.first_mismatch is None

    def __bool__(self) -> bool:
        return self.passed

    def to_dict(self, input_vars: list[int] | None = None) -> dict[str, Any]:
        result: dict[str, Any] = {
            "strategy": self.strategy.value,
            "checked": self.checked_assignments,
            "passed": self.passed,
        }
        if self.first_mismatch is not None:
            mismatch = self.first_mismatch
            result["witness"] = {
                "true_inputs": mismatch.true_inputs(input_vars or []),
                "weight": mismatch.weight,
                "expected": "SAT" if mismatch.expected else "UNSAT",
                "got": "SAT" if mismatch.got else "UNSAT",
            }
        return result


def _exhaustive(n: int) -> Iterator[tuple[bool, ...]]:
    yield from itertools.product((False, True), repeat=n)


def _from_positions(n: int, positions: tuple[int, ...] | list[int]) -> tuple[bool, ...]:
    values = [False] * n
    for i in positions:
        values[i] = True
    return tuple(values)


def _weight_window(
    n: int,
    bound: int,
    window_limit: int,
    random_samples: int,
    seed: int,
) -> Iterator[tuple[bool, ...]]:
    top = min(n, bound + 2)
    size = sum(comb(n, w) for w in range(top + 1))
    rng = np.random.default_rng(seed)
    if size <= window_limit:
        for w in range(top + 1):
            for positions in itertools.combinations(range(n), w):
                yield _from_positions(n, positions)
    else:
        logger.info(f"Weight window has {size} assignments, sampling {window_limit}")
        # Minimal witnesses first: the lexicographically first set of each weight.
        for w in range(top + 1):
            yield _from_positions(n, range(w))
        per_weight = max(1, window_limit // (top + 1))
        for w in range(1, top + 1):
            for _ in range(min(per_weight, comb(n, w))):
                yield _from_positions(n, list(rng.choice(n, w, replace=False)))
    yield (True,) * n
    if top < n:
        for _ in range(random_samples):
            w = int(rng.integers(top + 1, n + 1))
            yield _from_positions(n, list(rng.choice(n, w, replace=False)))


def check_encoding_correct(
    encoding: Encoding,
    strategy: Strategy | str = Strategy.EXHAUSTIVE,
    window_limit: int | None = None,
    random_samples: int | None = None,
    seed: int = 0,
) -> EquivalenceReport:
    """Check that the encoding is satisfiable exactly under the inputs its constraint allows.

    Each input assignment is asserted as solver assumptions, which decides
    the satisfiability of the restricted formula.

    Args:
        encoding: Encoding to check.
        strategy: "exhaustive" (all 2^n assignments, n <= 20) or
            "weight-window" (weights up to k+2, the all-true assignment and
            random heavier samples).
        window_limit: Cap on enumerated window assignments (default from config).
        random_samples: Heavier random samples (default from config).
        seed: Seed for sampled assignments.

    Raises:
        StrategyError: If the strategy is infeasible for n or the
            constraint is unknown.
    """
    strategy = Strategy(strategy)
    constraint = encoding.constraint
    if not constraint.is_known:
        raise StrategyError("cannot check an encoding of an unknown constraint")
    n = encoding.num_inputs
    config = get_config()

    if strategy is Strategy.EXHAUSTIVE:
        if n > EXHAUSTIVE_LIMIT:
            raise StrategyError(f"exhaustive check needs n <= {EXHAUSTIVE_LIMIT}, got n={n}")
        assignments = _exhaustive(n)
    else:
        assignments = _weight_window(
            n,
            constraint.k or 1,
            window_limit if window_limit is not None else config.window_limit,
            random_samples if random_samples is not None else config.random_samples,
            seed,
        )

    solver = Solver(encoding.formula)
    inputs = encoding.input_vars
    checked = 0
    for values in assignments:
        checked += 1
        expected = constraint.holds(list(values))
        got = solver.solve(dict(zip(inputs, values))).satisfiable
        if got != expected:
            logger.info(f"{encoding.encoder_name}: mismatch at weight {sum(values)}")
            return EquivalenceReport(strategy, checked, Mismatch(values, expected, got))
    logger.info(f"{encoding.encoder_name}: {checked} assignments agree ({strategy.value})")
    return EquivalenceReport(strategy, checked)
