"""Set family data types."""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
from functools import cached_property

import galois

from cardcnf.errors import FamilyError


@dataclass(frozen=True)
class SetFamily:
    """An indexed family of subsets of the ground set {1..ground_size}.

    Attributes:
        ground_size: Size of the ground set
        sets: Member sets, each a sorted tuple of elements
    """

    ground_size: int
    sets: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        errors = self.validate()
        if errors:
            raise FamilyError("; ".join(errors))

    @classmethod
    def of(cls, ground_size: int, sets: Sequence[Sequence[int]]) -> SetFamily:
        """Build a family from arbitrary set-like sequences."""
        return cls(ground_size, tuple(tuple(sorted(set(s))) for s in sets))

    def validate(self) -> list[str]:
        """Check that every set is nonempty and inside the ground set.

        Returns:
            List of validation error messages (empty if valid).
        """
        errors: list[str] = []
        if self.ground_size < 0:
            errors.append(f"ground size must be non-negative, got {self.ground_size}")
        for index, members in enumerate(self.sets):
            if not members:
                errors.append(f"set {index} is empty")
            elif members[0] < 1 or members[-1] > self.ground_size:
                errors.append(f"set {index} leaves the ground set 1..{self.ground_size}")
        return errors

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(self.sets)

    def __getitem__(self, index: int) -> tuple[int, ...]:
        return self.sets[index]

    @property
    def min_set_size(self) -> int:
        return min((len(s) for s in self.sets), default=0)

    @property
    def max_set_size(self) -> int:
        return max((len(s) for s in self.sets), default=0)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Each set as a bitmask with bit e standing for element e."""
        return tuple(sum(1 << e for e in members) for members in self.sets)

    def degrees(self) -> list[int]:
        """degrees()[e] is the number of sets containing element e (index 0 unused)."""
        counts = [0] * (self.ground_size + 1)
        for members in self.sets:
            for element in members:
                counts[element] += 1
        return counts

    def truncated(self, count: int) -> SetFamily:
        """The first `count` sets."""
        return SetFamily(self.ground_size, self.sets[:count])


@dataclass(frozen=True)
class FamilyCheck:
    """Outcome of a family property check.

    Attributes:
        passed: Whether the property holds
        witness: Indices of sets forming a counterexample (empty on pass).
            For cover-freeness the covered set comes first.
    """

    passed: bool
    witness: tuple[int, ...] = field(default=())

    def __bool__(self) -> bool:
        return self.passed


@dataclass(frozen=True)
class PrimeField:
    """The prime field GF(q).

    Attributes:
        q: Prime modulus
    """

    q: int

    def __post_init__(self) -> None:
        if self.q < 2 or not galois.is_prime(self.q):
            raise FamilyError(f"field size {self.q} is not prime")

    @cached_property
    def gf(self) -> type[galois.FieldArray]:
        """The galois field class for GF(q)."""
        return galois.GF(self.q)
