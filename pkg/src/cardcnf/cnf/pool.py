"""Variable allocation pools."""

from array import array
from collections.abc import Sequence
from enum import Enum

from cardcnf.errors import EncodingError

VariableId = int


class VarRole(str, Enum):
    """Role of a variable inside an encoding."""

    INPUT = "input"
    AUX = "aux"


class VariablePool:
    """Single-writer allocator of 1-based variable ids.

    Ids are handed out in increasing order. Every id is registered with its
    role, so a pool doubles as the input/auxiliary ledger of a formula.
    """

    def __init__(self, start: int = 0) -> None:
        if start < 0:
            raise EncodingError(f"pool start must be non-negative, got {start}")
        self._max = start
        self.input_vars = array("i")
        self.aux_vars = array("i")

    @property
    def max_var(self) -> VariableId:
        """Largest id allocated or declared so far (0 when empty)."""
        return self._max

    def _ledger(self, role: VarRole) -> array:
        return self.input_vars if role is VarRole.INPUT else self.aux_vars

    def allocate(self, count: int, role: VarRole = VarRole.AUX) -> list[VariableId]:
        """Allocate `count` fresh ids with the given role."""
        first = self.allocate_block(count, role)
        return list(range(first, first + count))

    def allocate_block(self, count: int, role: VarRole = VarRole.AUX) -> VariableId:
        """Allocate `count` consecutive ids and return the first one."""
        if count < 0:
            raise EncodingError(f"cannot allocate {count} variables")
        first = self._max + 1
        self._max += count
        self._ledger(role).extend(range(first, self._max + 1))
        return first

    def new_var(self, role: VarRole = VarRole.AUX) -> VariableId:
        """Allocate a single fresh id."""
        return self.allocate_block(1, role)

    def declare(self, ids: Sequence[VariableId], role: VarRole = VarRole.INPUT) -> None:
        """Register externally chosen ids, e.g. the inputs handed to an encoder.

        Raises:
            EncodingError: If an id is not positive, repeats, or was already
                handed out by this pool.
        """
        if not isinstance(ids, range) and len(set(ids)) != len(ids):
            raise EncodingError("duplicate variables")
        if len(ids) == 0:
            return
        low = min(ids)
        if low < 1:
            raise EncodingError(f"variable ids must be positive, got {low}")
        if low <= self._max:
            raise EncodingError(f"variable {low} is already allocated")
        self._ledger(role).extend(ids)
        self._max = max(self._max, max(ids))


def allocate_vars(pool: VariablePool, count: int, role: VarRole = VarRole.AUX) -> list[int]:
    """Allocate `count` fresh, monotonically increasing ids from `pool`.

    Args:
        pool: Pool to allocate from.
        count: Number of ids (may be 0).
        role: Role recorded for every new id.

    Returns:
        The new ids in increasing order.
    """
    return pool.allocate(count, role)
