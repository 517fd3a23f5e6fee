"""Exception hierarchy for cardcnf."""


class CardCnfError(Exception):
    """Base class for all cardcnf errors."""


class EncodingError(CardCnfError, ValueError):
    """Invalid encoder input, parameters, or clause."""


class DimacsError(CardCnfError, ValueError):
    """Malformed DIMACS input.

    Attributes:
        line: 1-based line number where the problem was detected
    """

    def __init__(self, message: str, line: int) -> None:
        super().__init__(f"line {line}: {message}")
        self.message = message
        self.line = line


class FamilyError(CardCnfError, ValueError):
    """A set family cannot be built with the requested parameters."""


class TransversalError(FamilyError):
    """Random Hall-family sampling did not produce a valid family.

    Attributes:
        attempts: Number of sampled families that failed the check
    """

    def __init__(self, message: str, attempts: int) -> None:
        super().__init__(message)
        self.attempts = attempts


class StrategyError(CardCnfError, ValueError):
    """A verification strategy cannot be applied to the given encoding."""


class InstanceError(CardCnfError, ValueError):
    """Infeasible benchmark family parameters."""


class SolverError(CardCnfError, RuntimeError):
    """The external solver could not be started."""
