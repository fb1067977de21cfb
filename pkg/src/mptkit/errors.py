"""Exception hierarchy shared by every mptkit module."""

from __future__ import annotations


class MptError(Exception):
    """Base class for all mptkit errors."""


class InputError(MptError, ValueError):
    """Malformed or out-of-range input."""


class FormatError(InputError):
    """A text file could not be parsed.

    ``source`` names the file (or ``<stdin>``) and ``line`` is 1-based.
    """

    def __init__(self, source: str, line: int, message: str):
        self.source = source
        self.line = line
        self.message = message
        super().__init__(f"{source}:{line}: {message}")


class PreconditionError(MptError, ValueError):
    """Input is well formed but violates an operation's precondition."""


class OracleLimitError(MptError):
    """An exhaustive oracle refused an instance above its size limit."""

    def __init__(self, what: str, n: int, limit: int):
        self.n = n
        self.limit = limit
        super().__init__(f"{what}: n={n} exceeds oracle limit {limit}")


class OrderViolationError(PreconditionError):
    """Raised when an operation needs an MPT-order and got a violated one."""

    def __init__(self, violation):
        self.violation = violation
        super().__init__(f"vertex order is not an {violation.kind}: witness {violation.witness}")
