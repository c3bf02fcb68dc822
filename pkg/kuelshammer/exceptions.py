"""
Exceptions raised by kuelshammer.

Plain argument problems (even q, bad indices, dimension mismatches) raise
ValueError. Failed internal checks never do; they raise InvariantViolation or
one of the more specific classes below. The classes below mark outcomes the CLI maps to exit codes.
"""
from typing import Any, Optional


class KuelshammerError(Exception):
    """Base class for all kuelshammer errors."""

    exit_code = 1


class MethodInapplicable(KuelshammerError):
    """The dim J/J^2 criterion does not apply to this input (defect too small)."""

    exit_code = 2


class ResourceLimit(KuelshammerError):
    """A configured size guard was exceeded."""

    exit_code = 3


class TableParseError(KuelshammerError):
    """An algebra table document could not be parsed."""

    exit_code = 4


class DegenerateForm(KuelshammerError):
    """The bilinear form has a singular Gram matrix."""


class InvariantViolation(KuelshammerError):
    """An internal consistency check failed (exit code 1, like every assertion failure)."""


class LedgerMismatch(KuelshammerError):
    """Idempotent axioms, block additivity or route agreement failed."""


class DichotomyViolation(KuelshammerError):
    """A principal dihedral block produced dim J/J^2 outside {2, 3}."""


class ValidationFailure(KuelshammerError):
    """An algebra table violates an axiom; ``report`` holds the witness."""

    def __init__(self, message: str, report: Optional[Any] = None):
        super().__init__(message)
        self.report = report
