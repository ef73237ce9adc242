"""Exception hierarchy.

Every error carries a stable ``code`` matching the invariant that failed, so
the CLI can report it verbatim.
"""

from __future__ import annotations


class GraphStabError(Exception):
    """Base class for all library errors."""

    code = "GraphStabError"

    def __str__(self) -> str:
        msg = super().__str__()
        return f"{self.code}: {msg}" if msg else self.code


class ParseError(GraphStabError):
    code = "ParseError"


class ValidationError(GraphStabError):
    """Raised when an input violates a structural invariant."""

    code = "ValidationError"

    def __init__(self, message: str = "", code: str | None = None) -> None:
        super().__init__(message)
        if code is not None:
            self.code = code


class ZeroInverse(ValidationError):
    code = "ZeroInverse"


class ModulusMismatch(ValidationError):
    code = "ModulusMismatch"


class NotPrime(ValidationError):
    code = "NotPrime"


class ReduciblePolynomial(ValidationError):
    code = "ReduciblePolynomial"


class DegenerateForm(ValidationError):
    code = "DegenerateForm"


class DimensionMismatch(ValidationError):
    code = "DimensionMismatch"


class NotSelfOrthogonal(ValidationError):
    code = "NotSelfOrthogonal"


class NotSelfDual(ValidationError):
    code = "NotSelfDual"


class RankDeficientB(ValidationError):
    code = "RankDeficientB"


class WrongCharacteristic(ValidationError):
    code = "WrongCharacteristic"


class BudgetExceeded(GraphStabError):
    code = "BudgetExceeded"

    def __init__(self, required: int, budget: int) -> None:
        super().__init__(f"enumeration needs {required} items, budget is {budget}")
        self.required = required
        self.budget = budget


class OracleBudgetExceeded(BudgetExceeded):
    code = "OracleBudgetExceeded"


class InconsistentEnumerator(GraphStabError):
    code = "InconsistentEnumerator"
