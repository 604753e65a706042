"""Exception hierarchy and step budgets.

Every potentially long-running algebraic loop (basis completion, Mora
reduction, saturation, multiplicity peeling) charges steps against a Budget,
so nontermination risk surfaces as an explicit BudgetExceededError instead of
a hang.
"""

from __future__ import annotations

import os


class LebettiError(Exception):
    """Base class for all library errors."""


class ParseError(LebettiError):
    """Malformed polynomial text; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnknownVariableError(ParseError):
    pass


class ExponentOverflowError(LebettiError):
    """An exponent left the supported machine-word range."""


class VariableMismatchError(LebettiError):
    """Polynomials over different variable lists or fields were mixed."""


class BudgetExceededError(LebettiError):
    """A step budget was exhausted before the computation finished."""


class NonGenericityError(LebettiError):
    """The input escapes the genericity hypotheses (e.g. a hypersurface
    vanishing on a cycle component, or a slice that is not zero-dimensional).
    """


class DualityHypothesisError(LebettiError):
    """A quadruple was rejected because dim coker(can) != dim ker(var)."""


DEFAULT_BUDGET_ENV = "LEBETTI_BUDGET"
DEFAULT_BUDGET = 10**6


def default_budget_limit() -> int:
    raw = os.environ.get(DEFAULT_BUDGET_ENV)
    if raw is None:
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError as exc:
        raise LebettiError(f"invalid {DEFAULT_BUDGET_ENV}={raw!r}") from exc
    if value <= 0:
        raise LebettiError(f"{DEFAULT_BUDGET_ENV} must be positive")
    return value


class Budget:
    """Mutable counter of algebraic reduction steps shared by one pipeline run."""

    def __init__(self, limit: int | None = None):
        self.limit = default_budget_limit() if limit is None else limit
        if self.limit <= 0:
            raise LebettiError("budget limit must be positive")
        self.used = 0

    def spend(self, amount: int = 1) -> None:
        self.used += amount
        if self.used > self.limit:
            raise BudgetExceededError(
                f"step budget exhausted ({self.used} > {self.limit})"
            )

    def __repr__(self) -> str:  # pragma: no cover
        return f"Budget(used={self.used}, limit={self.limit})"
