"""Exception types and configurable computation caps."""

from __future__ import annotations

import contextlib
from dataclasses import dataclass, replace


class MonassError(Exception):
    """Base class for all library errors."""


class ContextMismatch(MonassError, ValueError):
    pass


class ExponentOverflow(MonassError, OverflowError):
    pass


class DegenerateIdeal(MonassError, ValueError):
    """Raised when an operation needs a proper, nonzero ideal."""


class InvalidPrime(MonassError, ValueError):
    pass


class CapExceeded(MonassError, RuntimeError):
    def __init__(self, cap: str, limit: int, observed: int | None = None):
        self.cap = cap
        self.limit = limit
        self.observed = observed
        msg = f"cap {cap!r} exceeded (limit {limit}"
        if observed is not None:
            msg += f", got {observed}"
        super().__init__(msg + ")")


class ParseError(MonassError, ValueError):
    def __init__(self, message: str, text: str = "", pos: int = 0, line: int = 1):
        self.message = message
        self.text = text
        self.line = line
        self.column = pos + 1
        super().__init__(f"line {line}, column {self.column}: {message}")


class SplitError(MonassError, ValueError):
    pass


class CriterionViolation(MonassError, AssertionError):
    """A checked statement failed on a concrete instance.

    Only raised when every hypothesis was verified, so it indicates either a
    bug here or a counterexample to the statement being checked.
    """


MAX_EXPONENT = 2**31 - 1


@dataclass(frozen=True)
class Limits:
    gens: int = 200_000
    subsets: int = 22
    corner_search: int = 2_000_000
    decomposition: int = 200_000


_limits = Limits()


def limits() -> Limits:
    return _limits


def set_limits(**kwargs) -> Limits:
    global _limits
    _limits = replace(_limits, **kwargs)
    return _limits


@contextlib.contextmanager
def override_limits(**kwargs):
    global _limits
    saved = _limits
    _limits = replace(_limits, **kwargs)
    try:
        yield _limits
    finally:
        _limits = saved
