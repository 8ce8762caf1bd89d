"""Ambient ring description and exact monomial arithmetic.

Monomials are exponent vectors over a :class:`RingContext`.  The hot loops in
the rest of the package work directly on the underlying tuples; the helpers
prefixed ``exp_`` are the tuple-level versions of the public operations.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import MAX_EXPONENT, ContextMismatch, ExponentOverflow, ParseError

_NAME = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")

Exps = tuple[int, ...]


@dataclass(frozen=True)
class RingContext:
    """Polynomial ring K[x_1, ..., x_n], described by its variable names."""

    variables: tuple[str, ...]

    def __init__(self, variables: Iterable[str]):
        names = tuple(variables)
        if not names:
            raise ValueError("a ring needs at least one variable")
        for name in names:
            if not isinstance(name, str) or not _NAME.match(name):
                raise ValueError(f"invalid variable name {name!r}")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        object.__setattr__(self, "variables", names)
        object.__setattr__(self, "_index", {v: i for i, v in enumerate(names)})

    @property
    def n(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ValueError(f"unknown variable {name!r} in ring {self}") from None

    def var_index(self, var: int | str) -> int:
        """Normalize a variable given by name or position to its position."""
        if isinstance(var, str):
            return self.index(var)
        if not 0 <= var < self.n:
            raise ValueError(f"variable index {var} out of range for n={self.n}")
        return var

    def one(self) -> Monomial:
        return Monomial(self, (0,) * self.n)

    def var(self, name: int | str, exponent: int = 1) -> Monomial:
        i = self.var_index(name)
        e = [0] * self.n
        e[i] = exponent
        return Monomial(self, tuple(e))

    def gens(self) -> list[Monomial]:
        return [self.var(i) for i in range(self.n)]

    def monomial(self, exps: Sequence[int]) -> Monomial:
        return Monomial(self, tuple(exps))

    def sub(self, indices: Iterable[int]) -> RingContext:
        """The ring on a subset of the variables, keeping their relative order."""
        return RingContext(self.variables[i] for i in sorted(set(indices)))

    def parse(self, text: str) -> Monomial:
        return parse_monomial(self, text)

    def __str__(self) -> str:
        return "ring " + ",".join(self.variables)

    def __repr__(self) -> str:
        return f"RingContext({list(self.variables)!r})"


class Monomial:
    """An immutable monomial x_1^{a_1} ... x_n^{a_n}."""

    __slots__ = ("ctx", "exps")

    def __init__(self, ctx: RingContext, exps: Sequence[int]):
        exps = tuple(exps)
        if len(exps) != ctx.n:
            raise ValueError(f"expected {ctx.n} exponents, got {len(exps)}")
        for e in exps:
            if not isinstance(e, int) or e < 0:
                raise ValueError(f"exponents must be nonnegative integers: {exps}")
            if e > MAX_EXPONENT:
                raise ExponentOverflow(f"exponent {e} exceeds {MAX_EXPONENT}")
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "exps", exps)

    @classmethod
    def _raw(cls, ctx: RingContext, exps: Exps) -> Monomial:
        # trusted constructor for internal results
        m = object.__new__(cls)
        object.__setattr__(m, "ctx", ctx)
        object.__setattr__(m, "exps", exps)
        return m

    def __setattr__(self, name, value):
        raise AttributeError("Monomial is immutable")

    def __eq__(self, other):
        if not isinstance(other, Monomial):
            return NotImplemented
        return self.exps == other.exps and self.ctx == other.ctx

    def __hash__(self):
        return hash((self.ctx.variables, self.exps))

    def __repr__(self):
        return f"Monomial({format_exps(self.ctx, self.exps)!r})"

    def __str__(self):
        return format_exps(self.ctx, self.exps)

    def __mul__(self, other: Monomial) -> Monomial:
        return multiply(self, other)

    def __getitem__(self, i: int) -> int:
        return self.exps[i]

    @property
    def degree(self) -> int:
        return sum(self.exps)

    def is_one(self) -> bool:
        return not any(self.exps)

    def support(self) -> frozenset[int]:
        return support(self)


def _check(a: Monomial, b: Monomial) -> None:
    if a.ctx != b.ctx:
        raise ContextMismatch(f"monomials live in different rings: {a.ctx} vs {b.ctx}")


def exp_divides(a: Exps, b: Exps) -> bool:
    return all(x <= y for x, y in zip(a, b))


def exp_lcm(a: Exps, b: Exps) -> Exps:
    return tuple(x if x > y else y for x, y in zip(a, b))


def exp_gcd(a: Exps, b: Exps) -> Exps:
    return tuple(x if x < y else y for x, y in zip(a, b))


def exp_mul(a: Exps, b: Exps) -> Exps:
    out = tuple(x + y for x, y in zip(a, b))
    if any(e > MAX_EXPONENT for e in out):
        raise ExponentOverflow(f"exponent overflow multiplying {a} by {b}")
    return out


def exp_quotient(a: Exps, f: Exps) -> Exps:
    return tuple(x - y if x > y else 0 for x, y in zip(a, f))


def divides(a: Monomial, b: Monomial) -> bool:
    _check(a, b)
    return exp_divides(a.exps, b.exps)


def lcm(a: Monomial, b: Monomial) -> Monomial:
    _check(a, b)
    return Monomial._raw(a.ctx, exp_lcm(a.exps, b.exps))


def gcd(a: Monomial, b: Monomial) -> Monomial:
    _check(a, b)
    return Monomial._raw(a.ctx, exp_gcd(a.exps, b.exps))


def multiply(a: Monomial, b: Monomial) -> Monomial:
    _check(a, b)
    return Monomial._raw(a.ctx, exp_mul(a.exps, b.exps))


def colon_quotient(a: Monomial, f: Monomial) -> Monomial:
    """Generator g of the principal colon (aR : f) = gR."""
    _check(a, f)
    return Monomial._raw(a.ctx, exp_quotient(a.exps, f.exps))


def support(a: Monomial) -> frozenset[int]:
    return frozenset(i for i, e in enumerate(a.exps) if e)


# -- text format ---------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:([A-Za-z][A-Za-z0-9_]*)|(\d+)|(\*|\^)|(\S))")


def format_exps(ctx: RingContext, exps: Exps) -> str:
    parts = []
    for name, e in zip(ctx.variables, exps):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def parse_monomial(ctx: RingContext, text: str, *, offset: int = 0, line: int = 1) -> Monomial:
    """Parse ``factor ('*' factor)*`` with ``factor := var ('^' uint)?``; ``1`` is the identity.

    A variable may repeat (``x*x`` is ``x^2``).  ``offset`` and ``line`` only
    adjust the positions reported in :class:`ParseError`.
    """
    exps = [0] * ctx.n
    s = text.rstrip()
    pos = len(s) - len(s.lstrip())
    if pos >= len(s):
        raise ParseError("empty monomial", text, offset + pos, line)
    if s[pos:] == "1":
        return ctx.one()
    expect_factor = True
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        name, num, op, junk = m.groups()
        start = m.start(m.lastindex)
        if expect_factor:
            if name is None:
                raise ParseError(f"expected a variable, found {s[start:m.end()]!r}", text, offset + start, line)
            if name not in ctx._index:
                raise ParseError(f"unknown variable {name!r}", text, offset + start, line)
            i = ctx._index[name]
            pos = m.end()
            power = 1
            m2 = _TOKEN.match(s, pos)
            if m2 and m2.group(3) == "^":
                m3 = _TOKEN.match(s, m2.end())
                if not m3 or m3.group(2) is None:
                    raise ParseError("expected an exponent after '^'", text, offset + m2.end(), line)
                power = int(m3.group(2))
                pos = m3.end()
            exps[i] += power
            if exps[i] > MAX_EXPONENT:
                raise ExponentOverflow(f"exponent of {name} exceeds {MAX_EXPONENT}")
            expect_factor = False
        else:
            if op != "*":
                raise ParseError(f"expected '*', found {s[start:m.end()]!r}", text, offset + start, line)
            pos = m.end()
            expect_factor = True
    if expect_factor:
        raise ParseError("dangling '*'", text, offset + len(s), line)
    return Monomial._raw(ctx, tuple(exps))
