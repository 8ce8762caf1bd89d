"""Monomial ideals in canonical minimal-generator form."""

from __future__ import annotations

from functools import reduce
from typing import Iterable, Sequence

from .errors import CapExceeded, ContextMismatch, DegenerateIdeal, InvalidPrime, limits
from .ring import (
    Exps,
    Monomial,
    RingContext,
    exp_divides,
    exp_lcm,
    exp_mul,
    exp_quotient,
    format_exps,
)


def _sort_key(e: Exps):
    # graded, then lexicographically larger exponent vectors first (x > y > ...)
    return (sum(e), tuple(-x for x in e))


def minimalize(exps: Iterable[Exps]) -> tuple[Exps, ...]:
    """Drop every exponent vector divisible by another; return them in canonical order."""
    cands = sorted(set(exps), key=_sort_key)
    kept: list[Exps] = []
    for e in cands:
        # a divisor has degree <= deg(e), so it is already in `kept`
        for g in kept:
            if exp_divides(g, e):
                break
        else:
            kept.append(e)
    return tuple(kept)


def _capped(gens: tuple[Exps, ...], what: str) -> tuple[Exps, ...]:
    cap = limits().gens
    if len(gens) > cap:
        raise CapExceeded("gens", cap, len(gens))
    return gens


class MonomialIdeal:
    """A monomial ideal stored as its minimal generating set G(I).

    The empty generator list is the zero ideal and ``[1]`` is the unit ideal.
    Equality is structural on the canonical generator list.
    """

    __slots__ = ("ctx", "gens", "_hash")

    def __init__(self, ctx: RingContext, gens: Iterable[Monomial | Sequence[int]] = ()):
        raw = []
        for g in gens:
            if isinstance(g, Monomial):
                if g.ctx != ctx:
                    raise ContextMismatch(f"generator {g} is not in {ctx}")
                raw.append(g.exps)
            else:
                raw.append(Monomial(ctx, g).exps)
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "gens", _capped(minimalize(raw), "gens"))
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _from_min(cls, ctx: RingContext, gens: tuple[Exps, ...]) -> MonomialIdeal:
        # `gens` must already be minimal and canonically sorted
        obj = object.__new__(cls)
        object.__setattr__(obj, "ctx", ctx)
        object.__setattr__(obj, "gens", gens)
        object.__setattr__(obj, "_hash", None)
        return obj

    @classmethod
    def _build(cls, ctx: RingContext, exps: Iterable[Exps]) -> MonomialIdeal:
        return cls._from_min(ctx, _capped(minimalize(exps), "gens"))

    @classmethod
    def zero(cls, ctx: RingContext) -> MonomialIdeal:
        return cls._from_min(ctx, ())

    @classmethod
    def unit(cls, ctx: RingContext) -> MonomialIdeal:
        return cls._from_min(ctx, ((0,) * ctx.n,))

    @classmethod
    def maximal(cls, ctx: RingContext) -> MonomialIdeal:
        return cls._build(ctx, (m.exps for m in ctx.gens()))

    def __setattr__(self, name, value):
        raise AttributeError("MonomialIdeal is immutable")

    @property
    def generators(self) -> list[Monomial]:
        return [Monomial._raw(self.ctx, g) for g in self.gens]

    def __len__(self) -> int:
        return len(self.gens)

    def __iter__(self):
        return iter(self.generators)

    def __contains__(self, f: Monomial) -> bool:
        return contains(self, f)

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.gens == other.gens and self.ctx == other.ctx

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.ctx.variables, self.gens)))
        return self._hash

    def __add__(self, other: MonomialIdeal) -> MonomialIdeal:
        return ideal_sum(self, other)

    def __mul__(self, other: MonomialIdeal) -> MonomialIdeal:
        return product(self, other)

    def __pow__(self, s: int) -> MonomialIdeal:
        return power(self, s)

    def __and__(self, other: MonomialIdeal) -> MonomialIdeal:
        return intersect([self, other])

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return len(self.gens) == 1 and not any(self.gens[0])

    def is_proper_nonzero(self) -> bool:
        return bool(self.gens) and not self.is_unit()

    def support(self) -> frozenset[int]:
        return supp(self)

    def __str__(self) -> str:
        return format_ideal(self)

    def __repr__(self) -> str:
        return f"MonomialIdeal({format_ideal(self)!r})"


class MonomialPrime:
    """A prime generated by a nonempty subset of the variables."""

    __slots__ = ("ctx", "vars")

    def __init__(self, ctx: RingContext, vars: Iterable[int | str]):
        idx = frozenset(ctx.var_index(v) for v in vars)
        if not idx:
            raise InvalidPrime("a monomial prime needs at least one variable")
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "vars", idx)

    @classmethod
    def maximal(cls, ctx: RingContext) -> MonomialPrime:
        return cls(ctx, range(ctx.n))

    def __setattr__(self, name, value):
        raise AttributeError("MonomialPrime is immutable")

    def __eq__(self, other):
        if not isinstance(other, MonomialPrime):
            return NotImplemented
        return self.vars == other.vars and self.ctx == other.ctx

    def __hash__(self):
        return hash((self.ctx.variables, self.vars))

    def sort_key(self):
        return (len(self.vars), sorted(self.vars))

    def is_maximal(self) -> bool:
        return len(self.vars) == self.ctx.n

    def names(self) -> list[str]:
        return [self.ctx.variables[i] for i in sorted(self.vars)]

    def as_ideal(self) -> MonomialIdeal:
        return MonomialIdeal(self.ctx, (self.ctx.var(i) for i in self.vars))

    def __str__(self) -> str:
        return "(" + ", ".join(self.names()) + ")"

    def __repr__(self) -> str:
        return f"MonomialPrime({self})"


def _same(*ideals: MonomialIdeal) -> RingContext:
    ctx = ideals[0].ctx
    for other in ideals[1:]:
        if other.ctx != ctx:
            raise ContextMismatch(f"ideals live in different rings: {ctx} vs {other.ctx}")
    return ctx


def from_generators(ctx: RingContext, gens: Iterable[Monomial]) -> MonomialIdeal:
    return MonomialIdeal(ctx, gens)


def contains(I: MonomialIdeal, f: Monomial) -> bool:
    if f.ctx != I.ctx:
        raise ContextMismatch(f"{f} is not in {I.ctx}")
    e = f.exps
    return any(exp_divides(g, e) for g in I.gens)


def _contains_exps(gens: tuple[Exps, ...], e: Exps) -> bool:
    for g in gens:
        if exp_divides(g, e):
            return True
    return False


def is_subset(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    """True when I is contained in J."""
    _same(I, J)
    return all(_contains_exps(J.gens, g) for g in I.gens)


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    ctx = _same(I, J)
    return MonomialIdeal._build(ctx, I.gens + J.gens)


def product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    ctx = _same(I, J)
    return MonomialIdeal._build(ctx, (exp_mul(a, b) for a in I.gens for b in J.gens))


def power(I: MonomialIdeal, s: int) -> MonomialIdeal:
    """I^s by repeated multiplication, minimalizing after every step."""
    if not isinstance(s, int) or s < 1:
        raise ValueError(f"power must be a positive integer, got {s!r}")
    out = I
    for _ in range(s - 1):
        out = product(out, I)
    return out


def colon_monomial(I: MonomialIdeal, f: Monomial) -> MonomialIdeal:
    """(I : f), generated by the quotients g / gcd(g, f)."""
    if f.ctx != I.ctx:
        raise ContextMismatch(f"{f} is not in {I.ctx}")
    fe = f.exps
    return MonomialIdeal._build(I.ctx, (exp_quotient(g, fe) for g in I.gens))


def colon_ideal(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    ctx = _same(I, J)
    if J.is_zero():
        raise DegenerateIdeal("colon by the zero ideal")
    return intersect([colon_monomial(I, Monomial._raw(ctx, g)) for g in J.gens])


def _intersect2(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    if I.is_unit():
        return J
    if J.is_unit():
        return I
    return MonomialIdeal._build(I.ctx, (exp_lcm(a, b) for a in I.gens for b in J.gens))


def intersect(ideals: Sequence[MonomialIdeal]) -> MonomialIdeal:
    """Intersection, folding pairwise from the left."""
    ideals = list(ideals)
    if not ideals:
        raise ValueError("intersect needs at least one ideal")
    _same(*ideals)
    return reduce(_intersect2, ideals)


def radical(I: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal._build(I.ctx, (tuple(1 if e else 0 for e in g) for g in I.gens))


def is_squarefree(I: MonomialIdeal) -> bool:
    return all(e <= 1 for g in I.gens for e in g)


def delete_variable(I: MonomialIdeal, i: int | str) -> MonomialIdeal:
    """Set x_i to zero: keep only the generators not divisible by x_i."""
    i = I.ctx.var_index(i)
    return MonomialIdeal._from_min(I.ctx, tuple(g for g in I.gens if not g[i]))


def localize_at(I: MonomialIdeal, S: Iterable[int | str]) -> MonomialIdeal:
    """Set every variable outside S to 1; the result lives in the ring on S."""
    idx = sorted({I.ctx.var_index(v) for v in S})
    if not idx:
        raise ValueError("localize_at needs a nonempty set of variables")
    sub = I.ctx.sub(idx)
    return MonomialIdeal._build(sub, (tuple(g[i] for i in idx) for g in I.gens))


def supp(I: MonomialIdeal) -> frozenset[int]:
    return frozenset(i for g in I.gens for i, e in enumerate(g) if e)


def saturate(I: MonomialIdeal, f: Monomial) -> MonomialIdeal:
    """(I : f^infinity), iterating (I : f) to a fixed point."""
    cur = I
    while True:
        nxt = colon_monomial(cur, f)
        if nxt == cur:
            return cur
        cur = nxt


def equals(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    _same(I, J)
    return I.gens == J.gens


def prime_minus(p: MonomialPrime, i: int | str) -> MonomialPrime:
    i = p.ctx.var_index(i)
    if i not in p.vars:
        raise InvalidPrime(f"{p.ctx.variables[i]} is not a generator of {p}")
    if len(p.vars) < 2:
        raise InvalidPrime(f"removing {p.ctx.variables[i]} from {p} leaves no variables")
    return MonomialPrime(p.ctx, p.vars - {i})


def principal(f: Monomial) -> MonomialIdeal:
    return MonomialIdeal._from_min(f.ctx, (f.exps,))


def format_ideal(I: MonomialIdeal) -> str:
    if not I.gens:
        return "(0)"
    return "(" + ", ".join(format_exps(I.ctx, g) for g in I.gens) + ")"
