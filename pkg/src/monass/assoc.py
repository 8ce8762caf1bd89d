"""Associated primes of monomial ideals.

Two independent routes are provided:

* :func:`ass_primes` tests every candidate prime by localizing and applying
  the socle test ``(I : m) != I`` in the smaller ring;
* :func:`ass_from_decomposition` reads the primes off an irredundant
  irreducible decomposition produced by coprime splitting.

Corner elements (monomials f outside I with x_i f in I for every i) witness
the maximal ideal; :func:`corner_elements_exhaustive` finds them by brute
force and serves as an oracle for :func:`corner_elements`.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import CapExceeded, DegenerateIdeal, limits
from .ideal import (
    MonomialIdeal,
    MonomialPrime,
    _contains_exps,
    colon_monomial,
    intersect,
    localize_at,
    minimalize,
    supp,
)
from .ring import Exps, Monomial, RingContext, format_exps


def _require_proper(I: MonomialIdeal) -> None:
    if I.is_zero():
        raise DegenerateIdeal("the zero ideal has no finite set of monomial associated primes here")
    if I.is_unit():
        raise DegenerateIdeal("the unit ideal has no associated primes")


@dataclass(frozen=True)
class AssSet:
    """A set of monomial primes in canonical order (by size, then variable indices)."""

    primes: tuple[MonomialPrime, ...]

    def __init__(self, primes: Iterable[MonomialPrime]):
        uniq = sorted(set(primes), key=MonomialPrime.sort_key)
        object.__setattr__(self, "primes", tuple(uniq))

    def __iter__(self) -> Iterator[MonomialPrime]:
        return iter(self.primes)

    def __len__(self) -> int:
        return len(self.primes)

    def __contains__(self, p) -> bool:
        return p in self.primes

    def __eq__(self, other):
        if not isinstance(other, AssSet):
            return NotImplemented
        return set(self.primes) == set(other.primes)

    def __hash__(self):
        return hash(frozenset(self.primes))

    def contains_maximal(self) -> bool:
        return any(p.is_maximal() for p in self.primes)

    def to_lists(self) -> list[list[str]]:
        return [p.names() for p in self.primes]

    def __str__(self) -> str:
        return "{" + ", ".join(str(p) for p in self.primes) + "}"


# -- socle test and corners ----------------------------------------------------


def socle_colon(I: MonomialIdeal) -> MonomialIdeal:
    """(I : m), the intersection of the colons (I : x_i)."""
    _require_proper(I)
    return intersect([colon_monomial(I, x) for x in I.ctx.gens()])


def has_maximal_associated(I: MonomialIdeal) -> bool:
    _require_proper(I)
    if len(supp(I)) < I.ctx.n:
        # (I : x_i) = I for a variable outside the support
        return False
    return socle_colon(I) != I


@dataclass(frozen=True)
class CornerWitness:
    """A monomial f with f not in I and x_i f in I for every variable x_i."""

    monomial: Monomial

    @classmethod
    def certify(cls, I: MonomialIdeal, f: Monomial) -> CornerWitness:
        if not is_corner(I, f):
            raise ValueError(f"{f} is not a corner element of {I}")
        top = _max_exponents(I)
        if any(e > t - 1 for e, t in zip(f.exps, top)):
            raise ValueError(f"{f} exceeds the corner exponent bound {top}")
        return cls(f)

    def __str__(self) -> str:
        return str(self.monomial)


def is_corner(I: MonomialIdeal, f: Monomial) -> bool:
    """Check the corner-element definition directly."""
    e = f.exps
    if _contains_exps(I.gens, e):
        return False
    for i in range(I.ctx.n):
        bumped = e[:i] + (e[i] + 1,) + e[i + 1 :]
        if not _contains_exps(I.gens, bumped):
            return False
    return True


def _max_exponents(I: MonomialIdeal) -> Exps:
    return tuple(max(col) for col in zip(*I.gens))


def corner_elements(I: MonomialIdeal) -> list[CornerWitness]:
    """Minimal generators of (I : m) that are not in I."""
    soc = socle_colon(I)
    return [
        CornerWitness.certify(I, Monomial._raw(I.ctx, g))
        for g in soc.gens
        if not _contains_exps(I.gens, g)
    ]


def corner_elements_exhaustive(I: MonomialIdeal) -> list[CornerWitness]:
    """Every corner element, by scanning all monomials under the exponent bound.

    A corner f needs, for each i, a generator g with g | x_i f but g not dividing
    f; then g_i = f_i + 1, so f_i is at most the largest x_i-exponent in G(I)
    minus one.
    """
    _require_proper(I)
    top = _max_exponents(I)
    if any(t == 0 for t in top):
        return []
    size = math.prod(top)
    cap = limits().corner_search
    if size > cap:
        raise CapExceeded("corner_search", cap, size)
    gens = I.gens
    n = I.ctx.n
    out = []
    for e in itertools.product(*(range(t) for t in top)):
        if _contains_exps(gens, e):
            continue
        for i in range(n):
            if not _contains_exps(gens, e[:i] + (e[i] + 1,) + e[i + 1 :]):
                break
        else:
            out.append(CornerWitness(Monomial._raw(I.ctx, e)))
    return out


# -- localization route --------------------------------------------------------


def is_associated(I: MonomialIdeal, p: MonomialPrime) -> bool:
    """p in Ass(R/I), via the socle test on I localized at p."""
    _require_proper(I)
    if p.ctx != I.ctx:
        raise ValueError(f"prime {p} is not in {I.ctx}")
    if not p.vars <= supp(I):
        return False
    loc = localize_at(I, p.vars)
    if loc.is_unit():
        return False
    return has_maximal_associated(loc)


def _subsets_by_size(indices: list[int]):
    for k in range(1, len(indices) + 1):
        yield from itertools.combinations(indices, k)


def ass_primes(I: MonomialIdeal) -> AssSet:
    """Ass(R/I) by testing every nonempty subset of supp(I)."""
    _require_proper(I)
    support = sorted(supp(I))
    cap = limits().subsets
    if len(support) > cap:
        raise CapExceeded("subsets", cap, len(support))
    found = []
    for sub in _subsets_by_size(support):
        loc = localize_at(I, sub)
        if not loc.is_unit() and has_maximal_associated(loc):
            found.append(MonomialPrime(I.ctx, sub))
    return AssSet(found)


# -- decomposition route -------------------------------------------------------


@dataclass(frozen=True)
class IrreducibleComponent:
    """The ideal (x_i^{a_i} : i in powers), generated by pure powers."""

    ctx: RingContext
    powers: tuple[tuple[int, int], ...]

    @classmethod
    def from_exps(cls, ctx: RingContext, a: Exps) -> IrreducibleComponent:
        return cls(ctx, tuple((i, e) for i, e in enumerate(a) if e))

    def exps(self) -> Exps:
        a = [0] * self.ctx.n
        for i, e in self.powers:
            a[i] = e
        return tuple(a)

    def as_ideal(self) -> MonomialIdeal:
        return MonomialIdeal(self.ctx, (self.ctx.var(i, e) for i, e in self.powers))

    def radical(self) -> MonomialPrime:
        return MonomialPrime(self.ctx, (i for i, _ in self.powers))

    def is_m_primary(self) -> bool:
        return len(self.powers) == self.ctx.n

    def __str__(self) -> str:
        return "(" + ", ".join(format_exps(self.ctx, _pure(self.ctx.n, i, e)) for i, e in self.powers) + ")"


def _pure(n: int, i: int, e: int) -> Exps:
    return tuple(e if j == i else 0 for j in range(n))


def _component_contains(big: Exps, small: Exps) -> bool:
    # (x_i^{small_i}) is inside (x_i^{big_i}) iff every pure power of `small`
    # is divisible by the matching pure power of `big`
    return all(b and b <= s for b, s in zip(big, small) if s)


def _irredundant(comps: Iterable[Exps]) -> frozenset[Exps]:
    # an irreducible monomial ideal containing an intersection of monomial
    # ideals contains one of them, so redundancy is plain containment
    comps = set(comps)
    return frozenset(
        c for c in comps if not any(d != c and _component_contains(c, d) for d in comps)
    )


def _pivot(gens: tuple[Exps, ...]):
    for g in gens:
        nz = [i for i, e in enumerate(g) if e]
        if len(nz) >= 2:
            return g, nz[0]
    return None


def _split(n: int, gens: tuple[Exps, ...], memo: dict, cap: int) -> frozenset[Exps]:
    hit = memo.get(gens)
    if hit is not None:
        return hit
    if len(memo) >= cap:
        raise CapExceeded("decomposition", cap, len(memo) + 1)
    piv = _pivot(gens)
    if piv is None:
        a = [0] * n
        for g in gens:
            (i,) = [j for j, e in enumerate(g) if e]
            a[i] = g[i]
        out = frozenset([tuple(a)])
    else:
        g, k = piv
        v = _pure(n, k, g[k])
        w = g[:k] + (0,) + g[k + 1 :]
        left = _split(n, minimalize(gens + (v,)), memo, cap)
        right = _split(n, minimalize(gens + (w,)), memo, cap)
        out = _irredundant(left | right)
    memo[gens] = out
    return out


@lru_cache(maxsize=1024)
def _decompose_cached(n: int, gens: tuple[Exps, ...]) -> frozenset[Exps]:
    return _split(n, gens, {}, limits().decomposition)


def irreducible_decomposition(I: MonomialIdeal) -> list[IrreducibleComponent]:
    """Irredundant irreducible decomposition by coprime splitting.

    If a minimal generator factors as v*w with v = x_k^{a_k} its first pure
    power and w the rest, then I = (I + (v)) and (I + (w)) intersect to I.
    Recursion stops when all generators are pure powers.  Results are
    memoized on the canonical generator list.
    """
    _require_proper(I)
    comps = _decompose_cached(I.ctx.n, I.gens)
    ordered = sorted(comps, key=lambda a: (sum(1 for e in a if e), [i for i, e in enumerate(a) if e], a))
    return [IrreducibleComponent.from_exps(I.ctx, a) for a in ordered]


def clear_cache() -> None:
    _decompose_cached.cache_clear()


def ass_from_decomposition(I: MonomialIdeal) -> AssSet:
    return AssSet(c.radical() for c in irreducible_decomposition(I))


# -- powers --------------------------------------------------------------------


@dataclass(frozen=True)
class AssSequence:
    """Ass(R/I^s) for s = 1..s_max plus the empirically observed stabilization."""

    sets: tuple[AssSet, ...]

    @property
    def s_max(self) -> int:
        return len(self.sets)

    @property
    def observed_stable_from(self) -> int:
        """Smallest s with Ass(I^s) = ... = Ass(I^{s_max}); observed only, never certified."""
        s = len(self.sets)
        while s > 1 and self.sets[s - 2] == self.sets[-1]:
            s -= 1
        return s

    def maximal_pattern(self) -> list[bool]:
        return [a.contains_maximal() for a in self.sets]

    def __getitem__(self, s: int) -> AssSet:
        # 1-based, matching the exponent
        if s < 1:
            raise IndexError(s)
        return self.sets[s - 1]


def ass_sequence(I: MonomialIdeal, s_max: int) -> AssSequence:
    _require_proper(I)
    if s_max < 1:
        raise ValueError("s_max must be at least 1")
    out = []
    Is = I
    for s in range(1, s_max + 1):
        if s > 1:
            Is = Is * I
        out.append(ass_primes(Is))
    return AssSequence(tuple(out))


def maximal_in_powers(I: MonomialIdeal, s_max: int) -> list[bool]:
    """has_maximal_associated(I^s) for s = 1..s_max; cheaper than a full sequence."""
    out = []
    Is = I
    for s in range(1, s_max + 1):
        if s > 1:
            Is = Is * I
        out.append(has_maximal_associated(Is))
    return out
