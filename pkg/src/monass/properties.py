"""Seeded randomized property suites.

Each suite draws random instances from a seeded ``random.Random``, checks one
structural statement on every instance and returns a :class:`SuiteResult`.
Suites guarded by a precondition keep drawing until ``cases`` applicable
instances were seen or ``max_draws`` is reached.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

from .assoc import (
    AssSet,
    ass_from_decomposition,
    ass_primes,
    corner_elements,
    corner_elements_exhaustive,
    has_maximal_associated,
    irreducible_decomposition,
)
from .criteria import (
    check_corner_divisibility,
    check_dichotomy,
    check_squarefree_maximal,
    find_chain,
    infer_split,
    verify_split_identities,
)
from .errors import CriterionViolation
from .ideal import MonomialIdeal, MonomialPrime, colon_monomial, contains, intersect, power, supp
from .ring import Monomial, RingContext

VARS = "xyzwuv"


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    draws: int = 0
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __str__(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.name}: {self.cases} cases, {len(self.violations)} violations"


def ring(n: int) -> RingContext:
    return RingContext(VARS[:n])


def random_ideal(rng: random.Random, n: int | None = None, max_gens: int = 5, max_exp: int = 4,
                 ctx: RingContext | None = None) -> MonomialIdeal:
    """A random proper nonzero monomial ideal."""
    if ctx is None:
        ctx = ring(n or rng.randint(1, 4))
    while True:
        k = rng.randint(1, max_gens)
        gens = [tuple(rng.randint(0, max_exp) for _ in range(ctx.n)) for _ in range(k)]
        I = MonomialIdeal._build(ctx, gens)
        if I.is_proper_nonzero():
            return I


def random_monomial(rng: random.Random, ctx: RingContext, max_exp: int = 4) -> Monomial:
    return ctx.monomial([rng.randint(0, max_exp) for _ in range(ctx.n)])


def _run(name: str, cases: int, seed: int, body: Callable[[random.Random], str | None | bool],
         max_draws: int | None = None) -> SuiteResult:
    """``body`` returns a violation message, None when fine, or False when not applicable."""
    rng = random.Random(seed)
    res = SuiteResult(name)
    max_draws = max_draws or cases * 50
    while res.cases < cases and res.draws < max_draws:
        res.draws += 1
        try:
            out = body(rng)
        except CriterionViolation as exc:
            out = str(exc)
        if out is False:
            continue
        res.cases += 1
        if out:
            res.violations.append(out)
    if res.cases < cases:
        res.violations.append(f"only {res.cases} applicable instances in {res.draws} draws")
    return res


# -- oracles ----------------------------------------------------------------------


def suite_oracle_agreement(cases: int = 300, seed: int = 0) -> SuiteResult:
    def body(rng):
        I = random_ideal(rng)
        a, b = ass_primes(I), ass_from_decomposition(I)
        if a != b:
            return f"{I}: localization {a} vs decomposition {b}"
        if intersect([c.as_ideal() for c in irreducible_decomposition(I)]) != I:
            return f"{I}: decomposition does not intersect back"
        return None

    return _run("oracle agreement", cases, seed, body)


def suite_support_equality(cases: int = 200, seed: int = 1) -> SuiteResult:
    def body(rng):
        I = random_ideal(rng)
        covered = frozenset().union(*(p.vars for p in ass_primes(I)))
        if covered != supp(I):
            return f"{I}: primes cover {sorted(covered)}, support {sorted(supp(I))}"
        return None

    return _run("support equality", cases, seed, body)


def suite_exact_sequence(cases: int = 200, seed: int = 2) -> SuiteResult:
    """Ass(I:f) within Ass(I) within Ass(I:f) union Ass(I,f) for f outside I."""

    def body(rng):
        I = random_ideal(rng)
        f = random_monomial(rng, I.ctx)
        if contains(I, f) or f.is_one():
            return False
        A = set(ass_primes(I))
        C = set(ass_primes(colon_monomial(I, f)))
        S = set(ass_primes(I + MonomialIdeal(I.ctx, [f])))
        if not C <= A:
            return f"{I}, f={f}: Ass(I:f) not inside Ass(I)"
        if not A <= C | S:
            return f"{I}, f={f}: Ass(I) not inside Ass(I:f) + Ass(I,f)"
        return None

    return _run("exact-sequence inclusions", cases, seed, body)


def _embed(I: MonomialIdeal, big: RingContext, offset: int) -> MonomialIdeal:
    pad = big.n - I.ctx.n - offset
    return MonomialIdeal._build(big, ((0,) * offset + g + (0,) * pad for g in I.gens))


def suite_disjoint_sum(cases: int = 200, seed: int = 3) -> SuiteResult:
    def body(rng):
        n1 = rng.randint(1, 2)
        n2 = rng.randint(1, 2)
        big = ring(n1 + n2)
        I1 = random_ideal(rng, ctx=RingContext(big.variables[:n1]), max_gens=3, max_exp=3)
        I2 = random_ideal(rng, ctx=RingContext(big.variables[n1:]), max_gens=3, max_exp=3)
        total = _embed(I1, big, 0) + _embed(I2, big, n1)
        expected = AssSet(
            MonomialPrime(big, set(p1.vars) | {n1 + i for i in p2.vars})
            for p1 in ass_primes(I1)
            for p2 in ass_primes(I2)
        )
        got = ass_primes(total)
        if got != expected:
            return f"{I1} + {I2}: {got} vs {expected}"
        return None

    return _run("disjoint-variable sums", cases, seed, body)


# -- corners ----------------------------------------------------------------------


def suite_corner_definition(cases: int = 200, seed: int = 4) -> SuiteResult:
    def body(rng):
        I = random_ideal(rng)
        gen = corner_elements(I)
        brute = corner_elements_exhaustive(I)
        brute_set = {w.monomial for w in brute}
        for w in brute:
            f = w.monomial
            if contains(I, f):
                return f"{I}: corner {f} lies in I"
            for x in I.ctx.gens():
                if not contains(I, f * x):
                    return f"{I}: {x}*{f} not in I"
        if not {w.monomial for w in gen} <= brute_set:
            return f"{I}: socle generators not all found by brute force"
        if bool(gen) != bool(brute) or bool(gen) != has_maximal_associated(I):
            return f"{I}: corner existence disagrees with the socle test"
        if bool(gen) != (MonomialPrime.maximal(I.ctx) in ass_primes(I)):
            return f"{I}: corners disagree with ass_primes"
        return None

    return _run("corner definition", cases, seed, body)


def suite_corner_divisibility(cases: int = 200, seed: int = 5) -> SuiteResult:
    def body(rng):
        n = rng.randint(2, 3)
        I = random_ideal(rng, n=n, max_gens=4, max_exp=3)
        t = rng.randint(1, 2)
        It = power(I, t)
        if not has_maximal_associated(It):
            return False
        corners = corner_elements_exhaustive(It)
        fired = False
        for i in range(n):
            for w in corners:
                rep = check_corner_divisibility(I, t, w.monomial, i)
                if rep.all_verified:
                    fired = True
        return None if fired else False

    return _run("corner divisibility", cases, seed, body, max_draws=cases * 200)


# -- criteria ---------------------------------------------------------------------


def _chain_candidate(rng: random.Random) -> MonomialIdeal:
    n = rng.randint(2, 4)
    ctx = ring(n)
    k = rng.randint(1, 6)
    rows = [[rng.randint(0, 5) for _ in range(n)] for _ in range(k)]
    if rng.random() < 0.7:
        i, j = rng.sample(range(n), 2)
        ci = sorted((r[i] for r in rows), reverse=True)
        cj = sorted((r[j] for r in rows), reverse=True)
        for r, a, b in zip(rows, ci, cj):
            r[i], r[j] = a, b
    return MonomialIdeal._build(ctx, (tuple(r) for r in rows))


def suite_chain_soundness(cases: int = 500, seed: int = 6) -> SuiteResult:
    def body(rng):
        I = _chain_candidate(rng)
        if not I.is_proper_nonzero():
            return False
        w = find_chain(I)
        if w is None:
            return False
        if has_maximal_associated(I):
            return f"{I}: chain witness {w} but m associated"
        return None

    return _run("chain soundness", cases, seed, body)


def _random_split(rng: random.Random, max_exp: int = 3):
    """Random L = uI + J with u in its own block of variables."""
    nu = rng.randint(1, 2)
    nr = rng.randint(1, 3)
    ctx = ring(nu + nr)
    u = ctx.monomial([rng.randint(1, 2) for _ in range(nu)] + [0] * nr)

    def block(max_gens):
        k = rng.randint(0, max_gens)
        return [tuple([0] * nu + [rng.randint(0, max_exp) for _ in range(nr)]) for _ in range(k)]

    I = MonomialIdeal._build(ctx, block(3))
    J = MonomialIdeal._build(ctx, block(3))
    if I.is_zero() or I.is_unit() or J.is_unit():
        return None
    uI = [tuple(a + b for a, b in zip(g, u.exps)) for g in I.gens]
    L = MonomialIdeal._build(ctx, uI + list(J.gens))
    return L, u


def suite_split_identities(cases: int = 200, seed: int = 7) -> SuiteResult:
    def body(rng):
        made = _random_split(rng)
        if made is None:
            return False
        L, u = made
        d = infer_split(L, u)
        t = rng.randint(1, 3)
        verify_split_identities(d, t)
        return None

    return _run("split identities", cases, seed, body)


def suite_dichotomy(cases: int = 200, seed: int = 8) -> SuiteResult:
    def body(rng):
        made = _random_split(rng)
        if made is None:
            return False
        L, u = made
        d = infer_split(L, u)
        t = rng.randint(1, 3)
        rep = check_dichotomy(d, t)
        return None if rep.all_verified else False

    return _run("dichotomy", cases, seed, body, max_draws=cases * 200)


def suite_squarefree(cases: int = 500, seed: int = 9) -> SuiteResult:
    def body(rng):
        n = rng.randint(1, 5)
        ctx = RingContext(f"x{i}" for i in range(1, n + 1))
        if rng.random() < 0.1:
            I = MonomialIdeal.maximal(ctx)
        else:
            I = random_ideal(rng, ctx=ctx, max_gens=5, max_exp=1)
        rep = check_squarefree_maximal(I)
        if rep.oracle_agreement is False:
            return f"{I}: decomposition oracle disagrees"
        return None

    return _run("squarefree characterization", cases, seed, body)


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "oracle": suite_oracle_agreement,
    "support": suite_support_equality,
    "exact-sequence": suite_exact_sequence,
    "disjoint-sum": suite_disjoint_sum,
    "squarefree": suite_squarefree,
    "chain": suite_chain_soundness,
    "split": suite_split_identities,
    "dichotomy": suite_dichotomy,
    "corner-div": suite_corner_divisibility,
    "corner": suite_corner_definition,
}


def run_all(seed: int = 0, scale: float = 1.0) -> list[SuiteResult]:
    out = []
    for k, (name, fn) in enumerate(SUITES.items()):
        default = fn.__defaults__[0]
        out.append(fn(cases=max(1, int(default * scale)), seed=seed * 1000 + k))
    return out
