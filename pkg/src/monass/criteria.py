"""Executable checkers for the maximal-ideal detection criteria.

Each checker verifies the hypotheses of one criterion on a concrete instance,
states the conclusion the criterion licenses, and cross-checks it against a
direct associated-primes computation.  A criterion is one-directional: a
failed hypothesis yields ``not-applicable``, never a membership claim.

Checkers that would be falsified by a concrete instance raise
:class:`~monass.errors.CriterionViolation` instead of returning.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any, Sequence

from .assoc import ass_from_decomposition, has_maximal_associated, is_associated, is_corner
from .errors import CriterionViolation, DegenerateIdeal, InvalidPrime, SplitError
from .ideal import (
    MonomialIdeal,
    MonomialPrime,
    colon_monomial,
    contains,
    delete_variable,
    equals,
    format_ideal,
    intersect,
    is_squarefree,
    power,
    principal,
    supp,
)
from .ring import Monomial, RingContext


class Conclusion(str, enum.Enum):
    EQUIVALENCE = "equivalence-established"
    NOT_ASSOCIATED = "p-not-associated"
    NOT_APPLICABLE = "not-applicable"
    # the checked statement's conclusion holds on this instance
    VERIFIED = "verified"


@dataclass
class Hypothesis:
    name: str
    verified: bool
    detail: str = ""


@dataclass
class CriterionReport:
    criterion: str
    hypotheses: list[Hypothesis] = field(default_factory=list)
    conclusion: Conclusion = Conclusion.NOT_APPLICABLE
    witnesses: list[tuple[str, Any]] = field(default_factory=list)
    oracle_agreement: bool | None = None
    facts: dict[str, Any] = field(default_factory=dict)

    def hyp(self, name: str, ok: bool, detail: str = "") -> bool:
        self.hypotheses.append(Hypothesis(name, bool(ok), detail))
        return bool(ok)

    def witness(self, label: str, value: Any) -> None:
        self.witnesses.append((label, value))

    @property
    def all_verified(self) -> bool:
        return all(h.verified for h in self.hypotheses)

    @property
    def failed(self) -> list[str]:
        return [h.name for h in self.hypotheses if not h.verified]

    @property
    def passed(self) -> bool:
        """Conclusion reached and, when computed, the oracle agrees."""
        return self.conclusion is not Conclusion.NOT_APPLICABLE and self.oracle_agreement is not False

    def to_dict(self) -> dict:
        return {
            "criterion": self.criterion,
            "hypotheses": [
                {"name": h.name, "verified": h.verified, "detail": h.detail} for h in self.hypotheses
            ],
            "conclusion": self.conclusion.value,
            "witnesses": [{"label": k, "value": _render(v)} for k, v in self.witnesses],
            "oracle_agreement": self.oracle_agreement,
            "facts": {k: _render(v) for k, v in self.facts.items()},
        }

    def transcript(self) -> str:
        lines = [f"[{self.criterion}]"]
        for h in self.hypotheses:
            mark = "ok " if h.verified else "FAIL"
            lines.append(f"  {mark} {h.name}" + (f": {h.detail}" if h.detail else ""))
        for k, v in self.witnesses:
            lines.append(f"  witness {k} = {_render(v)}")
        for k, v in self.facts.items():
            lines.append(f"  {k}: {_render(v)}")
        lines.append(f"  conclusion: {self.conclusion.value}")
        if self.oracle_agreement is not None:
            lines.append(f"  oracle agreement: {'yes' if self.oracle_agreement else 'NO'}")
        return "\n".join(lines)


def _render(v: Any) -> Any:
    if isinstance(v, MonomialIdeal):
        return format_ideal(v)
    if isinstance(v, (Monomial, MonomialPrime)):
        return str(v)
    if isinstance(v, (list, tuple)):
        return [_render(x) for x in v]
    return v


# -- shared helpers -----------------------------------------------------------


def _associated(I: MonomialIdeal, p: MonomialPrime) -> bool:
    """p in Ass(R/I), allowing degenerate I (unit: nothing; zero: only the zero prime)."""
    if I.is_unit() or I.is_zero():
        return False
    return is_associated(I, p)


def _minus_associated(J: MonomialIdeal, p: MonomialPrime, y: int) -> tuple[bool, str]:
    """Whether p minus y is in Ass(R/J), where p minus y may be the zero prime."""
    if len(p.vars) == 1:
        # the zero prime is associated only to R/(0)
        return J.is_zero(), "(0)"
    q = MonomialPrime(p.ctx, p.vars - {y})
    return _associated(J, q), str(q)


def _ymono(ctx: RingContext, steps: Sequence[tuple[int, int]]) -> Monomial:
    e = [0] * ctx.n
    for y, a in steps:
        e[y] += a
    return ctx.monomial(e)


# -- colon criteria -----------------------------------------------------------


@dataclass(frozen=True)
class ColonStep:
    var: int
    alpha: int
    aux: MonomialIdeal | None = None


@dataclass
class ColonCriterionRequest:
    """Ideal I, power t, prime p, steps (y_i, alpha_i, J_i) and the optional exponent ell."""

    ideal: MonomialIdeal
    t: int
    prime: MonomialPrime
    steps: list[ColonStep]
    ell: int | None = None

    def __post_init__(self):
        ctx = self.ideal.ctx
        if not self.ideal.is_proper_nonzero():
            raise DegenerateIdeal("the ideal must be proper and nonzero")
        if self.t < 1:
            raise ValueError("t must be at least 1")
        if self.prime.ctx != ctx:
            raise InvalidPrime("prime and ideal live in different rings")
        if not self.steps:
            raise ValueError("at least one step is required")
        steps = []
        for st in self.steps:
            if not isinstance(st, ColonStep):
                st = ColonStep(*st)
            var = ctx.var_index(st.var)
            if st.alpha < 1:
                raise ValueError(f"exponent for {ctx.variables[var]} must be at least 1")
            if st.aux is not None and st.aux.ctx != ctx:
                raise ValueError("auxiliary ideal lives in a different ring")
            steps.append(ColonStep(var, st.alpha, st.aux))
        self.steps = steps
        vs = [st.var for st in steps]
        if len(set(vs)) != len(vs):
            raise ValueError("step variables must be pairwise distinct")
        if self.ell is not None and self.ell < self.t:
            raise ValueError("ell must be at least t")


def _conclude_colon(report: CriterionReport, req: ColonCriterionRequest, It: MonomialIdeal) -> CriterionReport:
    ctx = req.ideal.ctx
    Y = _ymono(ctx, [(st.var, st.alpha) for st in req.steps])
    colon = colon_monomial(It, Y)
    report.witness("product", Y)
    report.witness("colon", colon)
    lhs = _associated(It, req.prime)
    rhs = _associated(colon, req.prime)
    report.facts["p_in_Ass(I^t)"] = lhs
    report.facts["p_in_Ass(I^t:product)"] = rhs
    ell = req.ell if req.ell is not None else req.t
    in_power = contains(power(req.ideal, ell), Y)
    report.facts[f"product_in_I^{ell}"] = in_power
    if in_power:
        report.conclusion = Conclusion.NOT_ASSOCIATED
        report.oracle_agreement = not lhs
    else:
        report.conclusion = Conclusion.EQUIVALENCE
        report.oracle_agreement = lhs == rhs
    return report


def check_colon_criterion_A(req: ColonCriterionRequest) -> CriterionReport:
    """Criterion with auxiliary ideals J_i: (I^t, y_i^a) = (J_i, y_i^a), y_i outside supp(J_i),
    and p minus y_i not associated to R/J_i."""
    ctx = req.ideal.ctx
    report = CriterionReport("colon-a")
    for st in req.steps:
        if st.aux is None:
            raise ValueError("every step needs an auxiliary ideal J_i")
        if st.var not in req.prime.vars:
            raise InvalidPrime(f"{ctx.variables[st.var]} is not a generator of {req.prime}")
    It = power(req.ideal, req.t)
    for st in req.steps:
        y = ctx.variables[st.var]
        ya = principal(ctx.var(st.var, st.alpha))
        J = st.aux
        report.hyp(f"(I^t, {y}^{st.alpha}) = (J, {y}^{st.alpha})", equals(It + ya, J + ya), f"J = {J}")
        report.hyp(f"{y} not in supp(J)", st.var not in supp(J), f"J = {J}")
        assoc, q = _minus_associated(J, req.prime, st.var)
        report.hyp(f"{q} not in Ass(R/J)", not assoc, f"J = {J}")
    if not report.all_verified:
        return report
    return _conclude_colon(report, req, It)


def check_colon_criterion_B(req: ColonCriterionRequest) -> CriterionReport:
    """Criterion with cumulative colons: p not associated to (I^t, y_1^a_1) nor to
    ((I^t : y_1^a_1 ... y_{i-1}^a_{i-1}), y_i^a_i) for i >= 2."""
    ctx = req.ideal.ctx
    report = CriterionReport("colon-b")
    if any(st.aux is not None for st in req.steps):
        raise ValueError("this criterion takes no auxiliary ideals")
    It = power(req.ideal, req.t)
    cur = It
    for k, st in enumerate(req.steps):
        y = ctx.variables[st.var]
        ya = principal(ctx.var(st.var, st.alpha))
        if k:
            prev = req.steps[k - 1]
            cur = colon_monomial(cur, ctx.var(prev.var, prev.alpha))
        target = cur + ya
        label = "(I^t" + "".join(
            f" : {ctx.variables[s.var]}^{s.alpha}" for s in req.steps[:k]
        ) + f", {y}^{st.alpha})"
        report.hyp(f"p not in Ass(R/{label})", not _associated(target, req.prime), format_ideal(target))
    if not report.all_verified:
        return report
    return _conclude_colon(report, req, It)


# -- chain criterion ------------------------------------------------------------


@dataclass(frozen=True)
class ChainWitness:
    """Coordinates (i, j) and a generator order under which both columns weakly decrease."""

    i: int
    j: int
    order: tuple[int, ...]

    def names(self, ctx: RingContext) -> tuple[str, str]:
        return ctx.variables[self.i], ctx.variables[self.j]


def find_chain(I: MonomialIdeal) -> ChainWitness | None:
    gens = I.gens
    n = I.ctx.n
    for i in range(n):
        for j in range(i + 1, n):
            order = sorted(range(len(gens)), key=lambda k: (-gens[k][i], -gens[k][j]))
            col = [gens[k][j] for k in order]
            if all(a >= b for a, b in zip(col, col[1:])):
                return ChainWitness(i, j, tuple(order))
    return None


def check_chain_criterion(I: MonomialIdeal) -> ChainWitness | None:
    """Two exponent columns that can be sorted decreasing simultaneously rule out m.

    Returns the first witness in (i, j) order, or None when the criterion is
    silent.  A witness with m associated raises CriterionViolation.
    """
    if I.ctx.n < 2:
        raise ValueError("the chain criterion needs at least two variables")
    if not I.is_proper_nonzero():
        raise DegenerateIdeal("the ideal must be proper and nonzero")
    w = find_chain(I)
    if w is not None and has_maximal_associated(I):
        raise CriterionViolation(f"chain witness {w} but m is associated to {I}")
    return w


def chain_report(I: MonomialIdeal) -> CriterionReport:
    report = CriterionReport("chain")
    w = check_chain_criterion(I)
    ctx = I.ctx
    if w is None:
        report.hyp("two exponent columns form a chain", False, "no coordinate pair qualifies")
        return report
    a, b = w.names(ctx)
    report.hyp("two exponent columns form a chain", True, f"columns {a}, {b}")
    report.witness("pair", [a, b])
    report.witness("order", [Monomial._raw(ctx, I.gens[k]) for k in w.order])
    report.conclusion = Conclusion.NOT_ASSOCIATED
    report.oracle_agreement = not MonomialPrime.maximal(ctx) in ass_from_decomposition(I)
    return report


# -- corner divisibility --------------------------------------------------------


def check_corner_divisibility(I: MonomialIdeal, t: int, z: Monomial, i: int | str) -> CriterionReport:
    """If z is an I^t-corner and m minus x_i is not associated to (I with x_i deleted)^t, then x_i | z."""
    ctx = I.ctx
    i = ctx.var_index(i)
    if z.ctx != ctx:
        raise ValueError("z lives in a different ring")
    if t < 1 or not I.is_proper_nonzero():
        raise ValueError("need t >= 1 and a proper nonzero ideal")
    report = CriterionReport("corner-div")
    It = power(I, t)
    report.hyp("z is an I^t-corner element", is_corner(It, z), str(z))
    D = delete_variable(I, i)
    Dt = D if D.is_zero() else power(D, t)
    m = MonomialPrime.maximal(ctx)
    assoc, q = _minus_associated(Dt, m, i)
    report.hyp(f"{q} not in Ass(R/(I\\{ctx.variables[i]})^t)", not assoc, f"I\\{ctx.variables[i]} = {D}")
    report.witness("deleted", D)
    if not report.all_verified:
        return report
    ok = z.exps[i] > 0
    report.facts[f"{ctx.variables[i]} divides z"] = ok
    if not ok:
        raise CriterionViolation(f"{ctx.variables[i]} does not divide the corner {z} of {I}^{t}")
    report.conclusion = Conclusion.VERIFIED
    report.oracle_agreement = True
    return report


# -- splitting L = uI + J -----------------------------------------------------


@dataclass(frozen=True)
class SplitDecomposition:
    L: MonomialIdeal
    u: Monomial
    I: MonomialIdeal
    J: MonomialIdeal

    def __post_init__(self):
        ctx = self.L.ctx
        if supp(self.I) & self.u.support() or supp(self.J) & self.u.support():
            raise SplitError(f"supp({self.u}) meets supp(I) or supp(J)")
        uI = MonomialIdeal._build(ctx, (tuple(a + b for a, b in zip(g, self.u.exps)) for g in self.I.gens))
        if uI + self.J != self.L:
            raise SplitError("L differs from uI + J")


def infer_split(L: MonomialIdeal, u: Monomial) -> SplitDecomposition:
    """Split G(L) into the generators divisible by u (giving I) and the rest (J)."""
    if u.ctx != L.ctx:
        raise ValueError("u lives in a different ring")
    if u.is_one():
        raise SplitError("u must not be 1")
    ue = u.exps
    quot, rest = [], []
    for g in L.gens:
        if all(a <= b for a, b in zip(ue, g)):
            quot.append(tuple(b - a for a, b in zip(ue, g)))
        else:
            rest.append(g)
    ctx = L.ctx
    return SplitDecomposition(L, u, MonomialIdeal._build(ctx, quot), MonomialIdeal._build(ctx, rest))


def verify_split_identities(d: SplitDecomposition, t: int) -> CriterionReport:
    """Check (L^t : u^t) = (I+J)^t, L^t = (L^t : u^t) meet (L^t, u^t), and that
    m associated to L^t forces m associated to (L^t, u^t)."""
    if t < 1:
        raise ValueError("t must be at least 1")
    ctx = d.L.ctx
    report = CriterionReport("split")
    report.hyp("supp(u) disjoint from supp(I) and supp(J)", True)
    report.hyp("L = uI + J", True)
    Lt = power(d.L, t)
    ut = Monomial._raw(ctx, tuple(e * t for e in d.u.exps))
    A = colon_monomial(Lt, ut)
    IJ = d.I + d.J
    IJt = IJ if IJ.is_zero() else power(IJ, t)
    B = Lt + principal(ut)
    id1 = A == IJt
    id2 = Lt == intersect([A, B])
    report.facts["(L^t:u^t) = (I+J)^t"] = id1
    report.facts["L^t = (L^t:u^t) meet (L^t,u^t)"] = id2
    report.witness("L^t:u^t", A)
    m_L = has_maximal_associated(Lt)
    m_B = has_maximal_associated(B)
    report.facts["m_in_Ass(L^t)"] = m_L
    report.facts["m_in_Ass(L^t,u^t)"] = m_B
    if not (id1 and id2):
        raise CriterionViolation(f"split identities fail for {d} at t={t}")
    if m_L and not m_B:
        raise CriterionViolation(f"m in Ass(L^{t}) but not in Ass((L^{t}, u^{t})) for {d}")
    report.conclusion = Conclusion.VERIFIED
    report.oracle_agreement = True
    return report


def check_dichotomy(d: SplitDecomposition, t: int) -> CriterionReport:
    """When m is associated to (L^t, u^t): m is associated to L^t, or u is a power of a
    single variable x_j with m minus x_j associated to (I+J)^t."""
    if t < 1:
        raise ValueError("t must be at least 1")
    ctx = d.L.ctx
    report = CriterionReport("dichotomy")
    Lt = power(d.L, t)
    ut = Monomial._raw(ctx, tuple(e * t for e in d.u.exps))
    B = Lt + principal(ut)
    if not report.hyp("m in Ass(R/(L^t, u^t))", has_maximal_associated(B), format_ideal(B)):
        return report
    branch1 = has_maximal_associated(Lt)
    us = sorted(d.u.support())
    branch2 = False
    if len(us) == 1:
        IJ = d.I + d.J
        if IJ.is_proper_nonzero():
            assoc, q = _minus_associated(power(IJ, t), MonomialPrime.maximal(ctx), us[0])
            branch2 = assoc
            report.witness("m minus x_j", q)
    report.facts["branch_i"] = branch1
    report.facts["branch_ii"] = branch2
    report.facts["u_is_variable"] = d.u.degree == 1
    if not (branch1 or branch2):
        raise CriterionViolation(f"neither branch holds for {d} at t={t}")
    report.conclusion = Conclusion.VERIFIED
    report.oracle_agreement = True
    return report


# -- squarefree ideals ----------------------------------------------------------


def check_squarefree_maximal(I: MonomialIdeal) -> CriterionReport:
    """For squarefree I, m is associated exactly when I = m."""
    if not is_squarefree(I):
        raise ValueError(f"{I} is not squarefree")
    if not I.is_proper_nonzero():
        raise DegenerateIdeal("the ideal must be proper and nonzero")
    ctx = I.ctx
    report = CriterionReport("squarefree")
    report.hyp("I squarefree", True)
    m = MonomialIdeal.maximal(ctx)
    assoc = has_maximal_associated(I)
    is_m = I == m
    report.facts["m_in_Ass(R/I)"] = assoc
    report.facts["I_equals_m"] = is_m
    if assoc != is_m:
        raise CriterionViolation(f"squarefree characterization fails for {I}")
    report.conclusion = Conclusion.VERIFIED if is_m else Conclusion.NOT_ASSOCIATED
    report.oracle_agreement = (MonomialPrime.maximal(ctx) in ass_from_decomposition(I)) == assoc
    return report
