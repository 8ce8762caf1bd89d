import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from monass.assoc import (
    AssSet,
    CornerWitness,
    ass_from_decomposition,
    ass_primes,
    ass_sequence,
    corner_elements,
    corner_elements_exhaustive,
    has_maximal_associated,
    irreducible_decomposition,
    is_associated,
    is_corner,
    maximal_in_powers,
    socle_colon,
)
from monass.errors import CapExceeded, DegenerateIdeal, override_limits
from monass.graphs import cover_ideal, wheel_graph
from monass.ideal import MonomialIdeal, MonomialPrime, colon_monomial, intersect, power, radical
from monass.parsing import parse_ideal
from monass.reproduce import CHAIN_EXAMPLE, family_ideal
from monass.ring import RingContext

R = RingContext("xyz")
XY = RingContext("xy")


def I_(text, ctx=R):
    return parse_ideal(ctx, text)


def P(ctx, names):
    return MonomialPrime(ctx, list(names))


def ass_by_colon_scan(I):
    """Every prime of the form (I : f), found by scanning f over the exponent box.

    Exponents beyond the largest generator exponent do not change (I : f), so
    the box [0, max_i] is exhaustive.
    """
    top = [max(col) for col in zip(*I.gens)]
    found = set()
    for e in itertools.product(*(range(t + 1) for t in top)):
        C = colon_monomial(I, I.ctx.monomial(e))
        if C.is_unit() or C.is_zero():
            continue
        if all(sum(g) == 1 for g in C.gens):
            found.add(MonomialPrime(I.ctx, [g.index(1) for g in C.gens]))
    return AssSet(found)


ideal_exps = st.lists(st.tuples(*[st.integers(0, 3)] * 3), min_size=1, max_size=5)


def proper(exps):
    I = MonomialIdeal(R, exps)
    return I if I.is_proper_nonzero() else None


# ----- socle test and corners -----


def test_socle_examples():
    I = I_("(x^2, x*y)", XY)
    assert socle_colon(I) == I_("(x)", XY) and has_maximal_associated(I)
    assert is_corner(I, XY.var("x"))
    J = I_("(x)", XY)
    assert socle_colon(J) == J and not has_maximal_associated(J)
    m = MonomialIdeal.maximal(XY)
    assert socle_colon(m).is_unit() and has_maximal_associated(m)


def test_family_powers_socle():
    I = family_ideal(3)
    assert not has_maximal_associated(power(I, 2))
    assert has_maximal_associated(power(I, 3))
    assert maximal_in_powers(I, 4) == [False, False, True, True]


def test_corner_lists():
    assert [str(w) for w in corner_elements(I_("(x^2, x*y)", XY))] == ["x"]
    assert corner_elements(I_("(x)", XY)) == []
    brute = {str(w) for w in corner_elements_exhaustive(I_("(x^2, x*y, y^3)", XY))}
    assert brute == {"x", "y^2"}
    assert corner_elements_exhaustive(I_("(x^2, y^3)")) == []


def test_certify_rejects_non_corners():
    I = I_("(x^2, x*y)", XY)
    with pytest.raises(ValueError):
        CornerWitness.certify(I, XY.var("y"))


def test_exhaustive_search_cap():
    with override_limits(corner_search=10):
        with pytest.raises(CapExceeded) as info:
            corner_elements_exhaustive(I_("(x^5, y^5, z^5)"))
    assert info.value.cap == "corner_search"


@settings(max_examples=80)
@given(ideal_exps)
def test_corners_agree_with_definition(exps):
    I = proper(exps)
    if I is None:
        return
    brute = {w.monomial for w in corner_elements_exhaustive(I)}
    everything = itertools.product(*(range(max(c) + 2) for c in zip(*I.gens)))
    direct = {R.monomial(e) for e in everything if is_corner(I, R.monomial(e))}
    assert brute == direct
    assert {w.monomial for w in corner_elements(I)} <= brute
    assert bool(brute) == has_maximal_associated(I)


# ----- Ass -----


def test_family_ass():
    I = family_ideal(3)
    assert is_associated(I, P(R, "xy")) and is_associated(I, P(R, "xz"))
    assert not is_associated(I, P(R, "yz"))
    assert ass_primes(I) == AssSet([P(R, "xy"), P(R, "xz")])


def test_simple_ass():
    assert ass_primes(I_("(x^4)")) == AssSet([P(R, "x")])
    assert is_associated(I_("(x^2, y^3)", XY), MonomialPrime.maximal(XY))
    assert not is_associated(I_("(x^2, y^3)"), MonomialPrime.maximal(R))


def test_wheel_cover_ass_is_edge_primes():
    G = wheel_graph(6)
    J = cover_ideal(G)
    edges = AssSet(MonomialPrime(J.ctx, [a - 1, b - 1]) for a, b in G.sorted_edges())
    assert len(edges) == 10
    assert ass_primes(J) == edges == ass_from_decomposition(J)


def test_degenerate_ideals_rejected():
    with pytest.raises(DegenerateIdeal):
        ass_primes(MonomialIdeal.zero(R))
    with pytest.raises(DegenerateIdeal):
        ass_primes(MonomialIdeal.unit(R))


def test_subset_cap():
    with override_limits(subsets=2):
        with pytest.raises(CapExceeded) as info:
            ass_primes(I_("(x, y, z)"))
    assert info.value.cap == "subsets"


@settings(max_examples=120)
@given(ideal_exps)
def test_three_ass_algorithms_agree(exps):
    I = proper(exps)
    if I is None:
        return
    a = ass_primes(I)
    assert a == ass_from_decomposition(I)
    assert a == ass_by_colon_scan(I)


# ----- decomposition -----


def test_decomposition_examples():
    comps = irreducible_decomposition(I_("(x^2, x*y)", XY))
    assert sorted(str(c) for c in comps) == ["(x)", "(x^2, y)"]
    assert intersect([c.as_ideal() for c in comps]) == I_("(x^2, x*y)", XY)
    irr = I_("(x^2, y^5)", XY)
    assert [c.as_ideal() for c in irreducible_decomposition(irr)] == [irr]
    assert ass_from_decomposition(I_("(x^2, x*y)", XY)) == AssSet([P(XY, "x"), MonomialPrime.maximal(XY)])


def test_chain_example_has_no_maximal_prime():
    ctx = RingContext("xyzt")
    I = parse_ideal(ctx, CHAIN_EXAMPLE)
    a = ass_primes(I)
    assert a == ass_from_decomposition(I)
    assert not a.contains_maximal()


@settings(max_examples=80)
@given(ideal_exps)
def test_decomposition_is_irredundant(exps):
    I = proper(exps)
    if I is None:
        return
    comps = [c.as_ideal() for c in irreducible_decomposition(I)]
    assert intersect(comps) == I
    for k in range(len(comps)):
        rest = comps[:k] + comps[k + 1 :]
        if rest:
            assert intersect(rest) != I


def test_squarefree_decomposition_is_prime():
    I = I_("(x*y, y*z)")
    comps = irreducible_decomposition(I)
    assert all(c.as_ideal() == radical(c.as_ideal()) for c in comps)
    assert ass_from_decomposition(I) == AssSet([P(R, "y"), P(R, "xz")])


# ----- sequences -----


def test_family_sequence():
    seq = ass_sequence(family_ideal(3), 4)
    base = [P(R, "xy"), P(R, "xz")]
    m = MonomialPrime.maximal(R)
    assert seq[1] == seq[2] == AssSet(base)
    assert seq[3] == seq[4] == AssSet(base + [m])
    assert seq.observed_stable_from == 3


def test_wheel_sequence_maximal_pattern():
    seq = ass_sequence(cover_ideal(wheel_graph(6)), 3)
    assert seq.maximal_pattern() == [False, False, True]


def test_principal_sequence_is_constant():
    seq = ass_sequence(I_("(x^2*y)"), 4)
    assert len(set(seq.sets)) == 1 and seq.observed_stable_from == 1
