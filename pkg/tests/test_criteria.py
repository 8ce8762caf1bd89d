import pytest

from monass import criteria
from monass.assoc import ass_primes, corner_elements_exhaustive, is_associated
from monass.criteria import (
    ColonCriterionRequest,
    ColonStep,
    Conclusion,
    check_chain_criterion,
    check_colon_criterion_A,
    check_colon_criterion_B,
    check_corner_divisibility,
    check_dichotomy,
    check_squarefree_maximal,
    chain_report,
    infer_split,
    verify_split_identities,
)
from monass.errors import CriterionViolation, DegenerateIdeal, InvalidPrime, SplitError
from monass.graphs import cover_ideal, cycle_graph, edge_ideal, wheel_graph
from monass.ideal import MonomialIdeal, MonomialPrime, power
from monass.parsing import parse_ideal
from monass.reproduce import (
    CHAIN_EXAMPLE,
    SPLIT_COUNTEREXAMPLE_L,
    WHEEL6_I,
    WHEEL6_J,
    family_certificate,
    family_corner,
    family_ideal,
)
from monass.ring import RingContext

R = RingContext("xyz")
XY = RingContext("xy")


def I_(text, ctx=R):
    return parse_ideal(ctx, text)


# ----- colon criterion with auxiliary ideals -----


def test_colon_a_fails_on_associated_deleted_prime():
    req = ColonCriterionRequest(I_("(x*y)", XY), 1, MonomialPrime.maximal(XY), [ColonStep(0, 1, I_("(y)", XY))])
    rep = check_colon_criterion_A(req)
    assert rep.conclusion is Conclusion.NOT_APPLICABLE
    assert "(y) not in Ass(R/J)" in rep.failed


def test_colon_a_with_zero_auxiliary_ideal():
    # (xy, x) = (x) = ((0), x): every hypothesis holds, so the equivalence is recorded
    req = ColonCriterionRequest(I_("(x*y)", XY), 1, MonomialPrime.maximal(XY),
                                [ColonStep(0, 1, MonomialIdeal.zero(XY))])
    rep = check_colon_criterion_A(req)
    assert rep.all_verified
    assert rep.conclusion is Conclusion.EQUIVALENCE
    assert rep.facts["p_in_Ass(I^t)"] is False and rep.facts["p_in_Ass(I^t:product)"] is False
    assert rep.oracle_agreement is True


def test_colon_a_rejects_variable_outside_prime():
    req = ColonCriterionRequest(family_ideal(3), 1, MonomialPrime(R, "xy"), [ColonStep("z", 1, I_("(x^3)"))])
    with pytest.raises(InvalidPrime):
        check_colon_criterion_A(req)


def test_colon_a_needs_auxiliary_ideals():
    req = ColonCriterionRequest(family_ideal(3), 1, MonomialPrime.maximal(R), [ColonStep("z", 1)])
    with pytest.raises(ValueError):
        check_colon_criterion_A(req)


def test_colon_a_single_variable_prime():
    I = I_("(x^2, x*y)", XY)
    req = ColonCriterionRequest(I, 1, MonomialPrime(XY, "x"), [ColonStep("x", 1, MonomialIdeal.zero(XY))])
    rep = check_colon_criterion_A(req)
    # p minus x is the zero prime, associated to R/(0): the criterion stays silent
    assert rep.conclusion is Conclusion.NOT_APPLICABLE


# ----- colon criterion with cumulative colons -----


@pytest.mark.parametrize("t", [3, 4])
def test_colon_b_certificates_below_threshold(t):
    I = family_ideal(t)
    m = MonomialPrime.maximal(R)
    for s in range(1, t):
        rep = check_colon_criterion_B(ColonCriterionRequest(I, s, m, family_certificate(t, s)))
        assert rep.all_verified, rep.failed
        assert rep.conclusion is Conclusion.NOT_ASSOCIATED
        assert rep.oracle_agreement is True
        assert not is_associated(power(I, s), m)


def test_colon_b_first_hypothesis_is_the_sum_with_z():
    rep = check_colon_criterion_B(ColonCriterionRequest(family_ideal(3), 1, MonomialPrime.maximal(R),
                                                        family_certificate(3, 1)))
    assert I_(rep.hypotheses[0].detail) == I_("(x^3, z)")


def test_colon_b_trivial_rejection():
    I = I_("(x^2, y^2)", XY)
    rep = check_colon_criterion_B(ColonCriterionRequest(I, 1, MonomialPrime.maximal(XY), [ColonStep("x", 1)]))
    assert rep.conclusion is Conclusion.NOT_APPLICABLE
    assert rep.failed == [rep.hypotheses[0].name]


def test_colon_b_rejects_auxiliary_ideals():
    req = ColonCriterionRequest(family_ideal(3), 1, MonomialPrime.maximal(R), [ColonStep("z", 1, I_("(x)"))])
    with pytest.raises(ValueError):
        check_colon_criterion_B(req)


def test_request_validation():
    m = MonomialPrime.maximal(R)
    I = family_ideal(3)
    with pytest.raises(ValueError):
        ColonCriterionRequest(I, 1, m, [ColonStep("x", 1), ColonStep("x", 2)])
    with pytest.raises(ValueError):
        ColonCriterionRequest(I, 1, m, [ColonStep("x", 0)])
    with pytest.raises(ValueError):
        ColonCriterionRequest(I, 2, m, [ColonStep("x", 1)], ell=1)
    with pytest.raises(DegenerateIdeal):
        ColonCriterionRequest(MonomialIdeal.zero(R), 1, m, [ColonStep("x", 1)])


def test_colon_b_ell_controls_the_membership_branch():
    I = family_ideal(3)
    m = MonomialPrime.maximal(R)
    steps = family_certificate(3, 1)  # product x*y*z lies in I but not in I^2
    rep = check_colon_criterion_B(ColonCriterionRequest(I, 1, m, steps, ell=2))
    assert rep.conclusion is Conclusion.EQUIVALENCE and rep.oracle_agreement


# ----- chain criterion -----


def test_chain_example_witness():
    ctx = RingContext("xyzt")
    I = parse_ideal(ctx, CHAIN_EXAMPLE)
    w = check_chain_criterion(I)
    assert w.names(ctx) == ("x", "z")
    cols = [[I.gens[k][i] for k in w.order] for i in (w.i, w.j)]
    assert all(c == sorted(c, reverse=True) for c in cols)
    assert cols[0] == [5, 4, 3, 2]
    rep = chain_report(I)
    assert rep.conclusion is Conclusion.NOT_ASSOCIATED and rep.oracle_agreement


def test_chain_silent_on_incomparable_pair():
    assert check_chain_criterion(I_("(x^2*y, x*y^2)", XY)) is None
    assert chain_report(I_("(x^2*y, x*y^2)", XY)).conclusion is Conclusion.NOT_APPLICABLE


def test_chain_single_generator():
    I = I_("(x^2*y*z^3)")
    assert check_chain_criterion(I) is not None
    assert not ass_primes(I).contains_maximal()


def test_chain_rejects_bad_input():
    with pytest.raises(ValueError):
        check_chain_criterion(I_("(x)", RingContext("x")))
    with pytest.raises(DegenerateIdeal):
        check_chain_criterion(MonomialIdeal.unit(R))


def test_chain_violation_is_raised(monkeypatch):
    monkeypatch.setattr(criteria, "has_maximal_associated", lambda I: True)
    with pytest.raises(CriterionViolation):
        check_chain_criterion(I_("(x^2*y)"))


# ----- corner divisibility -----


def test_corner_divisibility_on_family():
    I = family_ideal(3)
    rep = check_corner_divisibility(I, 3, family_corner(3, 3), "x")
    assert rep.conclusion is Conclusion.VERIFIED
    assert ass_primes(power(I_("(y^2*z)"), 3)) == ass_primes(I_("(y*z)"))


def test_corner_divisibility_not_a_corner():
    rep = check_corner_divisibility(family_ideal(3), 3, R.parse("x"), "x")
    assert rep.conclusion is Conclusion.NOT_APPLICABLE


def test_corner_divisibility_deleted_prime_associated():
    I = I_("(x, y^2)", XY)
    (w,) = corner_elements_exhaustive(I)
    assert w.monomial.exps[0] == 0  # the corner y is not divisible by x
    rep = check_corner_divisibility(I, 1, w.monomial, "x")
    assert rep.conclusion is Conclusion.NOT_APPLICABLE
    assert len(rep.failed) == 1 and "(y)" in rep.failed[0]


# ----- splitting -----


def test_split_counterexample():
    L = I_(SPLIT_COUNTEREXAMPLE_L)
    d = infer_split(L, R.var("z"))
    assert d.I == I_("(x^11, y^11)") and d.J == I_("(x^5*y^4, x^6*y^2)")
    rep = verify_split_identities(d, 3)
    assert rep.facts["(L^t:u^t) = (I+J)^t"] and rep.facts["L^t = (L^t:u^t) meet (L^t,u^t)"]
    assert rep.facts["m_in_Ass(L^t)"] is False and rep.facts["m_in_Ass(L^t,u^t)"] is True
    dich = check_dichotomy(d, 3)
    assert dich.facts["branch_i"] is False and dich.facts["branch_ii"] is True
    assert ass_primes(power(d.I + d.J, 3)) == ass_primes(I_("(x, y)"))


def test_split_wheel_cover():
    ctx = RingContext([f"x{i}" for i in range(1, 7)])
    L = cover_ideal(wheel_graph(6), ctx)
    d = infer_split(L, ctx.var("x6"))
    assert d.I == parse_ideal(ctx, WHEEL6_I) and d.J == parse_ideal(ctx, WHEEL6_J)


def test_split_overlap_rejected():
    with pytest.raises(SplitError):
        infer_split(I_("(x^2*z, y)"), R.var("x"))
    with pytest.raises(SplitError):
        infer_split(I_("(x)"), R.one())


def test_split_trivial_identity():
    L = I_("(x*y^2)")
    d = infer_split(L, R.var("x"))
    assert d.J.is_zero() and d.I == I_("(y^2)")
    rep = verify_split_identities(d, 1)
    assert rep.witnesses[0][1] == I_("(y^2)")


def test_dichotomy_not_applicable():
    d = infer_split(I_("(x*y)", XY), XY.var("x"))
    assert check_dichotomy(d, 1).conclusion is Conclusion.NOT_APPLICABLE


# ----- squarefree -----


def test_squarefree_maximal():
    ctx = RingContext([f"x{i}" for i in range(1, 6)])
    rep = check_squarefree_maximal(MonomialIdeal.maximal(ctx))
    assert rep.facts == {"m_in_Ass(R/I)": True, "I_equals_m": True}
    for G in (cycle_graph(5), wheel_graph(6)):
        assert check_squarefree_maximal(edge_ideal(G)).conclusion is Conclusion.NOT_ASSOCIATED
    rep = check_squarefree_maximal(cover_ideal(wheel_graph(6)))
    assert rep.facts["m_in_Ass(R/I)"] is False and rep.oracle_agreement
    with pytest.raises(ValueError):
        check_squarefree_maximal(I_("(x^2)"))


def test_report_document_fields():
    doc = chain_report(I_("(x^2*y)")).to_dict()
    assert set(doc) == {"criterion", "hypotheses", "conclusion", "witnesses", "oracle_agreement", "facts"}


def test_colon_a_product_in_ideal_rules_out_p():
    zero = MonomialIdeal.zero(XY)
    req = ColonCriterionRequest(I_("(x*y)", XY), 1, MonomialPrime.maximal(XY),
                                [ColonStep("x", 1, zero), ColonStep("y", 1, zero)])
    rep = check_colon_criterion_A(req)
    assert rep.conclusion is Conclusion.NOT_ASSOCIATED and rep.oracle_agreement
