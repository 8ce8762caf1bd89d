import pytest
from hypothesis import given
from hypothesis import strategies as st

from monass.errors import MAX_EXPONENT, ContextMismatch, ExponentOverflow, ParseError
from monass.ring import (
    RingContext,
    colon_quotient,
    divides,
    format_exps,
    gcd,
    lcm,
    multiply,
    parse_monomial,
)

R = RingContext("xyz")
exps = st.tuples(*[st.integers(0, 12)] * 3)


@given(exps, exps)
def test_lcm_gcd_are_componentwise_max_min(a, b):
    fa, fb = R.monomial(a), R.monomial(b)
    assert lcm(fa, fb).exps == tuple(map(max, a, b))
    assert gcd(fa, fb).exps == tuple(map(min, a, b))
    assert multiply(lcm(fa, fb), gcd(fa, fb)) == multiply(fa, fb)


@given(exps, exps)
def test_divides_matches_quotient(a, b):
    fa, fb = R.monomial(a), R.monomial(b)
    assert divides(fa, fb) == all(x <= y for x, y in zip(a, b))
    q = colon_quotient(fb, fa)
    assert multiply(q, gcd(fa, fb)) == fb


@given(exps)
def test_format_parse_round_trip(a):
    f = R.monomial(a)
    assert parse_monomial(R, str(f)) == f
    assert format_exps(R, a) == str(f)


def test_identity_and_degree():
    one = R.one()
    assert str(one) == "1" and one.is_one() and one.degree == 0
    assert parse_monomial(R, "1") == one
    f = parse_monomial(R, "x^2*z")
    assert f.degree == 3
    assert f.support() == frozenset({0, 2})


def test_repeated_variables_accumulate():
    assert parse_monomial(R, "x*x^2*y") == R.monomial((3, 1, 0))


def test_negative_exponent_rejected():
    with pytest.raises(ValueError):
        R.monomial((1, -1, 0))


def test_context_mismatch():
    S = RingContext("xy")
    with pytest.raises(ContextMismatch):
        multiply(R.var("x"), S.var("x"))


def test_overflow_is_reported():
    big = R.monomial((MAX_EXPONENT, 0, 0))
    with pytest.raises(ExponentOverflow):
        multiply(big, R.var("x"))


@pytest.mark.parametrize(
    "text, column",
    [("x^", 3), ("x*q", 3), ("x**y", 3), ("2*x", 1)],
)
def test_parse_errors_have_columns(text, column):
    with pytest.raises(ParseError) as info:
        parse_monomial(R, text)
    assert info.value.line == 1
    assert info.value.column == column


def test_duplicate_variables_rejected():
    with pytest.raises(ValueError):
        RingContext(["x", "x"])


def test_var_lookup_and_sub_ring():
    assert R.index("z") == 2
    assert R.var(1, 3).exps == (0, 3, 0)
    assert R.sub([0, 2]).variables == ("x", "z")
