import itertools

import pytest

from monass.ring import RingContext


def monomials_up_to(ctx: RingContext, bound: int):
    """All monomials whose exponents are each at most ``bound``."""
    for e in itertools.product(range(bound + 1), repeat=ctx.n):
        yield ctx.monomial(e)


@pytest.fixture
def xyz() -> RingContext:
    return RingContext("xyz")


@pytest.fixture
def xy() -> RingContext:
    return RingContext("xy")
