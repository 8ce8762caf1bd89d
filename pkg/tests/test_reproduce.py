import pytest

from monass.reproduce import REPRODUCTIONS, Reproduction, reproduce


@pytest.mark.parametrize("rid", sorted(REPRODUCTIONS))
def test_all_checks_pass(rid):
    rep = reproduce(rid)
    assert rep.ok, rep.transcript()
    assert rep.checks


def test_family_table_other_parameters():
    for t in (2, 4):
        assert reproduce("app2", t=t).ok


def test_unknown_id():
    with pytest.raises(ValueError):
        reproduce("nope")


def test_mismatch_is_reported():
    rep = Reproduction("demo", {})
    rep.check("value", 1, 2, "golden")
    assert not rep.ok
    assert "expected 1" in rep.transcript()
    assert rep.to_dict()["checks"][0]["ok"] is False


def test_none_params_are_dropped():
    assert reproduce("wheel", n=None, smax=None).params == {"n": 3, "smax": 3}
