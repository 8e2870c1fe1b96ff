import pytest

from quiverhom.conditions import (check_G, check_g, check_ln, dominant_numbers, in_E,
                                  injective_profile, membership, parse_class)
from quiverhom.enumeration import enumerate_modules
from quiverhom.fixtures import fixture
from quiverhom.homology import pd
from quiverhom.modules import standard_module


def test_profile_of_A3_by_hand():
    # I_0 = P(1)^3 is projective, I_1 = S_1 + E(2) has fd 1
    prof = injective_profile(fixture("A3", 101), 4)
    assert prof.values()[:2] == ["0", "1"] and prof.terminated


@pytest.mark.parametrize("side", ["left", "op"])
def test_profile_of_ex572(side):
    assert injective_profile(fixture("ex572", 101), 3, side=side).values() == ["1", "1", "2"]


def test_ex57_is_one_sided():
    A = fixture("ex57", 101)
    left, op = check_ln(A, 2, 2, side="left"), check_ln(A, 2, 2, side="op")
    assert left.holds is True and op.holds is False
    assert op.to_json()["witness"]["fd"] == "2"


@pytest.mark.parametrize("name", ["loop", "nakayama", "semisimple", "A3"])
def test_gorenstein_fixtures(name):
    A = fixture(name, 101)
    for n in range(1, 4):
        assert check_G(A, n, 0).holds is True
        assert check_G(A, n, 0, side="op").holds is True


def test_g_enumeration_agrees_with_G_criterion():
    for name in ("A3", "ex57"):
        A = fixture(name, 2)
        for n in (1, 2):
            assert check_g(A, n, 0).holds == check_G(A, n, 1, side="op").holds


def test_dominant_numbers_satisfy_bound():
    rep = dominant_numbers(fixture("ex572", 101), 4)
    assert rep.dominant and all(v.ge(l) for l, v in rep.dominant)


def test_parse_class():
    assert parse_class("X(1, 2)") == ("X", (1, 2))
    assert parse_class(("DXop", 2, 0)) == ("DXop", (2, 0))
    for bad in ("X(1)", "Q(1,1)", "W"):
        with pytest.raises(ValueError):
            parse_class(bad)


def test_E_witness_is_honest():
    A = fixture("A3", 101)
    P1 = standard_module(A, "projective", "1")
    found = in_E(P1, 1, 1)
    assert found is not None
    U, inc = found[:2]
    assert pd(U).lt(1) is not False


def test_membership_in_Y_needs_search_for_summand():
    A = fixture("A3", 101)
    S2 = standard_module(A, "simple", "2")
    assert in_E(S2, 1, 1) is None
    # S_2 + P_1 is in E(I_1, P_1), so S_2 lies in the additive closure only
    mods = list(enumerate_modules(A))
    m = membership(S2, "Y(1,1)", context={"modules": mods})
    assert m.value is True and m.detail["in_E"] is False


def test_orthogonality_obstruction_rejects():
    A = fixture("ex572", 2)
    S = [standard_module(A, "simple", v) for v in "12345"]
    mods = S + [standard_module(A, "projective", v) for v in "12345"]
    verdicts = [membership(M, "Y(1,1)", context={"modules": mods}) for M in mods]
    assert all(v.exact for v in verdicts)
    assert any(v.value is False for v in verdicts)


def test_W_and_F_classes():
    A = fixture("A3", 101)
    P, S1 = standard_module(A, "projective", "1"), standard_module(A, "simple", "1")
    # W(n): Ext^i(M, A) = 0 for 1 <= i <= n; Ext^1(S_1, A) is nonzero
    assert membership(P, "W(3)").value is True
    assert membership(S1, "W(1)").value is False
    assert membership(P, "F(2)").value is True
    assert membership(S1, "F(1)").value is False
    assert membership(P, "X(2,2)").value is True
