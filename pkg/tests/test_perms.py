import pytest
from hypothesis import given, strategies as st

from m13.perms import Perm13, PermError, SignedPerm13

perms = st.permutations(range(13)).map(lambda xs: Perm13(tuple(xs)))
flips = st.lists(st.booleans(), min_size=13, max_size=13).map(tuple)
signed = st.builds(SignedPerm13, perms, flips)


def test_parse_and_print():
    s = Perm13.parse("(1 7 12 6 8)(3 4 10 5 9)")
    assert s(1) == 7 and s(8) == 1 and s(0) == 0
    assert str(s) == "(1 7 12 6 8)(3 4 10 5 9)"
    assert s.cycle_type() == (5, 5)
    assert s.order() == 5


@pytest.mark.parametrize("text", ["", "id", "()"])
def test_identity_spellings(text):
    assert Perm13.parse(text).is_identity()


@pytest.mark.parametrize("text", ["(1 2", "(1 13)", "(1 2)(2 3)", "(a b)", "1 2"])
def test_parse_errors(text):
    with pytest.raises(PermError):
        Perm13.parse(text)


def test_non_bijection_rejected():
    with pytest.raises(PermError):
        Perm13((0,) * 13)


def test_right_to_left_composition():
    a, b = Perm13.parse("(1 2)"), Perm13.parse("(2 3)")
    # apply b first: 2 -> 3 -> 3
    assert (a * b)(2) == 3
    assert (a * b)(1) == 2


def test_signed_text_format():
    s = SignedPerm13.parse("(1! 7! 12 6 8)(3 4 10! 5 9!)")
    assert s.flipped() == {1, 7, 10, 9}
    assert str(SignedPerm13.parse(str(s))) == str(s)
    assert str(SignedPerm13.parse("(2!)")) == "(2!)"
    assert str(SignedPerm13()) == "()"


@given(perms)
def test_cycle_notation_round_trip(s):
    assert Perm13.parse(str(s)) == s


@given(signed)
def test_signed_round_trip(s):
    assert SignedPerm13.parse(str(s)) == s


@given(perms, perms, perms)
def test_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(perms)
def test_inverse(a):
    assert (a * a.inverse()).is_identity()
    assert (a.inverse() * a).is_identity()


@given(signed, signed, signed)
def test_signed_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(signed, signed)
def test_signed_composition_rule(s, t):
    u = t * s
    for i in range(13):
        assert u.flip[i] == s.flip[i] ^ t.flip[s(i)]
    assert u.unsigned() == t.unsigned() * s.unsigned()


@given(signed)
def test_signed_inverse_and_negate(s):
    assert (s * s.inverse()).is_identity()
    assert s.negate().negate() == s
    assert s.negate().unsigned() == s.unsigned()
