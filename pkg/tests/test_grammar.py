import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stripedcyl.cyclic import A, AtlWord, Cyc, CyclicWord, FaceD, SqrtCyc, SqrtCyclicWord
from stripedcyl.errors import ArityMismatch, CylError, NotEndomorphism, ParseError
from stripedcyl.grammar import parse_word
from stripedcyl.sampling import random_word
from stripedcyl.words import Birth, Death, GeneratorWord, Tw, TwInv, power, word


def test_dot_is_right_first_and_semicolon_left_first():
    expect = word(Birth(2, 1), Death(4, 1))
    assert parse_word("d(4,1) . b(2,1)") == expect
    assert parse_word("b(2,1); d(4,1)") == expect


def test_powers_and_parentheses():
    assert parse_word("tw(2)^5") == power(Tw(2), 5)
    assert parse_word("(d(2,1).b(0,0))^2") == word(Birth(0, 0), Death(2, 1), Birth(0, 0), Death(2, 1))
    assert parse_word("tw'(3)") == word(TwInv(3))
    assert parse_word(" id( 4 ) ").signature == (4, 4)


def test_identity_absorbs():
    assert parse_word("id(2) . tw(2) . id(2)") == word(Tw(2))
    assert parse_word("id(0)") == GeneratorWord.identity(0)


def test_parse_error_spans():
    with pytest.raises(ParseError) as info:
        parse_word("tw(3) . foo(2)")
    assert info.value.start == 8
    assert "^" in info.value.render()
    with pytest.raises(ParseError):
        parse_word("tw(3")


def test_type_errors_name_the_arities():
    with pytest.raises(ArityMismatch) as info:
        parse_word("d(2,0) . tw(3)")
    assert "3" in str(info.value) and "2" in str(info.value)
    with pytest.raises(NotEndomorphism):
        parse_word("b(0,0)^2")


def test_other_languages():
    assert parse_word("t(1)", "lambda") == CyclicWord([Cyc(1)])
    assert parse_word("dl(3,0) . t(3)", "lambda") == CyclicWord([Cyc(3), FaceD(3, 0)])
    assert parse_word("sqrt_t(2)^2", "sqrtlambda") == SqrtCyclicWord([SqrtCyc(2)] * 2)
    assert parse_word("a(3,2)", "atl") == AtlWord([A(3, 2)])
    with pytest.raises(CylError):
        parse_word("tw(2)", "lambda")


@settings(max_examples=200, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), length=st.integers(0, 20))
def test_round_trip(seed, length):
    w = random_word(random.Random(seed), length, max_arity=10, inverses=True)
    assert parse_word(str(w)) == w
