import random

from hypothesis import given, settings
from hypothesis import strategies as st

from stripedcyl.diagram import evaluate, invariants
from stripedcyl.grammar import parse_word
from stripedcyl.normal_form import (
    Bracelets, Empty, TwistPower, normalize, reconstruct_caps, synthesize_type1, synthesize_type3,
)
from stripedcyl.sampling import random_word
from stripedcyl.words import Birth, Death, GeneratorWord, Tw, power, word


def test_cap_reconstruction():
    assert reconstruct_caps(6, [0, 1]) == ([(1, 2), (0, 3)], [4, 5])
    assert reconstruct_caps(4, []) == ([], [0, 1, 2, 3])


def test_deaths_are_innermost_first():
    assert synthesize_type1(6, [0, 1]) == word(Death(6, 1), Death(4, 0))
    births = synthesize_type3(6, [0, 1])
    assert births.signature == (2, 6)
    assert invariants(evaluate(births)).ind_b == (0, 1)


def test_twist_powers_reduce():
    nf = normalize(power(Tw(2), 5))
    assert nf.middle == TwistPower(1)
    assert str(nf) == "tw(2)"


def test_bracelets_collected():
    pair = word(Birth(0, 0), Death(2, 1), Birth(0, 0), Death(2, 1))
    nf = normalize(pair)
    assert nf.middle == Bracelets(2)
    assert str(nf) == "(d(2,1).b(0,0))^2"


def test_snakes_normalize_to_identity():
    nf = normalize(word(Birth(2, 1), Death(4, 2)))
    assert str(nf) == "id(2)" and nf.mu == 0
    assert str(normalize(word(Birth(1, 0), Death(3, 1)))) == "id(1)"
    assert str(normalize(word(Birth(3, 0), Death(5, 4)))) == "tw(3)^2"


def test_loops_are_counted_but_not_printed():
    nf = normalize(word(Birth(0, 0), Death(2, 0)))
    assert nf.middle == Empty() and nf.mu == 1 and str(nf) == "id(0)"


@settings(max_examples=150, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), length=st.integers(0, 16))
def test_normal_form_reproduces_invariants(seed, length):
    w = random_word(random.Random(seed), length, max_arity=8)
    nf = normalize(w)
    inv = invariants(evaluate(w))
    out = invariants(evaluate(nf.assemble()))
    assert out.cyl_key() == inv.cyl_key()
    assert nf.mu == inv.mu and out.mu == 0
    again = normalize(parse_word(str(nf)))
    assert str(again) == str(nf) and again.cyl_key() == nf.cyl_key()


def test_identity_words():
    for k in range(6):
        assert str(normalize(GeneratorWord.identity(k))) == f"id({k})"
