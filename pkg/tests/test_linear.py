import random
from fractions import Fraction

import pytest

from oracles import diagram_matrix
from stripedcyl.diagram import evaluate
from stripedcyl.errors import DimTooSmall
from stripedcyl.linear import (
    DeltaPoly, Matrix, TLElement, bar_rep, gen_matrix, tl_compose, tl_evaluate, tl_from_word, word_matrix,
)
from stripedcyl.sampling import random_word
from stripedcyl.words import Birth, Death, GeneratorWord, Id, Tw, power, word

BRACELET = word(Birth(0, 0), Death(2, 1))


def test_swap_and_contraction():
    swap = Matrix.from_rows([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]])
    assert gen_matrix(Tw(2), 2) == swap
    assert gen_matrix(Death(2, 0), 2) == Matrix.from_rows([[1, 0, 0, 1]])
    assert gen_matrix(Id(0), 5) == Matrix.identity(1)


def test_loop_value_and_snake():
    assert word_matrix(word(Birth(0, 0), Death(2, 0)), 3) == Matrix.from_rows([[3]])
    for n in range(1, 5):
        assert word_matrix(word(Birth(1, 0), Death(3, 1)), n).is_identity()


@pytest.mark.parametrize("k", range(0, 6))
def test_twist_has_order_k(k):
    for n in (2, 3):
        assert word_matrix(power(Tw(k), k), n) == Matrix.identity(n**k)


def test_matches_strand_oracle():
    rng = random.Random(21)
    for _ in range(100):
        w = random_word(rng, rng.randint(0, 10), max_arity=6)
        for n in (1, 2, 3):
            assert word_matrix(w, n) == diagram_matrix(evaluate(w), n)


def test_exact_rationals():
    m = Matrix.from_rows([[Fraction(1, 3), 2], [0, Fraction(-5, 6)]])
    assert m.to_strings() == [["1/3", "2"], ["0", "-5/6"]]
    assert (m @ Matrix.identity(2)) == m
    assert (m + m) == m.scale(2)
    assert m.transpose().to_fractions()[1][0] == 2


def test_dim_must_be_positive():
    with pytest.raises(DimTooSmall):
        bar_rep(0)


def test_delta_polynomials():
    p = DeltaPoly({0: 1, 2: 3})
    assert p(2) == 13
    assert (p * DeltaPoly({1: 1})).shift(-1) == p
    assert p + DeltaPoly({2: -3}) == DeltaPoly({0: 1})


def test_tl_examples():
    loop = tl_from_word(word(Birth(2, 1), Death(4, 1)))
    assert loop.terms == {evaluate(GeneratorWord.identity(2)): DeltaPoly({1: 1})}
    assert tl_from_word(GeneratorWord.identity(3)) == TLElement.identity(3)
    brace = tl_from_word(BRACELET)
    ((d, coeff),) = brace.terms.items()
    assert d.beta == 1 and coeff == DeltaPoly({0: 1})
    assert tl_evaluate(loop, bar_rep(3), 3) == Matrix.identity(9).scale(3)
    assert tl_evaluate(brace, bar_rep(2), 2) == word_matrix(BRACELET, 2)
    assert tl_evaluate(TLElement.identity(2), bar_rep(2), 7).is_identity()


def test_tl_composition_is_bilinear():
    a = tl_from_word(word(Tw(2)))
    b = tl_from_word(GeneratorWord.identity(2))
    c = tl_from_word(word(Death(2, 0), Birth(0, 1)))
    assert tl_compose(a + b, c) == tl_compose(a, c) + tl_compose(b, c)
    assert tl_compose(a, TLElement.identity(2)) == a
    # closing a cap against a cup makes one contractible loop
    x = tl_compose(tl_from_word(word(Birth(0, 0))), tl_from_word(word(Death(2, 0))))
    assert x.terms == {evaluate(GeneratorWord.identity(0)): DeltaPoly({1: 1})}
