import itertools

import pytest

from stripedcyl import cyclic
from stripedcyl.cyclic import (
    A, AtlWord, B, Cyc, CyclicWord, Degen, FaceD, LoopId, MonotoneMap, SimplicialWord, SqrtCyc, SqrtCyclicWord, T,
)
from stripedcyl.diagram import Category, eq_in, evaluate, invariants
from stripedcyl.errors import InvalidGenerator, ShapeMismatch
from stripedcyl.linear import Matrix
from stripedcyl.words import Birth, Death, GeneratorWord, Tw, power, word


def _is_face_after_degeneracy(label):
    if not label.startswith("(iii)"):
        return False
    f = dict(p.split("=") for p in label.split()[1:])
    return int(f["i"]) == int(f["j"]) + 1


def test_monotone_semantics_satisfy_the_simplicial_identities():
    for label, lhs, rhs in cyclic.simplicial_relations(5):
        assert cyclic.monotone_semantics(lhs) == cyclic.monotone_semantics(rhs), label


def test_monotone_maps_are_checked():
    with pytest.raises(ValueError):
        MonotoneMap(2, 2, (0, 2, 1))
    assert MonotoneMap.identity(3).after(MonotoneMap.identity(3)) == MonotoneMap.identity(3)


def test_lambda_translation_table():
    assert str(cyclic.lambda_to_cyl(CyclicWord([Cyc(1)]))) == "tw(4)^2"
    assert cyclic.lambda_to_cyl(CyclicWord([FaceD(2, 1)])) == word(Death(6, 2))
    assert cyclic.lambda_to_cyl(CyclicWord([Degen(2, 1)])) == word(Birth(6, 3))


def test_lambda_relations_hold_in_cyl():
    for label, lhs, rhs in cyclic.cyclic_relations(5):
        lw, rw = cyclic.lambda_to_cyl(lhs), cyclic.lambda_to_cyl(rhs)
        assert eq_in(Category.CYL, lw, rw), label
        assert cyclic.parity_ok([lw, rw])


def test_sqrt_lambda():
    for n in range(6):
        full = SqrtCyclicWord([SqrtCyc(n)] * (2 * n + 2))
        assert eq_in(Category.CYL, cyclic.sqrtlambda_to_cyl(full), GeneratorWord.identity(2 * n + 2))
        squared = cyclic.sqrtlambda_to_cyl(SqrtCyclicWord([SqrtCyc(n)] * 2))
        assert squared == cyclic.lambda_to_cyl(CyclicWord([Cyc(n)]))
    assert str(cyclic.sqrtlambda_to_cyl(SqrtCyclicWord([SqrtCyc(2)]))) == "tw(6)"
    for label, lhs, rhs in cyclic.sqrt_relations(5):
        assert eq_in(Category.CYL, cyclic.sqrtlambda_to_cyl(lhs), cyclic.sqrtlambda_to_cyl(rhs)), label


def test_doubling_preserves_the_other_identities():
    lhs = SimplicialWord([FaceD(3, 2), FaceD(2, 0)])
    rhs = SimplicialWord([FaceD(3, 0), FaceD(2, 1)])
    assert cyclic.monotone_semantics(cyclic.delta_double(lhs)) == cyclic.monotone_semantics(cyclic.delta_double(rhs))
    for label, l, r in cyclic.simplicial_relations(5):
        if _is_face_after_degeneracy(label):
            continue
        assert cyclic.monotone_semantics(cyclic.delta_double(l)) == cyclic.monotone_semantics(cyclic.delta_double(r)), label


def test_no_adjacent_pair_doubling_keeps_face_after_degeneracy():
    # If face i skips the pair {2i+c, 2i+c+1}, no monotone map can be a left
    # inverse of both face j and face j+1, whatever the offset c.
    for n in range(4):
        top, bottom = 2 * n + 3, 2 * n + 1
        for c in (-1, 0, 1):
            for j in range(n + 1):
                faces = []
                for i in (j, j + 1):
                    hole = {2 * i + c, 2 * i + c + 1}
                    if not hole <= set(range(top + 1)):
                        break
                    faces.append([x for x in range(top + 1) if x not in hole])
                if len(faces) < 2:
                    continue
                for values in itertools.combinations_with_replacement(range(bottom + 1), top + 1):
                    assert not all([values[f[x]] for x in range(bottom + 1)] == list(range(bottom + 1)) for f in faces)


def test_doubling_on_cyclic_words():
    doubled = cyclic.delta_double(CyclicWord([Cyc(1)]))
    assert doubled == CyclicWord([Cyc(3), Cyc(3)])
    assert cyclic.sqrt_double(SqrtCyclicWord([SqrtCyc(1)])) == CyclicWord([Cyc(3)])
    with pytest.raises(InvalidGenerator):
        cyclic.delta_double(SqrtCyclicWord([SqrtCyc(1)]))
    assert cyclic.cyclic_to_sqrt(CyclicWord([Cyc(2)])) == SqrtCyclicWord([SqrtCyc(2), SqrtCyc(2)])


def test_atl_translation():
    w, mu = cyclic.atl_to_cyla(AtlWord([A(3, 2)]))
    assert str(w) == "d(6,4)" and mu == 0
    w, mu = cyclic.atl_to_cyla(AtlWord([B(2, 1), T(3), LoopId(3, 1, 2)]))
    assert w == word(Birth(4, 2), Tw(6), Tw(6)) and mu == 3


def test_atl_relations_hold_in_cyla():
    for label, lhs, rhs in cyclic.atl_relations(6):
        (lw, lm), (rw, rm) = cyclic.atl_to_cyla(lhs), cyclic.atl_to_cyla(rhs)
        li, ri = invariants(evaluate(lw)), invariants(evaluate(rw))
        assert li.cyl_key() == ri.cyl_key() and li.mu + lm == ri.mu + rm, label


def test_cyl0_extension_on_bar_data():
    for n in (1, 2, 3):
        report = cyclic.cyl0_extension_report(*cyclic.bar_extension_data(n))
        assert report["d0.t = d1"] and report["t.b0 = b1"]
        assert report["d0.b0 = id"] == (n == 1) and report["d1.b1 = id"] == (n == 1)
    assert cyclic.check_cyl0_extension(*cyclic.bar_extension_data(1))
    assert not cyclic.check_cyl0_extension(*cyclic.bar_extension_data(2))


def test_cyl0_extension_shapes():
    d0, d1, b0, b1, t = cyclic.bar_extension_data(2)
    with pytest.raises(ShapeMismatch):
        cyclic.cyl0_extension_report(d0, d1, b0, b1, Matrix.identity(3))
