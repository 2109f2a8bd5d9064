"""Property suites shared by the ``selftest`` command and the test-suite."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Iterable

from . import cyclic
from .diagram import Category, compose_diagrams, eq_in, evaluate, invariants
from .linear import TLElement, bar_rep, tl_compose, tl_evaluate, tl_from_word, word_matrix
from .grammar import parse_word
from .normal_form import normalize
from .relations import check_relation, instances
from .sampling import independent_pair, random_word, twin_pair
from .words import Birth, Death, GeneratorWord, Tw, power, word


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failed: int = 0
    failures: list[str] = field(default_factory=list)
    known: int = 0  # failures matching a documented defect; reported, not fatal

    def record(self, ok: bool, label: Callable[[], str] | str) -> None:
        if ok:
            self.passed += 1
            return
        self.failed += 1
        if len(self.failures) < 10:
            self.failures.append(label() if callable(label) else label)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        extra = f", {self.known} known defect" if self.known else ""
        return f"{status} {self.name}: {self.passed} passed, {self.failed} failed{extra}"


def relation_suite(max_k: int = 8) -> SuiteResult:
    res = SuiteResult(f"relations k<={max_k}")
    for inst in instances(max_k):
        res.record(check_relation(inst), str(inst))
    return res


def tower_strictness() -> SuiteResult:
    res = SuiteResult("category tower witnesses")
    for k in (2, 3, 4):
        lhs, rhs = power(Tw(k), k), GeneratorWord.identity(k)
        res.record(not eq_in(Category.DA, lhs, rhs) and eq_in(Category.CYLA, lhs, rhs), f"tw({k})^{k}")
    for k in range(0, 5):
        lhs, rhs = word(Birth(k, 0), Death(k + 2, 0)), GeneratorWord.identity(k)
        res.record(not eq_in(Category.CYLA, lhs, rhs) and eq_in(Category.CYL, lhs, rhs), f"loop at {k}")
    return res


def normal_form_suite(rng: random.Random, samples: int, max_arity: int, max_len: int = 20) -> SuiteResult:
    res = SuiteResult(f"normal form on {samples} words")
    for _ in range(samples):
        w = random_word(rng, rng.randint(0, max_len), max_arity=max_arity)
        nf = normalize(w)
        assembled = nf.assemble()
        base = invariants(evaluate(w))
        got = invariants(evaluate(assembled))
        again = normalize(parse_word(str(assembled)))
        ok = got.cyl_key() == base.cyl_key() and nf.mu == base.mu and got.mu == 0 and again == normalize(assembled)
        res.record(ok, lambda w=w: str(w))
    return res


def completeness_suite(rng: random.Random, pairs: int, max_arity: int, max_len: int = 20) -> SuiteResult:
    res = SuiteResult(f"Cyl equality vs canonical form on {pairs} pairs")
    for t in range(pairs):
        u, v = twin_pair(rng, max_len, max_arity, min(8, max_arity))[:2] if t % 2 == 0 else independent_pair(rng, max_len, max_arity)
        same = eq_in(Category.CYL, u, v)
        canon = str(normalize(u)) == str(normalize(v))
        res.record(same == canon, lambda u=u, v=v: f"{u} vs {v}")
    return res


def tower_suite(rng: random.Random, pairs: int, max_arity: int, max_len: int = 20) -> SuiteResult:
    res = SuiteResult(f"category tower on {pairs} pairs")
    for t in range(pairs):
        if t % 2 == 0:
            u, v, _ = twin_pair(rng, max_len, max_arity, min(8, max_arity))
        else:
            u, v = independent_pair(rng, max_len, max_arity)
        da, cyla, cyl = (eq_in(c, u, v) for c in (Category.DA, Category.CYLA, Category.CYL))
        res.record((not da or cyla) and (not cyla or cyl), lambda u=u, v=v: f"{u} vs {v}")
    return res


def matrix_suite(rng: random.Random, pairs: int, max_arity: int, dims: Iterable[int] = (1, 2, 3)) -> SuiteResult:
    """Functoriality on composable pairs, and equal matrices for Cyl-equal twins up to loop factors."""
    res = SuiteResult(f"matrix functoriality on {pairs} pairs")
    for _ in range(pairs):
        f = random_word(rng, rng.randint(0, 6), max_arity=max_arity)
        g = random_word(rng, rng.randint(0, 6), n_in=f.n_out, max_arity=max_arity)
        u, v, _ = twin_pair(rng, 10, max_arity, min(6, max_arity))
        mu_u, mu_v = invariants(evaluate(u)).mu, invariants(evaluate(v)).mu
        for n in dims:
            ok = word_matrix(f.then(g), n) == word_matrix(g, n) @ word_matrix(f, n)
            res.record(ok, lambda f=f, g=g, n=n: f"hom {f} ; {g} at dim {n}")
            ok = word_matrix(u, n).scale(n**mu_v) == word_matrix(v, n).scale(n**mu_u)
            res.record(ok, lambda u=u, v=v, n=n: f"twins {u} vs {v} at dim {n}")
    return res


def matrix_relation_suite(max_k: int = 8, dims: Iterable[int] = (1, 2, 3)) -> SuiteResult:
    res = SuiteResult(f"relation matrices k<={max_k}")
    for n in dims:
        rep = bar_rep(n)
        for inst in instances(max_k):
            lhs, rhs, offset = inst.sides()
            res.record(rep.word(lhs) == rep.word(rhs).scale(n**offset), lambda inst=inst, n=n: f"{inst} at dim {n}")
    return res


def tl_suite(rng: random.Random, pairs: int, max_arity: int, dims: Iterable[int] = (1, 2, 3)) -> SuiteResult:
    res = SuiteResult(f"TL bookkeeping on {pairs} pairs")
    for _ in range(pairs):
        f = random_word(rng, rng.randint(0, 6), max_arity=max_arity)
        g = random_word(rng, rng.randint(0, 6), n_in=f.n_out, max_arity=max_arity)
        a, b = evaluate(f).without_mu(), evaluate(g).without_mu()
        d = compose_diagrams(a, b)
        x = TLElement(f.n_in, f.n_out, {a: _one()})
        y = TLElement(g.n_in, g.n_out, {b: _one()})
        z = tl_compose(x, y)
        (key, coeff), = z.terms.items()
        res.record(key == d.without_mu() and coeff.coeffs == {d.mu: 1}, lambda f=f, g=g: f"delta exponent {f} ; {g}")
        w = f.then(g)
        for n in dims:
            ok = tl_evaluate(tl_from_word(w), bar_rep(n), n) == word_matrix(w, n)
            res.record(ok, lambda w=w, n=n: f"tl_evaluate {w} at dim {n}")
    return res


def _one():
    from .linear import DeltaPoly

    return DeltaPoly({0: 1})


def roundtrip_suite(rng: random.Random, samples: int, max_arity: int) -> SuiteResult:
    res = SuiteResult(f"parse/print round trip on {samples} words")
    for _ in range(samples):
        w = random_word(rng, rng.randint(0, 20), max_arity=max_arity, inverses=True)
        res.record(parse_word(str(w)) == w, lambda w=w: str(w))
    return res


def cyclic_suites(max_n: int = 5) -> list[SuiteResult]:
    simp = SuiteResult(f"simplicial identities n<={max_n}")
    for label, l, r in cyclic.simplicial_relations(max_n):
        simp.record(cyclic.monotone_semantics(l) == cyclic.monotone_semantics(r), label)
    lam = SuiteResult(f"Lambda into Cyl n<={max_n}")
    for label, l, r in cyclic.cyclic_relations(max_n):
        lw, rw = cyclic.lambda_to_cyl(l), cyclic.lambda_to_cyl(r)
        lam.record(eq_in(Category.CYL, lw, rw) and cyclic.parity_ok([lw, rw]), label)
    sq = SuiteResult(f"sqrt-Lambda into Cyl n<={max_n}")
    for label, l, r in cyclic.sqrt_relations(max_n):
        sq.record(eq_in(Category.CYL, cyclic.sqrtlambda_to_cyl(l), cyclic.sqrtlambda_to_cyl(r)), label)
    dbl = SuiteResult(f"doubling of simplicial identities n<={max_n}")
    for label, l, r in cyclic.simplicial_relations(max_n):
        ok = cyclic.monotone_semantics(cyclic.delta_double(l)) == cyclic.monotone_semantics(cyclic.delta_double(r))
        if not ok and _doubling_defect(label):
            dbl.known += 1
            continue
        dbl.record(ok, label)
    atl = SuiteResult(f"Atl into Cyl^a n<={max_n}")
    for label, l, r in cyclic.atl_relations(max_n):
        (lw, lm), (rw, rm) = cyclic.atl_to_cyla(l), cyclic.atl_to_cyla(r)
        li, ri = invariants(evaluate(lw)), invariants(evaluate(rw))
        atl.record(li.cyl_key() == ri.cyl_key() and li.mu + lm == ri.mu + rm and cyclic.parity_ok([lw, rw]), label)
    return [simp, lam, sq, dbl, atl]


def _doubling_defect(label: str) -> bool:
    # d^{j+1} after s^j: no functor doubling into adjacent pairs preserves it
    if not label.startswith("(iii)"):
        return False
    fields = dict(part.split("=") for part in label.split()[1:])
    return int(fields["i"]) == int(fields["j"]) + 1


def extension_suite() -> SuiteResult:
    res = SuiteResult("Cyl_0 extension conditions on bar data")
    for n in (1, 2, 3):
        report = cyclic.cyl0_extension_report(*cyclic.bar_extension_data(n))
        expect_sections = n == 1
        res.record(
            report["d0.t = d1"] and report["t.b0 = b1"]
            and report["d0.b0 = id"] == expect_sections and report["d1.b1 = id"] == expect_sections,
            f"dim {n}: {report}",
        )
    return res


def run_all(max_arity: int = 8, samples: int = 500, seed: int = 0) -> list[SuiteResult]:
    rng = random.Random(seed)
    pairs = max(1, samples * 2 // 5)
    out = [
        relation_suite(max_arity),
        tower_strictness(),
        normal_form_suite(rng, samples, max_arity),
        completeness_suite(rng, pairs, max_arity),
        tower_suite(rng, pairs, max_arity),
        matrix_relation_suite(min(max_arity, 8)),
        matrix_suite(rng, max(1, samples // 10), min(max_arity, 6)),
        tl_suite(rng, max(1, samples // 10), min(max_arity, 6)),
        roundtrip_suite(rng, samples, max_arity),
        extension_suite(),
    ]
    out += cyclic_suites(5)
    return out
