"""
Exact matrices for the bar model V^{(x)n} and affine Temperley-Lieb elements.

The basis of V^{(x)k} is ordered lexicographically with tensor factor 0
most significant. Matrices are stored as an integer numerator (scipy CSR,
int64) over a common positive integer denominator; every generator image
is a 0/1 matrix, so the denominator only moves when rational scalars enter
through TL coefficients.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction
from typing import Iterable, Mapping

import numpy as np
import scipy.sparse as sp

from .diagram import AffineDiagram, compose_diagrams, evaluate
from .errors import DimTooSmall, ShapeMismatch, SignatureMismatch
from .words import Generator, GeneratorWord, Kind

_LIMIT = 2**62


def _as_fraction(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class Matrix:
    """An exact rational matrix ``num / den`` with sparse integer numerator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den: int = 1):
        num = sp.csr_matrix(num, dtype=np.int64)
        num.sum_duplicates()
        num.eliminate_zeros()
        if den <= 0:
            raise ValueError("denominator must be positive")
        if den != 1 and num.nnz:
            g = math.gcd(den, int(np.gcd.reduce(np.abs(num.data))))
            if g > 1:
                num = _div(num, g)
                den //= g
        elif not num.nnz:
            den = 1
        self.num = num
        self.den = int(den)

    # construction
    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls(sp.identity(n, dtype=np.int64, format="csr"))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> Matrix:
        return cls(sp.csr_matrix((rows, cols), dtype=np.int64))

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable]) -> Matrix:
        """Build from a nested list of ints, Fractions or ``"p/q"`` strings."""
        table = [[Fraction(x) for x in r] for r in rows]
        if not table:
            return cls.zeros(0, 0)
        ncols = len(table[0])
        if any(len(r) != ncols for r in table):
            raise ShapeMismatch("ragged rows")
        den = math.lcm(1, *(x.denominator for r in table for x in r))
        ints = [[int(x * den) for x in r] for r in table]
        return cls(_checked_array(ints, len(table), ncols), den)

    # shape
    @property
    def shape(self) -> tuple[int, int]:
        return self.num.shape

    @property
    def rows(self) -> int:
        return self.num.shape[0]

    @property
    def cols(self) -> int:
        return self.num.shape[1]

    # arithmetic
    def __matmul__(self, other: Matrix) -> Matrix:
        if self.cols != other.rows:
            raise ShapeMismatch(f"cannot multiply {self.shape} by {other.shape}")
        if self.num.nnz and other.num.nnz:
            bound = int(abs(self.num).sum(axis=1).max()) * int(abs(other.num).max())
            if bound >= _LIMIT:
                raise OverflowError("matrix product exceeds the int64 guard")
        return Matrix(self.num @ other.num, self.den * other.den)

    def __add__(self, other: Matrix) -> Matrix:
        if self.shape != other.shape:
            raise ShapeMismatch(f"cannot add {self.shape} and {other.shape}")
        den = math.lcm(self.den, other.den)
        a = _mul(self.num, den // self.den)
        b = _mul(other.num, den // other.den)
        return Matrix(a + b, den)

    def scale(self, c) -> Matrix:
        c = _as_fraction(c)
        return Matrix(_mul(self.num, c.numerator), self.den * c.denominator)

    def transpose(self) -> Matrix:
        return Matrix(self.num.T, self.den)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.den == other.den and (self.num != other.num).nnz == 0

    __hash__ = None  # mutable-looking container; compare by value only

    def is_identity(self) -> bool:
        return self.rows == self.cols and self == Matrix.identity(self.rows)

    # export
    def to_fractions(self) -> list[list[Fraction]]:
        dense = self.num.toarray()
        return [[Fraction(int(v), self.den) for v in row] for row in dense]

    def to_strings(self) -> list[list[str]]:
        return [[_fmt(x) for x in row] for row in self.to_fractions()]

    def __repr__(self) -> str:
        return f"Matrix(shape={self.shape}, nnz={self.num.nnz}, den={self.den})"


def _fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _checked_array(ints, rows, cols):
    if any(abs(v) >= _LIMIT for r in ints for v in r):
        raise OverflowError("entry exceeds the int64 guard")
    return np.array(ints, dtype=np.int64).reshape(rows, cols)


def _mul(m: sp.csr_matrix, c: int) -> sp.csr_matrix:
    if c == 1:
        return m
    if m.nnz and int(abs(m).max()) * abs(c) >= _LIMIT:
        raise OverflowError("scaling exceeds the int64 guard")
    return m * c


def _div(m: sp.csr_matrix, g: int) -> sp.csr_matrix:
    out = m.copy()
    out.data //= g
    return out


# ---------------------------------------------------------------- bar model

def _eye(n: int) -> sp.csr_matrix:
    return sp.identity(n, dtype=np.int64, format="csr")


def _kron(*ms) -> sp.csr_matrix:
    out = ms[0]
    for m in ms[1:]:
        out = sp.kron(out, m, format="csr")
    return sp.csr_matrix(out, dtype=np.int64)


def _eta(dim: int) -> sp.csr_matrix:
    """Column vector sum_a e_a (x) e_a."""
    rows = [a * dim + a for a in range(dim)]
    return sp.csr_matrix((np.ones(dim, dtype=np.int64), (rows, [0] * dim)), shape=(dim * dim, 1))


def _rotation(k: int, dim: int) -> sp.csr_matrix:
    """Right cyclic permutation of tensor factors: factor f moves to f+1."""
    size = dim**k
    if k <= 1:
        return _eye(size)
    src = np.arange(size).reshape((dim,) * k)
    cols = np.moveaxis(src, -1, 0).ravel()
    return sp.csr_matrix((np.ones(size, dtype=np.int64), (np.arange(size), cols)), shape=(size, size))


def _death(k: int, i: int, dim: int) -> sp.csr_matrix:
    eps = _eta(dim).T
    if i <= k - 2:
        return _kron(_eye(dim**i), eps, _eye(dim ** (k - 2 - i)))
    if k == 2:
        return sp.csr_matrix(eps)
    # wrap cap (k-1, 0): rotate twice, then contract factors 1 and 2
    contract = _kron(_eye(dim), eps, _eye(dim ** (k - 3)))
    rot = _rotation(k, dim)
    return sp.csr_matrix(contract @ rot @ rot)


def _birth(k: int, j: int, dim: int) -> sp.csr_matrix:
    if j <= k:
        return _kron(_eye(dim**j), _eta(dim), _eye(dim ** (k - j)))
    # wrap cup (k+1, 0): conjugate the slot-k insertion by the rotation
    inner = _kron(_eye(dim**k), _eta(dim))
    return sp.csr_matrix(_rotation(k + 2, dim) @ inner @ _rotation(k, dim).T)


class BarRep:
    """The bar functor S^1_k -> V^{(x)k} for V of dimension ``dim``.

    Generator images are cached; the cache is shared between threads and
    guarded by a lock.
    """

    def __init__(self, dim: int):
        if not isinstance(dim, int) or dim < 1:
            raise DimTooSmall(f"dimension must be at least 1, got {dim}")
        self.dim = dim
        self._cache: dict[Generator, Matrix] = {}
        self._lock = threading.Lock()

    def gen(self, g: Generator) -> Matrix:
        with self._lock:
            hit = self._cache.get(g)
        if hit is not None:
            return hit
        m = Matrix(self._build(g))
        with self._lock:
            self._cache.setdefault(g, m)
        return m

    def _build(self, g: Generator) -> sp.csr_matrix:
        n = self.dim
        if g.kind is Kind.ID:
            return _eye(n**g.k)
        if g.kind is Kind.TW:
            return _rotation(g.k, n)
        if g.kind is Kind.TWINV:
            return sp.csr_matrix(_rotation(g.k, n).T)
        if g.kind is Kind.BIRTH:
            return _birth(g.k, g.i, n)
        return _death(g.k, g.i, n)

    def word(self, w: GeneratorWord) -> Matrix:
        out = Matrix.identity(self.dim**w.n_in)
        for g in w.gens:
            out = self.gen(g) @ out
        return out


_REPS: dict[int, BarRep] = {}
_REPS_LOCK = threading.Lock()


def bar_rep(dim: int) -> BarRep:
    """A shared :class:`BarRep` per dimension."""
    with _REPS_LOCK:
        rep = _REPS.get(dim)
        if rep is None:
            rep = _REPS[dim] = BarRep(dim)
        return rep


def gen_matrix(g: Generator, dim: int) -> Matrix:
    return bar_rep(dim).gen(g) if isinstance(dim, int) and dim >= 1 else BarRep(dim).gen(g)


def word_matrix(w: GeneratorWord, dim: int) -> Matrix:
    """Image of a word; later generators multiply on the left."""
    return bar_rep(dim).word(w) if isinstance(dim, int) and dim >= 1 else BarRep(dim).word(w)


# ------------------------------------------------------------ delta polynomials

class DeltaPoly:
    """A polynomial in the loop value delta with rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, object] | None = None):
        clean = {}
        for e, c in (coeffs or {}).items():
            if e < 0:
                raise ValueError("negative delta exponent")
            c = _as_fraction(c)
            if c:
                clean[int(e)] = c
        self.coeffs = clean

    @classmethod
    def monomial(cls, e: int, c=1) -> DeltaPoly:
        return cls({e: c})

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: DeltaPoly) -> DeltaPoly:
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return DeltaPoly(out)

    def __mul__(self, other) -> DeltaPoly:
        if not isinstance(other, DeltaPoly):
            other = DeltaPoly({0: other})
        out: dict[int, Fraction] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return DeltaPoly(out)

    __rmul__ = __mul__

    def shift(self, e: int) -> DeltaPoly:
        return DeltaPoly({k + e: c for k, c in self.coeffs.items()})

    def __call__(self, delta) -> Fraction:
        delta = _as_fraction(delta)
        return sum((c * delta**e for e, c in self.coeffs.items()), Fraction(0))

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = DeltaPoly({0: other})
        return isinstance(other, DeltaPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            terms.append(str(c) if e == 0 else f"{c}*δ^{e}")
        return " + ".join(terms)


# ------------------------------------------------------------------ TL elements

class TLElement:
    """A finite delta-polynomial combination of loop-free affine diagrams."""

    __slots__ = ("source", "target", "terms")

    def __init__(self, source: int, target: int, terms: Mapping[AffineDiagram, DeltaPoly] | None = None):
        self.source = source
        self.target = target
        clean: dict[AffineDiagram, DeltaPoly] = {}
        for d, c in (terms or {}).items():
            if d.signature != (source, target):
                raise SignatureMismatch(f"diagram {d.signature} in element {source}->{target}")
            if d.mu:
                c, d = c.shift(d.mu), d.without_mu()
            acc = clean.get(d)
            c = c if acc is None else acc + c
            if c:
                clean[d] = c
            else:
                clean.pop(d, None)
        self.terms = clean

    @classmethod
    def identity(cls, k: int) -> TLElement:
        return tl_from_word(GeneratorWord.identity(k))

    def __add__(self, other: TLElement) -> TLElement:
        if (self.source, self.target) != (other.source, other.target):
            raise SignatureMismatch("cannot add elements of different hom-spaces")
        terms = dict(self.terms)
        for d, c in other.terms.items():
            terms[d] = terms[d] + c if d in terms else c
        return TLElement(self.source, self.target, terms)

    def scale(self, c) -> TLElement:
        c = c if isinstance(c, DeltaPoly) else DeltaPoly({0: c})
        return TLElement(self.source, self.target, {d: v * c for d, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TLElement)
            and (self.source, self.target) == (other.source, other.target)
            and self.terms == other.terms
        )

    def __repr__(self) -> str:
        return f"TLElement({self.source}->{self.target}, {len(self.terms)} terms)"


def tl_from_word(w: GeneratorWord) -> TLElement:
    d = evaluate(w)
    return TLElement(w.n_in, w.n_out, {d.without_mu(): DeltaPoly.monomial(d.mu)})


def tl_compose(x: TLElement, y: TLElement) -> TLElement:
    """``y`` after ``x``; each newly closed contractible loop becomes a factor delta."""
    if x.target != y.source:
        raise SignatureMismatch(f"cannot compose {x.source}->{x.target} with {y.source}->{y.target}")
    acc: dict[AffineDiagram, DeltaPoly] = {}
    for a, ca in x.terms.items():
        for b, cb in y.terms.items():
            d = compose_diagrams(a, b)
            c = (ca * cb).shift(d.mu)
            key = d.without_mu()
            acc[key] = acc[key] + c if key in acc else c
    return TLElement(x.source, y.target, acc)


def tl_evaluate(x: TLElement, rep: BarRep, delta_value) -> Matrix:
    """Sum of coefficient(delta_value) times the bar image of each diagram."""
    from .normal_form import diagram_word

    out = Matrix.zeros(rep.dim**x.target, rep.dim**x.source)
    for d, c in x.terms.items():
        out = out + rep.word(diagram_word(d)).scale(c(delta_value))
    return out
