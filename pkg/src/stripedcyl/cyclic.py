"""
Simplicial, cyclic, square-root-cyclic and annular (Atl) words, and their
translations into striped-cylinder words.

All words here are in application order, like :class:`GeneratorWord`.
Objects are the integers ``n`` standing for ``[n]``; in Atl the object
``0`` stands for both shaded versions ``[0+]`` and ``[0-]``, which the
translation sends to the same circle anyway.

Translation table (object ``[n]`` goes to ``S^1_{2n+2}`` for the cyclic
families and to ``S^1_{2n}`` for Atl)::

    face d(n,i)      -> d(2n+2, 2i)
    degen s(n,j)     -> b(2n+2, 2j+1)
    t(n)             -> tw(2n+2)^2
    sqrt_t(n)        -> tw(2n+2)
    a(n,i), 1<=i<=n  -> d(2n, 2i mod 2n)
    bb(n,i), 1<=i<=n+1 -> b(2n, 2i mod (2n+2))
    T(n)             -> tw(2n)^2
    loopid(n,j,k)    -> id(2n) carrying j+k contractible loops

Degeneracies land on odd slots: with even slots the identity
``d_{n+1}^{j+1} s_n^j = id`` would become a non-interacting birth/death
pair instead of a snake.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import ArityMismatch, InvalidGenerator, ShapeMismatch
from .linear import Matrix
from .words import Birth, Death, Generator, GeneratorWord, Tw


class BKind(enum.Enum):
    FACE = "dl"
    DEGEN = "s"
    CYC = "t"
    SQRT = "sqrt_t"
    A = "a"
    B = "bb"
    T = "T"
    LOOP = "loopid"


@dataclass(frozen=True, slots=True)
class BridgeGen:
    """One generator of a simplicial, cyclic, sqrt-cyclic or Atl word."""

    kind: BKind
    n: int
    i: int = 0
    j: int = 0  # only LoopId uses both i (unshaded) and j (shaded)

    def __post_init__(self) -> None:
        n, i, j = self.n, self.i, self.j
        k = self.kind
        bad = n < 0
        if k is BKind.FACE:
            bad |= n < 1 or not 0 <= i <= n
        elif k is BKind.DEGEN:
            bad |= not 0 <= i <= n
        elif k is BKind.A:
            bad |= n < 1 or not 1 <= i <= n
        elif k is BKind.B:
            bad |= not 1 <= i <= n + 1
        elif k is BKind.T:
            bad |= n < 1 or i != 0
        elif k is BKind.LOOP:
            bad |= i < 0 or j < 0
        else:
            bad |= i != 0
        if bad:
            raise InvalidGenerator(f"illegal generator {self}")

    @property
    def source(self) -> int:
        return self.n

    @property
    def target(self) -> int:
        if self.kind in (BKind.FACE, BKind.A):
            return self.n - 1
        if self.kind in (BKind.DEGEN, BKind.B):
            return self.n + 1
        return self.n

    def __str__(self) -> str:
        k = self.kind
        if k in (BKind.CYC, BKind.SQRT, BKind.T):
            return f"{k.value}({self.n})"
        if k is BKind.LOOP:
            return f"{k.value}({self.n},{self.i},{self.j})"
        return f"{k.value}({self.n},{self.i})"

    __repr__ = __str__


def FaceD(n: int, i: int) -> BridgeGen:
    return BridgeGen(BKind.FACE, n, i)


def Degen(n: int, j: int) -> BridgeGen:
    return BridgeGen(BKind.DEGEN, n, j)


def Cyc(n: int) -> BridgeGen:
    return BridgeGen(BKind.CYC, n)


def SqrtCyc(n: int) -> BridgeGen:
    return BridgeGen(BKind.SQRT, n)


def A(n: int, i: int) -> BridgeGen:
    return BridgeGen(BKind.A, n, i)


def B(n: int, i: int) -> BridgeGen:
    return BridgeGen(BKind.B, n, i)


def T(n: int) -> BridgeGen:
    return BridgeGen(BKind.T, n)


def LoopId(n: int, j: int, k: int) -> BridgeGen:
    return BridgeGen(BKind.LOOP, n, j, k)


class _BridgeWord:
    ALLOWED: frozenset = frozenset()
    __slots__ = ("gens", "n_in", "n_out")

    def __init__(self, gens: Iterable[BridgeGen] = (), n_in: int | None = None):
        gens = tuple(gens)
        for g in gens:
            if g.kind not in self.ALLOWED:
                raise InvalidGenerator(f"{g} is not a generator of {type(self).__name__}")
        if not gens and n_in is None:
            raise ValueError("an empty word needs an explicit object")
        cur = gens[0].source if gens else n_in
        if n_in is not None and n_in != cur:
            raise ArityMismatch(n_in, cur)
        start = cur
        for pos, g in enumerate(gens):
            if g.source != cur:
                raise ArityMismatch(cur, g.source, f"generator #{pos} ({g}) starts at [{g.source}], got [{cur}]")
            cur = g.target
        self.gens = gens
        self.n_in = start
        self.n_out = cur

    def then(self, other):
        if self.n_out != other.n_in:
            raise ArityMismatch(self.n_out, other.n_in)
        return type(self)(self.gens + other.gens, self.n_in)

    def __eq__(self, other) -> bool:
        return type(self) is type(other) and (self.gens, self.n_in) == (other.gens, other.n_in)

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.gens, self.n_in))

    def __len__(self) -> int:
        return len(self.gens)

    def __iter__(self) -> Iterator[BridgeGen]:
        return iter(self.gens)

    def __str__(self) -> str:
        if not self.gens:
            return f"id({self.n_in})"
        return ".".join(str(g) for g in reversed(self.gens))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({str(self)!r})"


_SIMPLICIAL = frozenset({BKind.FACE, BKind.DEGEN})


class SimplicialWord(_BridgeWord):
    ALLOWED = _SIMPLICIAL


class CyclicWord(_BridgeWord):
    ALLOWED = _SIMPLICIAL | {BKind.CYC}


class SqrtCyclicWord(_BridgeWord):
    ALLOWED = _SIMPLICIAL | {BKind.SQRT}


class AtlWord(_BridgeWord):
    ALLOWED = frozenset({BKind.A, BKind.B, BKind.T, BKind.LOOP})


# ------------------------------------------------------------ monotone maps

@dataclass(frozen=True, slots=True)
class MonotoneMap:
    """A weakly increasing map {0..m} -> {0..n}, stored as its value table."""

    dom: int
    cod: int
    table: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.table) != self.dom + 1:
            raise ValueError("table length must be dom + 1")
        if any(not 0 <= v <= self.cod for v in self.table):
            raise ValueError("value outside the codomain")
        if any(a > b for a, b in zip(self.table, self.table[1:])):
            raise ValueError("table is not weakly increasing")

    @classmethod
    def identity(cls, n: int) -> MonotoneMap:
        return cls(n, n, tuple(range(n + 1)))

    def after(self, inner: MonotoneMap) -> MonotoneMap:
        """``self`` composed with ``inner`` (``inner`` applied first)."""
        if inner.cod != self.dom:
            raise ArityMismatch(inner.cod, self.dom)
        return MonotoneMap(inner.dom, self.cod, tuple(self.table[v] for v in inner.table))


def _coface(n: int, i: int) -> MonotoneMap:
    # [n-1] -> [n], skipping i
    return MonotoneMap(n - 1, n, tuple(x if x < i else x + 1 for x in range(n)))


def _codegeneracy(n: int, j: int) -> MonotoneMap:
    # [n+1] -> [n], hitting j twice
    return MonotoneMap(n + 1, n, tuple(x if x <= j else x - 1 for x in range(n + 2)))


def monotone_semantics(w: SimplicialWord) -> MonotoneMap:
    """The map of finite ordinals dual to a word ``[n] -> [m]``: a map ``[m] -> [n]``."""
    out = MonotoneMap.identity(w.n_out)
    for g in reversed(w.gens):
        step = _coface(g.n, g.i) if g.kind is BKind.FACE else _codegeneracy(g.n, g.i)
        out = step.after(out)
    return out


# ------------------------------------------------------------ translations

def _cyclic_image(g: BridgeGen) -> list[Generator]:
    n = g.n
    if g.kind is BKind.FACE:
        return [Death(2 * n + 2, 2 * g.i)]
    if g.kind is BKind.DEGEN:
        return [Birth(2 * n + 2, 2 * g.i + 1)]
    if g.kind is BKind.CYC:
        return [Tw(2 * n + 2)] * 2
    if g.kind is BKind.SQRT:
        return [Tw(2 * n + 2)]
    raise InvalidGenerator(f"{g} has no cyclic image")


def lambda_to_cyl(w: CyclicWord | SimplicialWord) -> GeneratorWord:
    out: list[Generator] = []
    for g in w.gens:
        out += _cyclic_image(g)
    return GeneratorWord(out, 2 * w.n_in + 2)


def sqrtlambda_to_cyl(w: SqrtCyclicWord | SimplicialWord) -> GeneratorWord:
    return lambda_to_cyl(w)  # shared table; sqrt_t is its own entry


def atl_to_cyla(w: AtlWord) -> tuple[GeneratorWord, int]:
    """Translate an Atl word; returns the Cyl^a word and the loop tally."""
    out: list[Generator] = []
    mu = 0
    for g in w.gens:
        n = g.n
        if g.kind is BKind.A:
            out.append(Death(2 * n, (2 * g.i) % (2 * n)))
        elif g.kind is BKind.B:
            out.append(Birth(2 * n, (2 * g.i) % (2 * n + 2)))
        elif g.kind is BKind.T:
            out += [Tw(2 * n)] * 2
        else:
            mu += g.i + g.j
    return GeneratorWord(out, 2 * w.n_in), mu


def delta_double(w):
    """The doubling functor [n] -> [2n+1].

    Faces and degeneracies go to adjacent pairs; on cyclic words t(n) goes to
    t(2n+1)^2, so the result is again a cyclic word.
    """
    out: list[BridgeGen] = []
    for g in w.gens:
        n = g.n
        if g.kind is BKind.FACE:
            out += [FaceD(2 * n + 1, 2 * g.i), FaceD(2 * n, 2 * g.i)]
        elif g.kind is BKind.DEGEN:
            out += [Degen(2 * n + 1, 2 * g.i), Degen(2 * n + 2, 2 * g.i)]
        elif g.kind is BKind.CYC:
            out += [Cyc(2 * n + 1)] * 2
        else:
            raise InvalidGenerator(f"{g} is not doubled by delta_double; see sqrt_double")
    cls = CyclicWord if isinstance(w, CyclicWord) else SimplicialWord
    return cls(out, 2 * w.n_in + 1)


def sqrt_double(w: SqrtCyclicWord) -> CyclicWord:
    """The functor sqrt-Lambda -> Lambda: doubling on faces and degeneracies, sqrt_t(n) -> t(2n+1)."""
    out: list[BridgeGen] = []
    for g in w.gens:
        if g.kind is BKind.SQRT:
            out.append(Cyc(2 * g.n + 1))
        else:
            out += delta_double(SimplicialWord([g])).gens
    return CyclicWord(out, 2 * w.n_in + 1)


def cyclic_to_sqrt(w: CyclicWord) -> SqrtCyclicWord:
    """The inclusion Lambda -> sqrt-Lambda, t(n) -> sqrt_t(n)^2."""
    out: list[BridgeGen] = []
    for g in w.gens:
        out += [SqrtCyc(g.n)] * 2 if g.kind is BKind.CYC else [g]
    return SqrtCyclicWord(out, w.n_in)


# --------------------------------------------------------- relation catalogues

def _w(cls, *gens):
    return cls(gens)


def simplicial_relations(max_n: int = 5, cls=SimplicialWord) -> Iterator[tuple[str, object, object]]:
    """Identities (i)-(iii) as ``(label, lhs, rhs)`` pairs of words.

    Each is written in application order; ``n`` bounds every object that
    occurs.
    """
    for n in range(max_n + 1):
        # (i)  d^j_{n+1} then d^i_n  =  d^i_{n+1} then d^{j-1}_n, i < j
        if n + 1 <= max_n and n >= 1:
            for j in range(n + 2):
                for i in range(j):
                    yield (f"(i) n={n} i={i} j={j}",
                           _w(cls, FaceD(n + 1, j), FaceD(n, i)),
                           _w(cls, FaceD(n + 1, i), FaceD(n, j - 1)))
        # (ii) s^j_{n-1} then s^i_n  =  s^i_{n-1} then s^{j+1}_n, i <= j
        if 1 <= n < max_n:
            for j in range(n):
                for i in range(j + 1):
                    yield (f"(ii) n={n} i={i} j={j}",
                           _w(cls, Degen(n - 1, j), Degen(n, i)),
                           _w(cls, Degen(n - 1, i), Degen(n, j + 1)))
        # (iii) s^j_n then d^i_{n+1}
        if n + 1 <= max_n:
            for j in range(n + 1):
                for i in range(n + 2):
                    lhs = _w(cls, Degen(n, j), FaceD(n + 1, i))
                    if i in (j, j + 1):
                        rhs = cls((), n)
                    elif i < j:
                        rhs = _w(cls, FaceD(n, i), Degen(n - 1, j - 1))
                    else:
                        rhs = _w(cls, FaceD(n, i - 1), Degen(n - 1, j))
                    yield f"(iii) n={n} i={i} j={j}", lhs, rhs


def cyclic_relations(max_n: int = 5) -> Iterator[tuple[str, CyclicWord, CyclicWord]]:
    """Identities (i)-(vi) of the cyclic category."""
    yield from simplicial_relations(max_n, CyclicWord)
    for n in range(max_n + 1):
        yield f"(iv) n={n}", CyclicWord([Cyc(n)] * (n + 1)), CyclicWord((), n)
        if n + 1 <= max_n:
            for j in range(n):
                # s^j_n then t_{n+1}  =  t_n then s^{j+1}_n
                yield (f"(v) n={n} j={j}",
                       _w(CyclicWord, Degen(n, j), Cyc(n + 1)),
                       _w(CyclicWord, Cyc(n), Degen(n, j + 1)))
            for i in range(n + 1):
                # d^i_{n+1} then t_n  =  t_{n+1} then d^{i+1}_{n+1}
                yield (f"(vi) n={n} i={i}",
                       _w(CyclicWord, FaceD(n + 1, i), Cyc(n)),
                       _w(CyclicWord, Cyc(n + 1), FaceD(n + 1, i + 1)))


def sqrt_relations(max_n: int = 5) -> Iterator[tuple[str, SqrtCyclicWord, SqrtCyclicWord]]:
    """Identities (i)-(iii) together with the square-root versions of (iv)-(vi)."""
    yield from simplicial_relations(max_n, SqrtCyclicWord)
    S = SqrtCyclicWord
    for n in range(max_n + 1):
        yield f"(iv') n={n}", S([SqrtCyc(n)] * (2 * n + 2)), S((), n)
        if n + 1 <= max_n:
            for j in range(n):
                yield (f"(v') n={n} j={j}",
                       _w(S, Degen(n, j), SqrtCyc(n + 1), SqrtCyc(n + 1)),
                       _w(S, SqrtCyc(n), SqrtCyc(n), Degen(n, j + 1)))
            for i in range(n + 1):
                yield (f"(vi') n={n} i={i}",
                       _w(S, FaceD(n + 1, i), SqrtCyc(n), SqrtCyc(n)),
                       _w(S, SqrtCyc(n + 1), SqrtCyc(n + 1), FaceD(n + 1, i + 1)))


def atl_relations(max_n: int = 5) -> Iterator[tuple[str, AtlWord, AtlWord]]:
    """Annular relations that the generator assignment must respect.

    Rotation order, loop creation, rotation conjugation of a and b, far
    commutation among a's and among b's, and additivity of loop counters.
    """
    W = AtlWord
    for n in range(1, max_n + 1):
        yield f"T^n n={n}", W([T(n)] * n), W((), n)
        for i in range(1, n + 1):
            yield f"loop n={n} i={i}", _w(W, B(n - 1, i), A(n, i)), _w(W, LoopId(n - 1, 1, 0))
        for i in range(1, n):
            # b_i then T  =  T then b_{i+1}
            yield f"Tb n={n} i={i}", _w(W, B(n, i), T(n + 1)), _w(W, T(n), B(n, i + 1))
        # at the wrap the rotation carries the last cup onto slot 0
        yield f"Tb n={n} wrap", _w(W, B(n, n), T(n + 1)), _w(W, B(n, n + 1))
        if n >= 2:
            for i in range(1, n - 1):
                # a_i then T  =  T then a_{i+1}
                yield f"Ta n={n} i={i}", _w(W, A(n, i), T(n - 1)), _w(W, T(n), A(n, i + 1))
        if n >= 3:
            # a_n caps (0, 1) without relabelling, so the wrap costs a second rotation
            yield f"Ta n={n} wrap", _w(W, A(n, n - 1), T(n - 1)), _w(W, T(n), T(n), A(n, 1))
        if n >= 3:
            for j in range(2, n):
                for i in range(1, j):
                    yield (f"aa n={n} i={i} j={j}",
                           _w(W, A(n, j), A(n - 1, i)),
                           _w(W, A(n, i), A(n - 1, j - 1)))
        for j in range(1, n + 1):
            for i in range(1, j + 1):
                yield (f"bb n={n} i={i} j={j}",
                       _w(W, B(n, j), B(n + 1, i)),
                       _w(W, B(n, i), B(n + 1, j + 1)))
        yield (f"loops n={n}",
               _w(W, LoopId(n, 1, 2), LoopId(n, 0, 1)),
               _w(W, LoopId(n, 1, 3)))


# ---------------------------------------------------------- Cyl_0 extension

def cyl0_extension_report(d0: Matrix, d1: Matrix, b0: Matrix, b1: Matrix, t: Matrix) -> dict[str, bool]:
    """Check the conditions extending a sqrt-Lambda object to S^1_0.

    ``d0, d1`` are the images of the deaths out of S^1_2, ``b0, b1`` of the
    births into it, ``t`` the image of the twist on S^1_2.
    """
    top, x0 = d0.shape
    for name, m, want in (("d1", d1, (top, x0)), ("b0", b0, (x0, top)), ("b1", b1, (x0, top)), ("t", t, (x0, x0))):
        if m.shape != want:
            raise ShapeMismatch(f"{name} has shape {m.shape}, expected {want}")
    ident = Matrix.identity(top)
    return {
        "d0.b0 = id": d0 @ b0 == ident,
        "d1.b1 = id": d1 @ b1 == ident,
        "d0.t = d1": d0 @ t == d1,
        "t.b0 = b1": t @ b0 == b1,
    }


def check_cyl0_extension(d0: Matrix, d1: Matrix, b0: Matrix, b1: Matrix, t: Matrix) -> bool:
    return all(cyl0_extension_report(d0, d1, b0, b1, t).values())


def bar_extension_data(dim: int) -> tuple[Matrix, Matrix, Matrix, Matrix, Matrix]:
    """The bar model's own images of d(2,0), d(2,1), b(0,0), b(0,1), tw(2)."""
    from .linear import gen_matrix

    return (
        gen_matrix(Death(2, 0), dim),
        gen_matrix(Death(2, 1), dim),
        gen_matrix(Birth(0, 0), dim),
        gen_matrix(Birth(0, 1), dim),
        gen_matrix(Tw(2), dim),
    )


def parity_ok(words: Sequence[GeneratorWord]) -> bool:
    return all(w.n_in % 2 == 0 and w.n_out % 2 == 0 for w in words)
