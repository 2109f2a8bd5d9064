"""
Generator alphabet and typed words for the striped-cylinder categories.

An object is a circle S^1_k with k marked points labeled 0..k-1 clockwise,
basepoint 0. The elementary morphisms are

    id_k, tw_k             S^1_k -> S^1_k     (identity, clockwise twist)
    tw'_k                  S^1_k -> S^1_k     (inverse twist, affine diagrams only)
    b_k^i   0 <= i <= k+1  S^1_k -> S^1_{k+2} (birth of an arc from i to i+1)
    d_k^i   0 <= i <= k-1  S^1_k -> S^1_{k-2} (death of the arc from i to i+1)

Words are stored in application order: ``gens[0]`` acts on the ingoing
circle first. ``str(word)`` renders mathematical order, so the word
``[b(2,1), d(4,1)]`` prints as ``d(4,1).b(2,1)``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import ArityMismatch, InvalidGenerator, NotEndomorphism


class Kind(enum.Enum):
    ID = "id"
    TW = "tw"
    TWINV = "tw'"
    BIRTH = "b"
    DEATH = "d"


@dataclass(frozen=True, slots=True)
class Generator:
    kind: Kind
    k: int
    i: int = 0

    def __post_init__(self) -> None:
        k, i = self.k, self.i
        if not isinstance(k, int) or not isinstance(i, int):
            raise InvalidGenerator(f"non-integer data in {self.kind.value}({k}, {i})")
        if k < 0:
            raise InvalidGenerator(f"negative arity {k}")
        if self.kind is Kind.BIRTH:
            if not 0 <= i <= k + 1:
                raise InvalidGenerator(f"b({k},{i}): slot must lie in 0..{k + 1}")
        elif self.kind is Kind.DEATH:
            if k < 2:
                raise InvalidGenerator(f"d({k},{i}): deaths need at least two points")
            if not 0 <= i <= k - 1:
                raise InvalidGenerator(f"d({k},{i}): slot must lie in 0..{k - 1}")
        elif i != 0:
            raise InvalidGenerator(f"{self.kind.value}({k}) takes no slot")

    @property
    def source(self) -> int:
        return self.k

    @property
    def target(self) -> int:
        if self.kind is Kind.BIRTH:
            return self.k + 2
        if self.kind is Kind.DEATH:
            return self.k - 2
        return self.k

    @property
    def is_endo(self) -> bool:
        return self.kind in (Kind.ID, Kind.TW, Kind.TWINV)

    def __str__(self) -> str:
        if self.kind in (Kind.BIRTH, Kind.DEATH):
            return f"{self.kind.value}({self.k},{self.i})"
        return f"{self.kind.value}({self.k})"

    __repr__ = __str__


def Id(k: int) -> Generator:
    return Generator(Kind.ID, k)


def Tw(k: int) -> Generator:
    return Generator(Kind.TW, k)


def TwInv(k: int) -> Generator:
    return Generator(Kind.TWINV, k)


def Birth(k: int, i: int) -> Generator:
    return Generator(Kind.BIRTH, k, i)


def Death(k: int, i: int) -> Generator:
    return Generator(Kind.DEATH, k, i)


def generator_signature(g: Generator) -> tuple[int, int]:
    """Return ``(source arity, target arity)`` of a generator."""
    return g.source, g.target


@dataclass(frozen=True, slots=True)
class ObjectLabel:
    """The object S^1_k."""

    k: int

    def __post_init__(self) -> None:
        if self.k < 0:
            raise InvalidGenerator(f"negative arity {self.k}")


@dataclass(frozen=True, slots=True, init=False)
class GeneratorWord:
    """A chain-typed sequence of generators, in application order.

    Explicit ``Id`` generators are checked for typing and then dropped.
    """

    gens: tuple[Generator, ...]
    n_in: int
    n_out: int

    def __init__(self, gens: Iterable[Generator] = (), n_in: int | None = None):
        gens = tuple(gens)
        if not gens and n_in is None:
            raise ValueError("an empty word needs an explicit arity")
        start = gens[0].source if gens else n_in
        if n_in is not None and n_in != start:
            raise ArityMismatch(n_in, start, f"declared arity {n_in} but first generator starts at {start}")
        if start < 0:
            raise InvalidGenerator(f"negative arity {start}")
        cur = start
        for pos, g in enumerate(gens):
            if g.source != cur:
                raise ArityMismatch(cur, g.source, f"generator #{pos} ({g}) expects arity {g.source}, got {cur}")
            cur = g.target
        # id_k is the unit; dropping it keeps words canonical
        gens = tuple(g for g in gens if g.kind is not Kind.ID)
        object.__setattr__(self, "gens", gens)
        object.__setattr__(self, "n_in", start)
        object.__setattr__(self, "n_out", cur)

    @classmethod
    def identity(cls, k: int) -> GeneratorWord:
        return cls((), k)

    @property
    def signature(self) -> tuple[int, int]:
        return self.n_in, self.n_out

    def then(self, other: GeneratorWord) -> GeneratorWord:
        return then(self, other)

    def __len__(self) -> int:
        return len(self.gens)

    def __iter__(self) -> Iterator[Generator]:
        return iter(self.gens)

    def __getitem__(self, index):
        return self.gens[index]

    def __str__(self) -> str:
        return format_word(self)

    def __repr__(self) -> str:
        return f"GeneratorWord({format_word(self)!r}, n_in={self.n_in})"


def word(*gens: Generator, n_in: int | None = None) -> GeneratorWord:
    return GeneratorWord(gens, n_in)


def then(f: GeneratorWord, g: GeneratorWord) -> GeneratorWord:
    """Compose ``f`` first, then ``g`` (mathematically ``g . f``)."""
    if f.n_out != g.n_in:
        raise ArityMismatch(f.n_out, g.n_in)
    return GeneratorWord(f.gens + g.gens, f.n_in)


def concat(words: Sequence[GeneratorWord], n_in: int | None = None) -> GeneratorWord:
    """Fold :func:`then` over a list of words (application order)."""
    if not words:
        if n_in is None:
            raise ValueError("empty composite needs an arity")
        return GeneratorWord.identity(n_in)
    out = words[0]
    for w in words[1:]:
        out = then(out, w)
    return out


def power(g: Generator | GeneratorWord, p: int) -> GeneratorWord:
    """Repeat an endomorphism ``p`` times; ``p = 0`` gives the identity."""
    if p < 0:
        raise ValueError("power must be non-negative")
    if isinstance(g, Generator):
        if not g.is_endo:
            raise NotEndomorphism(f"{g} maps {g.source} -> {g.target}")
        return GeneratorWord((g,) * p, g.source)
    if g.n_in != g.n_out:
        raise NotEndomorphism(f"word maps {g.n_in} -> {g.n_out}")
    return GeneratorWord(g.gens * p, g.n_in)


def eliminate_inverses(w: GeneratorWord) -> GeneratorWord:
    """Rewrite every tw'(k) as tw(k)^(k-1) (and tw'(0) as id(0)).

    Valid in Cyl and Cyl^a, where tw_k^k = id_k; not valid for affine
    diagrams, which keep track of Dehn twists.
    """
    if not any(g.kind is Kind.TWINV for g in w.gens):
        return w
    out: list[Generator] = []
    for g in w.gens:
        if g.kind is Kind.TWINV:
            out.extend([Tw(g.k)] * max(g.k - 1, 0))
        else:
            out.append(g)
    return GeneratorWord(out, w.n_in)


def _runs(gens: Sequence[Generator]) -> list[tuple[Generator, int]]:
    runs: list[tuple[Generator, int]] = []
    for g in gens:
        if runs and runs[-1][0] == g and g.kind in (Kind.TW, Kind.TWINV):
            runs[-1] = (g, runs[-1][1] + 1)
        else:
            runs.append((g, 1))
    return runs


def format_word(w: GeneratorWord) -> str:
    """Canonical text in mathematical order; runs of twists become powers."""
    if not w.gens:
        return f"id({w.n_in})"
    parts = [str(g) if n == 1 else f"{g}^{n}" for g, n in _runs(w.gens)]
    return ".".join(reversed(parts))
