"""
Unique factorization deaths -> (twists | bracelets) -> births.

The normal form is synthesized directly from the invariant tuple rather
than by rewriting: the death word is rebuilt from the death index, the
birth word from the birth index, and the middle factor is either a power
of the twist on the through strands or a stack of bracelets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .diagram import AffineDiagram, InvariantTuple, evaluate, invariants
from .errors import InconsistentIndex
from .words import (
    Birth,
    Death,
    Generator,
    GeneratorWord,
    Kind,
    Tw,
    concat,
    eliminate_inverses,
    format_word,
    power,
)


def reconstruct_caps(n: int, starts: Sequence[int]) -> tuple[list[tuple[int, int]], list[int]]:
    """Rebuild the non-crossing cap system on S^1_n with the given starting points.

    Returns ``(caps, through)`` where each cap is ``(start, end)`` read
    clockwise from the start. The scan walks the circle twice so that caps
    wrapping past the basepoint close on the second lap.
    """
    starts = sorted(set(starts))
    if any(not 0 <= s < n for s in starts):
        raise InconsistentIndex(f"start labels {starts} out of range for n={n}")
    if 2 * len(starts) > n:
        raise InconsistentIndex(f"{len(starts)} caps do not fit on {n} points")
    is_start = [False] * n
    for s in starts:
        is_start[s] = True
    used = [False] * n
    pushed = [False] * n
    stack: list[int] = []
    caps: list[tuple[int, int]] = []
    for step in range(2 * n):
        lbl = step % n
        if is_start[lbl]:
            if not pushed[lbl]:
                pushed[lbl] = True
                stack.append(lbl)
        elif not used[lbl] and stack:
            s = stack.pop()
            caps.append((s, lbl))
            used[s] = used[lbl] = True
    if stack:
        raise InconsistentIndex(f"starts {starts} on S^1_{n} leave caps {stack} unclosed")
    through = [x for x in range(n) if not used[x]]
    return sorted(caps, key=lambda c: (c[1] - c[0]) % n), through


def synthesize_type1(n: int, ind_d: Sequence[int]) -> GeneratorWord:
    """A deaths-only word out of S^1_n whose death index is ``ind_d``.

    Caps are removed innermost first; among caps whose ends are adjacent on
    the current circle the one with the smallest current start label goes
    first.
    """
    caps, _ = reconstruct_caps(n, ind_d)
    current = list(range(n))  # current position -> original label
    remaining = set(caps)
    gens: list[Generator] = []
    while remaining:
        k = len(current)
        where = {lbl: pos for pos, lbl in enumerate(current)}
        best = None
        for s, e in remaining:
            ps = where[s]
            if current[(ps + 1) % k] == e and (best is None or ps < best[0]):
                best = (ps, (s, e))
        if best is None:
            raise InconsistentIndex(f"no removable cap among {sorted(remaining)}")
        ps, cap = best
        remaining.discard(cap)
        gens.append(Death(k, ps))
        if ps <= k - 2:
            current = current[:ps] + current[ps + 2:]
        else:
            # d_k^{k-1}: the survivor at position k-2 becomes the new basepoint
            current = [current[k - 2]] + current[1:k - 2]
    return GeneratorWord(gens, n)


def _flip(w: GeneratorWord) -> GeneratorWord:
    """Vertical reflection: reverse the word and swap d_k^i <-> b_{k-2}^i."""
    gens = [Birth(g.k - 2, g.i) if g.kind is Kind.DEATH else Death(g.k + 2, g.i) for g in reversed(w.gens)]
    return GeneratorWord(gens, w.n_out)


def synthesize_type3(m: int, ind_b: Sequence[int]) -> GeneratorWord:
    """A births-only word into S^1_m whose birth index is ``ind_b``."""
    return _flip(synthesize_type1(m, ind_b))


@dataclass(frozen=True, slots=True)
class TwistPower:
    p: int


@dataclass(frozen=True, slots=True)
class Bracelets:
    b: int


@dataclass(frozen=True, slots=True)
class Empty:
    pass


Middle = Union[TwistPower, Bracelets, Empty]

BRACELET = GeneratorWord((Birth(0, 0), Death(2, 1)))


@dataclass(frozen=True, slots=True)
class NormalForm:
    deaths: GeneratorWord
    middle: Middle
    births: GeneratorWord
    mu: int = 0

    @property
    def tau(self) -> int:
        return self.deaths.n_out

    def middle_word(self) -> GeneratorWord:
        return _middle_word(self.middle, self.deaths.n_out)

    def assemble(self) -> GeneratorWord:
        return concat([self.deaths, self.middle_word(), self.births])

    def cyl_key(self) -> tuple:
        return self.deaths, self.middle, self.births

    def __str__(self) -> str:
        return format_normal_form(self)


def _middle_word(middle: Middle, k: int) -> GeneratorWord:
    if isinstance(middle, Bracelets):
        return power(BRACELET, middle.b)
    if isinstance(middle, TwistPower):
        return power(Tw(k), middle.p)
    return GeneratorWord.identity(k)


def assemble(nf: NormalForm) -> GeneratorWord:
    return nf.assemble()


def normal_form_of(inv: InvariantTuple) -> NormalForm:
    """Synthesize the normal form with the given invariants."""
    deaths = synthesize_type1(inv.n_in, inv.ind_d)
    births = synthesize_type3(inv.n_out, inv.ind_b)
    if inv.beta:
        return NormalForm(deaths, Bracelets(inv.beta), births, inv.mu)
    if inv.tau == 0:
        return NormalForm(deaths, Empty(), births, inv.mu)
    tau = inv.tau
    base = invariants(evaluate(concat([deaths, births]))).t0
    # first guess from additivity of t0, then fall back to the full search
    guess = (inv.t0 - base) % tau
    order = [guess] + [p for p in range(tau) if p != guess]
    for p in order:
        cand = concat([deaths, power(Tw(tau), p), births])
        if invariants(evaluate(cand)).t0 == inv.t0:
            return NormalForm(deaths, TwistPower(p), births, inv.mu)
    raise AssertionError(f"no twist power reproduces t0={inv.t0}")


def normalize(w: GeneratorWord) -> NormalForm:
    return normal_form_of(invariants(evaluate(eliminate_inverses(w))))


def diagram_word(d: AffineDiagram) -> GeneratorWord:
    """A loop-free word with the same Cyl class (and bracelets) as ``d``."""
    return normal_form_of(invariants(d)).assemble()


def format_normal_form(nf: NormalForm) -> str:
    """Text in mathematical order: births . middle . deaths."""
    parts = []
    if nf.births.gens:
        parts.append(format_word(nf.births))
    if isinstance(nf.middle, Bracelets):
        inner = format_word(BRACELET)
        parts.append(inner if nf.middle.b == 1 else f"({inner})^{nf.middle.b}")
    elif isinstance(nf.middle, TwistPower) and nf.middle.p:
        mid = Tw(nf.tau)
        parts.append(str(mid) if nf.middle.p == 1 else f"{mid}^{nf.middle.p}")
    if nf.deaths.gens:
        parts.append(format_word(nf.deaths))
    return ".".join(parts) if parts else f"id({nf.deaths.n_in})"
