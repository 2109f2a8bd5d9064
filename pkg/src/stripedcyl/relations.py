"""
The defining relations of Cyl and their edge-case companions.

Each relation is a pair of words (application order) plus the number of
contractible loops the left side carries over the right side; only the
contractible-circle relation has a nonzero offset. Names follow the usual
numbering: "1".."8" for the minimal list and "0*", "2*", "2**", "3*",
"4*", "5*" for the edge cases.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

from .diagram import evaluate, invariants
from .errors import OutOfRange
from .words import Birth, Death, GeneratorWord, Tw, power, word

RELATIONS = ("1", "2", "3", "4", "5", "6", "7", "8", "0*", "2*", "2**", "3*", "4*", "5*")


@dataclass(frozen=True, slots=True)
class RelationInstance:
    name: str
    k: int
    i: int = 0
    j: int = 0
    variant: int = 0  # selects between the two displayed equations of a starred relation

    def sides(self) -> tuple[GeneratorWord, GeneratorWord, int]:
        """Return ``(lhs, rhs, mu offset)``; raises :class:`OutOfRange` off-domain."""
        try:
            build = _BUILDERS[self.name]
        except KeyError:
            raise OutOfRange(f"unknown relation {self.name!r}") from None
        return build(self.k, self.i, self.j, self.variant)

    def __str__(self) -> str:
        return f"({self.name}) k={self.k} i={self.i} j={self.j} v={self.variant}"


def _need(cond: bool, what: str) -> None:
    if not cond:
        raise OutOfRange(what)


def _ident(k: int) -> GeneratorWord:
    return GeneratorWord.identity(k)


def _r1(k, i, j, v):
    _need(k >= 0 and 0 <= i <= k, f"(1) needs 0 <= i <= k, got k={k} i={i}")
    return word(Birth(k, i), Death(k + 2, i)), _ident(k), 1


def _r2(k, i, j, v):
    _need(k >= 0 and 0 <= i <= k and 0 <= j <= k and abs(i - j) == 1, f"(2) needs |i-j| = 1 in 0..k, got k={k} i={i} j={j}")
    return word(Birth(k, j), Death(k + 2, i)), _ident(k), 0


def _r3(k, i, j, v):
    _need(0 <= i <= k and 0 <= j <= k and abs(i - j) > 1, f"(3) needs |i-j| > 1 in 0..k, got k={k} i={i} j={j}")
    lhs = word(Birth(k, j), Death(k + 2, i))
    if i < j - 1:
        return lhs, word(Death(k, i), Birth(k - 2, j - 2)), 0
    return lhs, word(Death(k, i - 2), Birth(k - 2, j)), 0


def _r4(k, i, j, v):
    _need(0 <= i <= j <= k, f"(4) needs 0 <= i <= j <= k, got k={k} i={i} j={j}")
    return word(Birth(k, j), Birth(k + 2, i)), word(Birth(k, i), Birth(k + 2, j + 2)), 0


def _r5(k, i, j, v):
    _need(k >= 4 and 0 <= i < j - 1 and j < k - 1, f"(5) needs k >= 4, 0 <= i < j-1, j < k-1, got k={k} i={i} j={j}")
    return word(Death(k, j), Death(k - 2, i)), word(Death(k, i), Death(k - 2, j - 2)), 0


def _r6(k, i, j, v):
    _need(0 <= i <= k, f"(6) needs 0 <= i <= k, got k={k} i={i}")
    return word(Birth(k, i), Tw(k + 2)), word(Tw(k), Birth(k, i + 1)), 0


def _r7(k, i, j, v):
    _need(k >= 2 and 0 <= i < k - 1, f"(7) needs 0 <= i < k-1, got k={k} i={i}")
    return word(Death(k, i), Tw(k - 2)), word(Tw(k), Death(k, i + 1)), 0


def _r8(k, i, j, v):
    _need(k >= 0, "(8) needs k >= 0")
    return power(Tw(k), k), _ident(k), 0


def _r0s(k, i, j, v):
    _need(k == 0, "(0*) only exists for k = 0")
    return word(Birth(0, 0), Death(2, 1)), word(Birth(0, 1), Death(2, 0)), 0


def _r2s(k, i, j, v):
    # at k = 0 both composites are bracelets, not identities
    _need(k >= 1 and v in (0, 1), f"(2*) needs k >= 1, got k={k}")
    if v == 0:
        return word(Birth(k, k + 1), Death(k + 2, k)), _ident(k), 0
    return word(Birth(k, k), Death(k + 2, k + 1)), _ident(k), 0


def _r2ss(k, i, j, v):
    _need(v in (0, 1), "(2**) variant must be 0 or 1")
    if v == 0:
        _need(k >= 1, f"(2**) needs k >= 1, got k={k}")
        return word(Birth(k, 0), Death(k + 2, k + 1)), power(Tw(k), 2), 0
    _need(k >= 2, f"(2**) second form needs k >= 2, got k={k}")
    return word(Birth(k, k + 1), Death(k + 2, 0)), power(Tw(k), k - 2), 0


def _r3s(k, i, j, v):
    _need(k >= 2 and 1 <= i <= k - 1 and v in (0, 1), f"(3*) needs 1 <= i <= k-1, got k={k} i={i}")
    if v == 0:
        return word(Birth(k, k + 1), Death(k + 2, i)), word(Death(k, i), Birth(k - 2, k - 1)), 0
    return word(Birth(k, i), Death(k + 2, k + 1)), word(Death(k, k - 1), Birth(k - 2, i)), 0


def _r4s(k, i, j, v):
    _need(k >= 0 and 1 <= i <= k + 1, f"(4*) needs 1 <= i <= k+1, got k={k} i={i}")
    return word(Birth(k, k + 1), Birth(k + 2, i)), word(Birth(k, i), Birth(k + 2, k + 3)), 0


def _r5s(k, i, j, v):
    _need(k >= 4 and 1 <= i <= k - 3, f"(5*) needs k >= 4, 1 <= i <= k-3, got k={k} i={i}")
    return word(Death(k, k - 1), Death(k - 2, i)), word(Death(k, i), Death(k - 2, k - 3)), 0


_BUILDERS: dict[str, Callable] = {
    "1": _r1, "2": _r2, "3": _r3, "4": _r4, "5": _r5, "6": _r6, "7": _r7, "8": _r8,
    "0*": _r0s, "2*": _r2s, "2**": _r2ss, "3*": _r3s, "4*": _r4s, "5*": _r5s,
}


def instances(max_k: int = 8) -> Iterator[RelationInstance]:
    """Every legal instance of every relation with ``k <= max_k``."""
    R = RelationInstance
    yield R("0*", 0)
    for k in range(max_k + 1):
        for i in range(k + 1):
            yield R("1", k, i)
            yield R("6", k, i)
            for j in range(k + 1):
                if abs(i - j) == 1:
                    yield R("2", k, i, j)
                elif abs(i - j) > 1:
                    yield R("3", k, i, j)
                if i <= j:
                    yield R("4", k, i, j)
        if k >= 4:
            for j in range(k - 1):
                for i in range(j - 1):
                    yield R("5", k, i, j)
            for i in range(1, k - 2):
                yield R("5*", k, i)
        for i in range(max(k - 1, 0)):
            yield R("7", k, i)
        yield R("8", k)
        if k >= 1:
            yield R("2*", k, variant=0)
            yield R("2*", k, variant=1)
            yield R("2**", k, variant=0)
        if k >= 2:
            yield R("2**", k, variant=1)
            for i in range(1, k):
                yield R("3*", k, i, variant=0)
                yield R("3*", k, i, variant=1)
        for i in range(1, k + 2):
            yield R("4*", k, i)


def check_relation(instance: RelationInstance) -> bool:
    """Both sides agree in Cyl, and in Cyl^a once the loop offset is accounted for."""
    lhs, rhs, offset = instance.sides()
    a = invariants(evaluate(lhs))
    b = invariants(evaluate(rhs))
    return a.cyl_key() == b.cyl_key() and a.mu == b.mu + offset
