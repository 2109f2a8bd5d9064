"""
Affine diagrams: the universal-cover model of striped cylinders.

A morphism S^1_p -> S^1_q lifts to the strip R x [0, 1] with the ingoing
marked points at integer positions on the bottom row and the outgoing ones
on the top row; position x carries label x mod period, and positions grow
clockwise. The lifted picture is invariant under the deck transformation
that moves the bottom row by p and the top row by q at the same time.

Each end in the fundamental domain stores the absolute lifted position of
its partner, ``(row, pos)``. A partner at ``(TOP, y)`` of bottom end ``a``
means the lift at bottom position ``a`` is joined to top position ``y``;
the lift at ``a + m*p`` is then joined to ``y + m*q``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace
from typing import NamedTuple, Sequence

from .errors import InvalidDiagram, PeriodMismatch, SignatureMismatch, WindingViolation
from .words import Generator, GeneratorWord, Kind, eliminate_inverses

BOTTOM = 0
TOP = 1

End = tuple[int, int]  # (row, absolute lifted position)


class Row(enum.IntEnum):
    BOTTOM = BOTTOM
    TOP = TOP


class Partner(NamedTuple):
    row: Row
    index: int
    shift: int


class Category(enum.Enum):
    CYL = "cyl"
    CYLA = "cyla"
    DA = "da"


@dataclass(frozen=True, slots=True)
class AffineDiagram:
    p: int
    q: int
    bottom: tuple[End, ...]
    top: tuple[End, ...]
    beta: int = 0
    mu: int = 0

    def period(self, row: int) -> int:
        return self.p if row == BOTTOM else self.q

    def follow(self, row: int, pos: int) -> End:
        """Partner of the lifted end at absolute position ``pos`` of ``row``."""
        per = self.p if row == BOTTOM else self.q
        m, idx = divmod(pos, per)
        r2, pos2 = (self.bottom if row == BOTTOM else self.top)[idx]
        if m:
            pos2 += m * (self.p if r2 == BOTTOM else self.q)
        return r2, pos2

    def partner(self, row: int, index: int) -> Partner:
        r2, pos2 = (self.bottom if row == BOTTOM else self.top)[index]
        shift, idx = divmod(pos2, self.period(r2))
        return Partner(Row(r2), idx, shift)

    def without_mu(self) -> AffineDiagram:
        return replace(self, mu=0) if self.mu else self

    @property
    def signature(self) -> tuple[int, int]:
        return self.p, self.q

    def validate(self) -> AffineDiagram:
        """Raise :class:`InvalidDiagram` unless every structural invariant holds."""
        p, q = self.p, self.q
        if p < 0 or q < 0 or len(self.bottom) != p or len(self.top) != q:
            raise InvalidDiagram("period/length mismatch")
        if (p - q) % 2:
            raise InvalidDiagram("periods must have equal parity")
        if self.beta < 0 or self.mu < 0:
            raise InvalidDiagram("negative loop count")
        for row, ends in ((BOTTOM, self.bottom), (TOP, self.top)):
            for idx, (r2, pos2) in enumerate(ends):
                if r2 not in (BOTTOM, TOP):
                    raise InvalidDiagram(f"bad row {r2}")
                if r2 == row and pos2 == idx:
                    raise InvalidDiagram(f"end {idx} on row {row} is its own partner")
                if self.follow(r2, pos2) != (row, idx):
                    raise InvalidDiagram(f"partner map is not an involution at ({row}, {idx})")
        self._check_planar()
        return self

    def _check_planar(self) -> None:
        # Arcs on one row may only enclose arcs nested inside them; through
        # strands must be strictly increasing from bottom to top.
        for row, ends in ((BOTTOM, self.bottom), (TOP, self.top)):
            per = self.period(row)
            for idx, (r2, pos2) in enumerate(ends):
                if r2 != row or pos2 < idx:
                    continue
                lo, hi = idx, pos2
                if hi - lo >= per:
                    raise InvalidDiagram(f"arc ({lo}, {hi}) on row {row} spans a full period")
                for z in range(lo + 1, hi):
                    rz, pz = self.follow(row, z)
                    if rz != row or not lo < pz < hi:
                        raise InvalidDiagram(f"arc ({lo}, {hi}) on row {row} is crossed at {z}")
        through = [(idx, pos2) for idx, (r2, pos2) in enumerate(self.bottom) if r2 == TOP]
        for (_, y1), (_, y2) in zip(through, through[1:]):
            if y2 <= y1:
                raise InvalidDiagram("through strands cross")
        if through and through[0][1] + self.q <= through[-1][1]:
            raise InvalidDiagram("through strands cross across the period boundary")

    def __str__(self) -> str:
        def fmt(ends):
            return "[" + ", ".join(("B" if r == BOTTOM else "T") + str(x) for r, x in ends) + "]"

        return f"AffineDiagram({self.p}->{self.q}, bottom={fmt(self.bottom)}, top={fmt(self.top)}, beta={self.beta}, mu={self.mu})"


def from_edges(p: int, q: int, edges: Sequence[tuple[End, End]], beta: int = 0, mu: int = 0) -> AffineDiagram:
    """Build a diagram from one lifted representative of every strand."""
    bottom: list[End | None] = [None] * p
    top: list[End | None] = [None] * q
    per = (p, q)

    def place(a: End, b: End) -> None:
        m, idx = divmod(a[1], per[a[0]])
        slot = bottom if a[0] == BOTTOM else top
        if slot[idx] is not None:
            raise InvalidDiagram(f"end {idx} on row {a[0]} used twice")
        slot[idx] = (b[0], b[1] - m * per[b[0]])

    for a, b in edges:
        place(a, b)
        place(b, a)
    if any(e is None for e in bottom) or any(e is None for e in top):
        raise InvalidDiagram("not every end is matched")
    return AffineDiagram(p, q, tuple(bottom), tuple(top), beta, mu)


def identity_diagram(k: int) -> AffineDiagram:
    return AffineDiagram(k, k, tuple((TOP, x) for x in range(k)), tuple((BOTTOM, x) for x in range(k)))


def _slanted(k: int, offset: int) -> AffineDiagram:
    if k == 0:
        return identity_diagram(0)
    return from_edges(k, k, [((BOTTOM, x), (TOP, x + offset)) for x in range(k)])


def generator_diagram(g: Generator) -> AffineDiagram:
    """The affine diagram of a single generator.

    Births and deaths use one uniform lift that covers the edge slots too:
    b_k^i has cup (i, i+1) on top and top i+2+m joined to bottom i+m;
    d_k^i has cap (i, i+1) on the bottom and bottom i+2+m joined to top i+m.
    """
    k, i = g.k, g.i
    if g.kind is Kind.ID:
        return identity_diagram(k)
    if g.kind is Kind.TW:
        return _slanted(k, 1)
    if g.kind is Kind.TWINV:
        return _slanted(k, -1)
    if g.kind is Kind.BIRTH:
        edges = [((TOP, i), (TOP, i + 1))]
        edges += [((BOTTOM, i + m), (TOP, i + 2 + m)) for m in range(k)]
        return from_edges(k, k + 2, edges)
    edges = [((BOTTOM, i), (BOTTOM, i + 1))]
    edges += [((BOTTOM, i + 2 + m), (TOP, i + m)) for m in range(k - 2)]
    return from_edges(k, k - 2, edges)


def compose_diagrams(a: AffineDiagram, b: AffineDiagram, check: bool = True) -> AffineDiagram:
    """Stack ``b`` on top of ``a`` (``a`` applied first) and trace strands.

    Closed loops formed in the middle row are classified by their winding:
    net shift 0 is a contractible loop (``mu``), net shift +-1 a bracelet
    (``beta``).
    """
    if a.q != b.p:
        raise PeriodMismatch(f"cannot stack {a.p}->{a.q} under {b.p}->{b.q}")
    p, q, r = a.p, a.q, b.q
    visited = [False] * q
    bottom: list[End] = []
    top: list[End] = []

    for x in range(p):
        row, pos = a.follow(BOTTOM, x)
        while True:
            if row == BOTTOM:
                bottom.append((BOTTOM, pos))
                break
            visited[pos % q] = True
            row, pos = b.follow(BOTTOM, pos)
            if row == TOP:
                bottom.append((TOP, pos))
                break
            visited[pos % q] = True
            row, pos = a.follow(TOP, pos)

    for x in range(r):
        row, pos = b.follow(TOP, x)
        while True:
            if row == TOP:
                top.append((TOP, pos))
                break
            visited[pos % q] = True
            row, pos = a.follow(TOP, pos)
            if row == BOTTOM:
                top.append((BOTTOM, pos))
                break
            visited[pos % q] = True
            row, pos = b.follow(BOTTOM, pos)

    mu, beta = a.mu + b.mu, a.beta + b.beta
    for c in range(q):
        if visited[c]:
            continue
        pos = c
        while True:
            visited[pos % q] = True
            row, pos = a.follow(TOP, pos)
            if row != TOP:
                raise InvalidDiagram("closed loop leaked to the bottom row")
            visited[pos % q] = True
            row, pos = b.follow(BOTTOM, pos)
            if row != BOTTOM:
                raise InvalidDiagram("closed loop leaked to the top row")
            if pos % q == c:
                break
        winding = (pos - c) // q
        if winding == 0:
            mu += 1
        elif abs(winding) == 1:
            beta += 1
        else:
            raise WindingViolation(f"closed loop with winding {winding}")

    out = AffineDiagram(p, r, tuple(bottom), tuple(top), beta, mu)
    if check:
        out.validate()
    return out


def evaluate(w: GeneratorWord, check: bool = True) -> AffineDiagram:
    """Fold :func:`compose_diagrams` over a word (inverse twists allowed)."""
    out = identity_diagram(w.n_in)
    for g in w.gens:
        out = compose_diagrams(out, generator_diagram(g), check)
    return out


@dataclass(frozen=True, slots=True)
class InvariantTuple:
    n_in: int
    n_out: int
    ind_d: tuple[int, ...]
    ind_b: tuple[int, ...]
    tau: int
    t0: int | None
    beta: int
    mu: int
    caps: tuple[tuple[int, int], ...] = field(default=(), compare=False)
    cups: tuple[tuple[int, int], ...] = field(default=(), compare=False)
    through: tuple[tuple[int, int], ...] = field(default=(), compare=False)

    def cyl_key(self) -> tuple:
        """The part of the tuple that decides equality in Cyl."""
        return self.n_in, self.n_out, self.ind_d, self.ind_b, self.tau, self.t0, self.beta

    def cyla_key(self) -> tuple:
        return self.cyl_key() + (self.mu,)

    def as_dict(self) -> dict:
        return {
            "n_in": self.n_in,
            "n_out": self.n_out,
            "tau": self.tau,
            "t0": self.t0,
            "beta": self.beta,
            "mu": self.mu,
            "ind_d": list(self.ind_d),
            "ind_b": list(self.ind_b),
            "caps": [list(c) for c in self.caps],
            "cups": [list(c) for c in self.cups],
            "through": [list(t) for t in self.through],
        }


def _arcs(ends: Sequence[End], row: int, per: int) -> list[tuple[int, int]]:
    # Lift (x, y) with x < y bounds the disc; its start is x mod per.
    arcs = set()
    for idx, (r2, pos2) in enumerate(ends):
        if r2 == row:
            lo, hi = min(idx, pos2), max(idx, pos2)
            arcs.add((lo % per, hi % per))
    return sorted(arcs)


def invariants(d: AffineDiagram) -> InvariantTuple:
    caps = _arcs(d.bottom, BOTTOM, d.p)
    cups = _arcs(d.top, TOP, d.q)
    through = sorted((x, pos % d.q) for x, (r2, pos) in enumerate(d.bottom) if r2 == TOP)
    tau = len(through)
    t0 = None
    if tau:
        top_labels = sorted(y for _, y in through)
        t0 = top_labels.index(through[0][1]) + 1
    return InvariantTuple(
        n_in=d.p,
        n_out=d.q,
        ind_d=tuple(s for s, _ in caps),
        ind_b=tuple(s for s, _ in cups),
        tau=tau,
        t0=t0,
        beta=d.beta,
        mu=d.mu,
        caps=tuple(caps),
        cups=tuple(cups),
        through=tuple(through),
    )


def word_invariants(w: GeneratorWord) -> InvariantTuple:
    return invariants(evaluate(w))


def eq_in(cat: Category | str, w1: GeneratorWord, w2: GeneratorWord) -> bool:
    """Decide equality of two words as morphisms of Cyl, Cyl^a or D^a."""
    cat = Category(cat)
    if w1.signature != w2.signature:
        raise SignatureMismatch(f"{w1.signature} vs {w2.signature}")
    if cat is Category.DA:
        return evaluate(w1) == evaluate(w2)
    i1 = invariants(evaluate(eliminate_inverses(w1)))
    i2 = invariants(evaluate(eliminate_inverses(w2)))
    if cat is Category.CYL:
        return i1.cyl_key() == i2.cyl_key()
    return i1.cyla_key() == i2.cyla_key()
