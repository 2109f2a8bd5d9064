"""Reference computations that share no code with the modules they check."""

from __future__ import annotations

import itertools
from itertools import combinations

import numpy as np
import scipy.sparse as sp

from stripedcyl.diagram import BOTTOM, TOP, AffineDiagram
from stripedcyl.linear import Matrix


# ---------------------------------------------------------------- cap systems

def _arc(n: int, s: int, e: int) -> frozenset[int]:
    """Closed clockwise arc of labels from s to e."""
    out, x = {s}, s
    while x != e:
        x = (x + 1) % n
        out.add(x)
    return frozenset(out)


def _compatible(a: tuple[frozenset[int], frozenset[int]], b: tuple[frozenset[int], frozenset[int]]) -> bool:
    # (closed arc, interior): disjoint, or one sits strictly inside the other
    return not (a[0] & b[0]) or a[0] <= b[1] or b[0] <= a[1]


def all_cap_systems(n: int) -> dict[tuple[int, ...], frozenset[tuple[int, int]]]:
    """Every oriented non-crossing cap system on S^1_n, keyed by its start set.

    A cap (s, e) claims the clockwise arc s..e as its disc side. Arcs must
    be pairwise nested or disjoint and no uncapped point may lie inside one.
    """
    out: dict[tuple[int, ...], frozenset[tuple[int, int]]] = {}
    points = list(range(n))

    def matchings(free: list[int]):
        if not free:
            yield []
            return
        first, rest = free[0], free[1:]
        yield from ([] + m for m in matchings(rest))  # first stays uncapped
        for idx, partner in enumerate(rest):
            remaining = rest[:idx] + rest[idx + 1:]
            for m in matchings(remaining):
                yield [(first, partner)] + m

    for chords in matchings(points):
        used = {x for c in chords for x in c}
        through = [x for x in points if x not in used]
        for orient in itertools.product((0, 1), repeat=len(chords)):
            caps = [(a, b) if o == 0 else (b, a) for (a, b), o in zip(chords, orient)]
            arcs = [(_arc(n, s, e), _arc(n, s, e) - {s, e}) for s, e in caps]
            if any(not _compatible(x, y) for x, y in combinations(arcs, 2)):
                continue
            if any(t in arc for t in through for arc, _ in arcs):
                continue
            key = tuple(sorted(s for s, _ in caps))
            if key in out and out[key] != frozenset(caps):
                raise AssertionError(f"start set {key} is ambiguous on {n} points")
            out[key] = frozenset(caps)
    return out


# ------------------------------------------------------------ matrix oracle

def strands(d: AffineDiagram) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """Each strand once, as ((row, label), (row, label))."""
    seen = set()
    out = []
    for row, ends, per in ((BOTTOM, d.bottom, d.p), (TOP, d.top, d.q)):
        for x, (r2, pos) in enumerate(ends):
            other_per = d.p if r2 == BOTTOM else d.q
            a, b = (row, x), (r2, pos % other_per)
            key = frozenset((a, b))
            if key not in seen:
                seen.add(key)
                out.append((a, b))
    return out


def diagram_matrix(d: AffineDiagram, dim: int) -> Matrix:
    """dim^(loops) times the 0/1 matrix that equates the two ends of every strand."""
    st = strands(d)
    rows, cols = [], []
    for values in itertools.product(range(dim), repeat=len(st)):
        inp = [0] * d.p
        out = [0] * d.q
        for v, (a, b) in zip(values, st):
            for row, lbl in (a, b):
                (inp if row == BOTTOM else out)[lbl] = v
        rows.append(sum(v * dim ** (d.q - 1 - f) for f, v in enumerate(out)))
        cols.append(sum(v * dim ** (d.p - 1 - f) for f, v in enumerate(inp)))
    scale = dim ** (d.mu + d.beta)
    data = np.full(len(rows), scale, dtype=np.int64)
    return Matrix(sp.csr_matrix((data, (rows, cols)), shape=(dim**d.q, dim**d.p)))


# --------------------------------------------------------- Cyl equality oracle

def dehn_canonical(d: AffineDiagram) -> tuple:
    """Representative of d modulo full Dehn twists, with loop count forgotten."""
    bottom, top = list(d.bottom), list(d.top)
    through = [x for x, (r, _) in enumerate(bottom) if r == TOP]
    if through:
        y = bottom[through[0]][1]
        m = y // d.q  # twist so the first through strand lands in [0, q)
        bottom = [(r, pos - m * d.q) if r == TOP else (r, pos) for r, pos in bottom]
        top = [(r, pos + m * d.p) if r == BOTTOM else (r, pos) for r, pos in top]
    return d.p, d.q, tuple(bottom), tuple(top), d.beta
