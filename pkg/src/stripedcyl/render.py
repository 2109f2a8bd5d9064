"""SVG drawing of an evaluated diagram on the annulus.

The ingoing circle is the outer one and the outgoing circle the inner one.
Marked points run clockwise from 12 o'clock; the basepoint is highlighted.
Strands are drawn by following their lifts, so a through strand that winds
once around the cylinder visibly spirals. Every strand is a single
``<path class="strand ...">`` element.
"""

from __future__ import annotations

import math
from xml.sax.saxutils import escape

from .diagram import BOTTOM, AffineDiagram, invariants

SIZE = 420
CX = CY = SIZE / 2
R_IN = 170.0  # ingoing boundary (outer circle)
R_OUT = 70.0  # outgoing boundary (inner circle)
STEPS = 48


def _xy(r: float, turns: float) -> tuple[float, float]:
    a = 2 * math.pi * turns - math.pi / 2
    return CX + r * math.cos(a), CY + r * math.sin(a)


def _poly(points) -> str:
    head, *rest = points
    return f"M{head[0]:.2f},{head[1]:.2f} " + " ".join(f"L{x:.2f},{y:.2f}" for x, y in rest)


def _arc(r0: float, t0: float, r1: float, t1: float, depth: float) -> str:
    """Sampled curve from (r0, t0) to (r1, t1); ``depth`` bulges the radius in the middle."""
    pts = []
    for s in range(STEPS + 1):
        u = s / STEPS
        r = r0 + (r1 - r0) * u + depth * math.sin(math.pi * u)
        pts.append(_xy(r, t0 + (t1 - t0) * u))
    return _poly(pts)


def _strands(d: AffineDiagram) -> list[tuple[str, str]]:
    out: list[tuple[str, str]] = []
    mid = (R_IN + R_OUT) / 2
    for x, (row, pos) in enumerate(d.bottom):
        if row == BOTTOM and pos > x:
            span = (pos - x) / d.p
            out.append(("cap", _arc(R_IN, x / d.p, R_IN, pos / d.p, -(R_IN - mid) * min(1.0, 0.35 + span))))
        elif row != BOTTOM:
            out.append(("through", _arc(R_IN, x / d.p, R_OUT, pos / d.q, 0.0)))
    for y, (row, pos) in enumerate(d.top):
        if row != BOTTOM and pos > y:
            span = (pos - y) / d.q
            out.append(("cup", _arc(R_OUT, y / d.q, R_OUT, pos / d.q, (mid - R_OUT) * min(1.0, 0.35 + span))))
    for b in range(d.beta):
        r = R_OUT + (R_IN - R_OUT) * (b + 1) / (d.beta + 1)
        x0, y0 = _xy(r, 0)
        x1, y1 = _xy(r, 0.5)
        out.append(("bracelet", f"M{x0:.2f},{y0:.2f} A{r:.2f},{r:.2f} 0 1 1 {x1:.2f},{y1:.2f} A{r:.2f},{r:.2f} 0 1 1 {x0:.2f},{y0:.2f} Z"))
    return out


def render_svg(d: AffineDiagram, title: str = "") -> str:
    inv = invariants(d)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE + 90}" viewBox="0 0 {SIZE} {SIZE + 90}">',
        "<style>.boundary{fill:none;stroke:#888;stroke-width:1.5}"
        ".strand{fill:none;stroke:#1f4e9c;stroke-width:2}.bracelet{stroke:#b5651d}"
        ".point{fill:#222}.basepoint{fill:#d62728}.label{font:11px sans-serif}"
        ".legend{font:12px monospace}</style>",
    ]
    if title:
        parts.append(f"<title>{escape(title)}</title>")
    parts.append(f'<circle class="boundary ingoing" cx="{CX}" cy="{CY}" r="{R_IN}"/>')
    parts.append(f'<circle class="boundary outgoing" cx="{CX}" cy="{CY}" r="{R_OUT}"/>')
    for kind, path in _strands(d):
        parts.append(f'<path class="strand {kind}" d="{path}"/>')
    for r, n, side, push in ((R_IN, d.p, "in", 14), (R_OUT, d.q, "out", -12)):
        for x in range(n):
            px, py = _xy(r, x / n)
            lx, ly = _xy(r + push, x / n)
            cls = "point basepoint" if x == 0 else "point"
            parts.append(f'<circle class="{cls} {side}" cx="{px:.2f}" cy="{py:.2f}" r="{4 if x == 0 else 3}"/>')
            parts.append(f'<text class="label" x="{lx:.2f}" y="{ly + 4:.2f}" text-anchor="middle">{x}</text>')
    legend = [
        f"{inv.n_in} -> {inv.n_out}   tau={inv.tau} t0={'-' if inv.t0 is None else inv.t0}",
        f"ind_d={list(inv.ind_d)} ind_b={list(inv.ind_b)}",
        f"beta={inv.beta} mu={inv.mu}",
    ]
    for row, line in enumerate(legend):
        parts.append(f'<text class="legend" x="12" y="{SIZE + 22 + 20 * row}">{escape(line)}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
