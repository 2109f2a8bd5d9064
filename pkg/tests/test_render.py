import xml.etree.ElementTree as ET

import pytest

from stripedcyl.diagram import evaluate, invariants
from stripedcyl.grammar import parse_word
from stripedcyl.render import render_svg

NS = "{http://www.w3.org/2000/svg}"


def _classes(svg):
    root = ET.fromstring(svg)
    return [set(el.get("class", "").split()) for el in root.iter() if el.tag in (NS + "path", NS + "circle")]


def _strands(svg, kind=None):
    return [c for c in _classes(svg) if "strand" in c and (kind is None or kind in c)]


@pytest.mark.parametrize(
    "text, cups, caps, through, bracelets",
    [("b(2,0)", 1, 0, 2, 0), ("d(2,1).b(0,0)", 0, 0, 0, 1), ("id(4)", 0, 0, 4, 0), ("d(6,1).tw(6)", 0, 1, 4, 0)],
)
def test_strand_counts(text, cups, caps, through, bracelets):
    svg = render_svg(evaluate(parse_word(text)), title=text)
    assert len(_strands(svg, "cup")) == cups
    assert len(_strands(svg, "cap")) == caps
    assert len(_strands(svg, "through")) == through
    assert len(_strands(svg, "bracelet")) == bracelets


def test_strand_total_matches_invariants():
    for text in ("b(4,3).tw(4)^3", "(d(2,1).b(0,0))^3", "d(4,2).d(6,0).b(4,1)"):
        d = evaluate(parse_word(text))
        inv = invariants(d)
        svg = render_svg(d)
        assert len(_strands(svg)) == len(inv.caps) + len(inv.cups) + inv.tau + inv.beta


def test_boundaries_points_and_legend():
    svg = render_svg(evaluate(parse_word("tw(3)")), title="tw(3)")
    classes = _classes(svg)
    assert sum("ingoing" in c for c in classes) == 1 and sum("outgoing" in c for c in classes) == 1
    assert sum("basepoint" in c for c in classes) == 2
    assert sum("point" in c for c in classes) == 6
    assert "tau=3 t0=2" in svg
