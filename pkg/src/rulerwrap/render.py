"""Arc diagram of a ruler's hinges as an SVG document.

The ruler is the horizontal baseline; each hinge i >= 1 gets a semicircle
of radius equal to its wrapping length, centered on the hinge, with the
apex dotted.  The arc of the hinge folded last in the given answer is
highlighted.  Geometry is in ruler units inside a viewBox with a 10%
margin, so only the apex coordinates carry meaning.
"""

from __future__ import annotations

from typing import Sequence

from .core import ArcPair, Ruler, WrapAnswer

_BASE = "#222222"
_ARC = "#4682b4"
_APEX = "#cc2222"
_PICK = "#e08020"


def render_svg(ruler: Ruler, pairs: Sequence[ArcPair], answer: WrapAnswer) -> str:
    x_n = ruler.total
    max_y = max(p.y for p in pairs)
    margin = max(1.0, 0.1 * x_n)
    width = x_n + 2 * margin
    height = max_y + 2 * margin
    unit = max(width, height) / 300.0  # stroke scale in ruler units

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{_f(-margin)} {_f(-(max_y + margin))}'
        f' {_f(width)} {_f(height)}">',
        f'<line x1="0" y1="0" x2="{x_n}" y2="0" stroke="{_BASE}" stroke-width="{_f(2 * unit)}"/>',
    ]
    tick = 2.5 * unit
    for x in ruler.positions:
        out.append(
            f'<line x1="{x}" y1="{_f(-tick)}" x2="{x}" y2="{_f(tick)}"'
            f' stroke="{_BASE}" stroke-width="{_f(unit)}"/>'
        )
    for p in pairs:
        if p.hinge == 0:
            continue
        picked = p.hinge == answer.last_fold
        color = _PICK if picked else _ARC
        sw = (2.4 if picked else 1.2) * unit
        out.append(
            f'<path d="M {p.x - p.y} 0 A {p.y} {p.y} 0 0 1 {p.x + p.y} 0"'
            f' fill="none" stroke="{color}" stroke-width="{_f(sw)}"/>'
        )
    for p in pairs:
        if p.hinge == 0:
            continue
        out.append(f'<circle cx="{p.x}" cy="{-p.y}" r="{_f(2 * unit)}" fill="{_APEX}"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _f(value: float) -> str:
    return f"{value:g}"
