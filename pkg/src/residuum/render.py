"""Deterministic SVG drawings of residue designs.

Nail ``k`` sits at angle ``2*pi*k/n`` measured counterclockwise from the
3 o'clock position; screen y grows downward, hence the minus sign on sine.
Coordinates are written with three decimals and elements are emitted in a
fixed order, so equal inputs give byte-identical documents.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .designgraph import DOUBLED, DesignGraph

__all__ = ["RenderStyle", "nail_position", "to_svg"]

LINE_COLOR = "#1f3b73"
DOUBLED_COLOR = "#c0392b"
NAIL_COLOR = "#222222"


@dataclass(frozen=True)
class RenderStyle:
    canvas_size: float = 600.0
    margin: float = 24.0
    stroke_width: float = 0.6
    highlight_doubled: bool = False
    show_labels: bool = False
    label_every: int = 1

    def validate(self) -> None:
        if not self.canvas_size > 2 * self.margin:
            raise ValueError("canvas_size must exceed twice the margin")
        if self.margin < 0:
            raise ValueError("margin must be nonnegative")
        if not self.stroke_width > 0:
            raise ValueError("stroke_width must be positive")
        if self.label_every < 1:
            raise ValueError("label_every must be >= 1")

    @property
    def radius(self) -> float:
        return self.canvas_size / 2 - self.margin


def nail_position(k: int, n: int, style: RenderStyle) -> tuple[float, float]:
    c = style.canvas_size / 2
    angle = 2 * math.pi * k / n
    return c + style.radius * math.cos(angle), c - style.radius * math.sin(angle)


def _f(x: float) -> str:
    s = f"{x:.3f}"
    return "0.000" if s == "-0.000" else s


def to_svg(graph: DesignGraph, style: RenderStyle | None = None) -> str:
    style = style or RenderStyle()
    style.validate()
    n = graph.n
    size = _f(style.canvas_size)
    c = _f(style.canvas_size / 2)
    pos = [nail_position(k, n, style) for k in range(n)]
    nail_r = max(style.stroke_width * 2, 1.5)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f"<title>Residue design n={n} a={graph.a}</title>",
        f'<rect x="0" y="0" width="{size}" height="{size}" fill="white"/>',
        f'<circle class="boundary" cx="{c}" cy="{c}" r="{_f(style.radius)}" fill="none" '
        f'stroke="#999999" stroke-width="{_f(style.stroke_width)}"/>',
        f'<g class="segments" stroke="{LINE_COLOR}" stroke-width="{_f(style.stroke_width)}" '
        'stroke-linecap="round">',
    ]
    for (s, t), tag in sorted(graph.edges.items()):
        (x1, y1), (x2, y2) = pos[s], pos[t]
        attrs = ""
        if style.highlight_doubled and tag == DOUBLED:
            attrs = f' class="doubled" stroke="{DOUBLED_COLOR}" stroke-width="{_f(style.stroke_width * 2.5)}"'
        out.append(
            f'<line x1="{_f(x1)}" y1="{_f(y1)}" x2="{_f(x2)}" y2="{_f(y2)}"{attrs}/>'
        )
    out.append("</g>")

    out.append(f'<g class="nails" fill="{NAIL_COLOR}">')
    for k, (x, y) in enumerate(pos):
        attrs = ""
        if style.highlight_doubled and k in graph.degenerate_nails:
            attrs = f' class="degenerate" fill="{DOUBLED_COLOR}"'
            radius = nail_r * 2
        else:
            radius = nail_r
        out.append(f'<circle cx="{_f(x)}" cy="{_f(y)}" r="{_f(radius)}"{attrs}/>')
    out.append("</g>")

    if style.show_labels:
        out.append('<g class="labels" font-family="sans-serif" font-size="10" '
                   'text-anchor="middle" dominant-baseline="middle">')
        label_r = style.radius + style.margin / 2
        cc = style.canvas_size / 2
        for k in range(0, n, style.label_every):
            angle = 2 * math.pi * k / n
            x, y = cc + label_r * math.cos(angle), cc - label_r * math.sin(angle)
            out.append(f'<text x="{_f(x)}" y="{_f(y)}">{k}</text>')
        out.append("</g>")

    out.append("</svg>")
    return "\n".join(out) + "\n"
