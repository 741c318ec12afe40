"""Byte-stable SVG 1.1 emission for scenes and scan plots.

SVG coordinates are the only place rationals get rounded: fixed 1e-9
precision with round-half-even, purely presentational.
"""

from __future__ import annotations

from decimal import ROUND_HALF_EVEN, Decimal
from typing import Optional, Sequence

from ._scalar import Rat, as_fraction
from .geometry import ConvexPolygon
from .norms import PolyhedralNorm
from .convex_ops import neighborhood

_QUANTUM = Decimal("0.000000001")


def _decimal_str(d: Decimal) -> str:
    s = format(d.quantize(_QUANTUM, rounding=ROUND_HALF_EVEN), "f")
    if "." in s:
        s = s.rstrip("0").rstrip(".")
    return "0" if s in ("", "-0") else s


def fmt(q: Rat) -> str:
    f = as_fraction(q)
    return _decimal_str(Decimal(f.numerator) / Decimal(f.denominator))


def _points_attr(P: ConvexPolygon, flip_y: Rat) -> str:
    return " ".join(f"{fmt(v.x)},{fmt(flip_y - v.y)}" for v in P.vertices)


def _polygon_tag(P: ConvexPolygon, style: str, flip_y) -> str:
    if P.n == 1:
        v = P.vertices[0]
        return (f'<circle cx="{fmt(v.x)}" cy="{fmt(flip_y - v.y)}" r="0.06" '
                f'style="{style}" />')
    tag = "polygon" if P.n >= 3 else "polyline"
    return f'<{tag} points="{_points_attr(P, flip_y)}" style="{style}" />'


def render_scene_svg(A: ConvexPolygon, b_parts: Sequence[ConvexPolygon],
                     n: PolyhedralNorm, r: Optional[Rat],
                     f_parts: Sequence[ConvexPolygon] = ()) -> str:
    """Draw A, the parts of B, the boundary of B_r(A), and f(r) shaded."""
    shapes = [A, *b_parts, *f_parts]
    shell = None
    if r is not None:
        shell = neighborhood(A, r, n)
        shapes.append(shell)
    xs = [v.x for P in shapes for v in P.vertices]
    ys = [v.y for P in shapes for v in P.vertices]
    pad = 1
    xmin, xmax = min(xs) - pad, max(xs) + pad
    ymin, ymax = min(ys) - pad, max(ys) + pad
    flip = ymin + ymax  # y -> flip - y maps the box onto itself, y-up
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{fmt(xmin)} {fmt(ymin)} {fmt(xmax - xmin)} {fmt(ymax - ymin)}" '
        f'width="640" height="480">',
        _polygon_tag(A, "fill:#9ecae1;stroke:#3182bd;stroke-width:0.03", flip),
    ]
    for part in b_parts:
        parts.append(_polygon_tag(
            part, "fill:#fdd0a2;stroke:#e6550d;stroke-width:0.03", flip))
    if shell is not None:
        parts.append(_polygon_tag(
            shell,
            "fill:none;stroke:#636363;stroke-width:0.02;stroke-dasharray:0.1,0.06",
            flip))
    for piece in f_parts:
        parts.append(_polygon_tag(
            piece, "fill:#a1d99b;fill-opacity:0.8;stroke:#31a354;stroke-width:0.03",
            flip))
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def render_scan_svg(rows) -> str:
    """Polyline plot of gap ratio d_H/h versus r."""
    if not rows:
        raise ValueError("empty scan table")
    rs = [row.r for row in rows]
    ratios = [row.ratio for row in rows]
    xmin, xmax = min(rs), max(rs)
    ymax = max(max(ratios), 1)
    width, height = 640, 480
    margin = 40

    def sx(r):
        if xmax == xmin:
            return Decimal(width) / 2
        f = as_fraction((r - xmin) / (xmax - xmin))
        return Decimal(margin) + Decimal(f.numerator) / Decimal(f.denominator) * (width - 2 * margin)

    def sy(v):
        f = as_fraction(v / ymax)
        return Decimal(height - margin) - Decimal(f.numerator) / Decimal(f.denominator) * (height - 2 * margin)

    def q(d: Decimal) -> str:
        return _decimal_str(d)

    pts = " ".join(f"{q(sx(r))},{q(sy(v))}" for r, v in zip(rs, ratios))
    return "\n".join([
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}">',
        f'<line x1="{margin}" y1="{height - margin}" x2="{width - margin}" '
        f'y2="{height - margin}" stroke="#000" stroke-width="1" />',
        f'<line x1="{margin}" y1="{margin}" x2="{margin}" '
        f'y2="{height - margin}" stroke="#000" stroke-width="1" />',
        f'<polyline points="{pts}" fill="none" stroke="#d62728" stroke-width="2" />',
        f'<text x="{width // 2}" y="{height - 10}" font-size="14" '
        f'text-anchor="middle">r</text>',
        f'<text x="12" y="{height // 2}" font-size="14" '
        f'text-anchor="middle" transform="rotate(-90 12 {height // 2})">d_H / h</text>',
        "</svg>",
    ]) + "\n"
