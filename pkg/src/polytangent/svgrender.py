"""Deterministic SVG rendering of tangent walks.

The scene is drawn in polygon coordinates inside a group with transform
``scale(1,-1)``, which flips the SVG's screen-down y axis so figures read
like the usual math convention (y up).  Output contains no timestamps or
random identifiers: identical input yields identical bytes.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .geom import Point

_POLY_COLORS = ("#1f6fb2", "#c24a30")


def _fmt(v: float) -> str:
    s = f"{v:.3f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


def _extend_to_box(
    a: Point, b: Point, lo_x: float, lo_y: float, hi_x: float, hi_y: float
) -> Optional[tuple[float, float, float, float]]:
    # Clip the infinite line through a and b to the box, slab by slab.
    dx, dy = b.x - a.x, b.y - a.y
    t_lo, t_hi = float("-inf"), float("inf")
    for d, lo, hi, o in ((dx, lo_x, hi_x, a.x), (dy, lo_y, hi_y, a.y)):
        if d == 0:
            if not lo <= o <= hi:
                return None
            continue
        t0, t1 = (lo - o) / d, (hi - o) / d
        if t0 > t1:
            t0, t1 = t1, t0
        t_lo, t_hi = max(t_lo, t0), min(t_hi, t1)
    if t_lo > t_hi:
        return None
    return (a.x + t_lo * dx, a.y + t_lo * dy, a.x + t_hi * dx, a.y + t_hi * dy)


def render_scene(
    polygons: Sequence[tuple[str, Sequence[Point]]],
    dashed_lines: Sequence[tuple[Point, Point]],
    solid_line: Optional[tuple[Point, Point]],
    note: Optional[str] = None,
) -> str:
    """Compose the SVG document for two polygons and a family of lines.

    Dashed lines are the temporary candidate lines of a walk in order,
    the solid line is the final tangent (absent when there is none).
    """
    xs = [p.x for _, pts in polygons for p in pts]
    ys = [p.y for _, pts in polygons for p in pts]
    lo_x, hi_x, lo_y, hi_y = min(xs), max(xs), min(ys), max(ys)
    pad = max(hi_x - lo_x, hi_y - lo_y, 10) * 0.08
    lo_x, hi_x = lo_x - pad, hi_x + pad
    lo_y, hi_y = lo_y - pad, hi_y + pad
    width, height = hi_x - lo_x, hi_y - lo_y
    stroke = max(width, height) / 300.0

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{_fmt(lo_x)} {_fmt(-hi_y)} {_fmt(width)} {_fmt(height)}">',
        '<g transform="scale(1,-1)">',
    ]
    for k, (name, pts) in enumerate(polygons):
        d = "M " + " L ".join(f"{_fmt(p.x)} {_fmt(p.y)}" for p in pts) + " Z"
        color = _POLY_COLORS[k % len(_POLY_COLORS)]
        parts.append(
            f'<path d="{d}" fill="{color}" fill-opacity="0.15" '
            f'stroke="{color}" stroke-width="{_fmt(stroke)}"/>'
        )
    for a, b in dashed_lines:
        seg = _extend_to_box(a, b, lo_x, lo_y, hi_x, hi_y)
        if seg is None:
            continue
        x1, y1, x2, y2 = seg
        parts.append(
            f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
            f'stroke="#888888" stroke-width="{_fmt(stroke * 0.6)}" '
            f'stroke-dasharray="{_fmt(stroke * 3)} {_fmt(stroke * 3)}"/>'
        )
    if solid_line is not None:
        a, b = solid_line
        seg = _extend_to_box(a, b, lo_x, lo_y, hi_x, hi_y)
        if seg is not None:
            x1, y1, x2, y2 = seg
            parts.append(
                f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
                f'stroke="#1a9641" stroke-width="{_fmt(stroke * 1.4)}"/>'
            )
        for p in (a, b):
            parts.append(
                f'<circle cx="{_fmt(p.x)}" cy="{_fmt(p.y)}" r="{_fmt(stroke * 2.2)}" '
                f'fill="#1a9641"/>'
            )
    parts.append("</g>")
    if note:
        parts.append(
            f'<text x="{_fmt(lo_x + stroke * 3)}" y="{_fmt(-hi_y + stroke * 8)}" '
            f'font-family="monospace" font-size="{_fmt(stroke * 7)}" '
            f'fill="#333333">{_escape(note)}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _escape(text: str) -> str:
    return (
        text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
    )
