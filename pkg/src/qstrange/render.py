"""Deterministic SVG drawings of immersions and their smoothings."""

from __future__ import annotations

import math
from xml.sax.saxutils import escape

from .laurent import half_label

ANNOTATIONS = ("indices", "weights", "alpha", "circles")
CIRCLE_COLORS = ("#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2",
                 "#17becf")
SIZE = 640
MARGIN = 40


def _fmt(v):
    s = f"{v:.2f}"
    return "0.00" if s == "-0.00" else s


class _Frame:
    def __init__(self, xy):
        xs = [p[0] for p in xy]
        ys = [p[1] for p in xy]
        self.x0, self.y1 = min(xs), max(ys)
        span = max(max(xs) - self.x0, self.y1 - min(ys), 1e-12)
        self.k = (SIZE - 2 * MARGIN) / span

    def __call__(self, p):
        return (MARGIN + (p[0] - self.x0) * self.k, MARGIN + (self.y1 - p[1]) * self.k)


def _path(points, frame, closed):
    pts = [frame(p) for p in points]
    body = " L ".join(f"{_fmt(x)} {_fmt(y)}" for x, y in pts)
    return "M " + body + (" Z" if closed else "")


def _text(x, y, s, cls):
    return f'<text x="{_fmt(x)}" y="{_fmt(y)}" class="{cls}">{escape(s)}</text>'


def _arrow(points, frame):
    # arrowhead at the middle of the longest piece of the arc
    best, k = -1.0, 0
    for i in range(len(points) - 1):
        ln = math.dist(points[i], points[i + 1])
        if ln > best:
            best, k = ln, i
    (ax, ay), (bx, by) = frame(points[k]), frame(points[k + 1])
    ln = math.hypot(bx - ax, by - ay) or 1.0
    ux, uy = (bx - ax) / ln, (by - ay) / ln
    mx, my = 0.5 * (ax + bx), 0.5 * (ay + by)
    tip = (mx + 5 * ux, my + 5 * uy)
    left = (mx - 5 * ux - 4 * uy, my - 5 * uy + 4 * ux)
    right = (mx - 5 * ux + 4 * uy, my - 5 * uy - 4 * ux)
    pts = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in (tip, left, right))
    return f'<polygon points="{pts}" class="arrow"/>', (mx, my), (ux, uy)


def render_svg(imm, smoothed=None, annotations=(), weights=None) -> str:
    """SVG text for an immersion.

    ``annotations`` is any subset of :data:`ANNOTATIONS`.  Weight, alpha and
    circle layers need ``smoothed``/``weights``; they are skipped when those
    are missing.
    """
    unknown = set(annotations) - set(ANNOTATIONS)
    if unknown:
        raise ValueError(f"unknown annotations {sorted(unknown)}")
    xy = [(float(x), float(y)) for x, y in imm.curve.xy]
    frame = _Frame(xy)
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" '
           f'viewBox="0 0 {SIZE} {SIZE}">',
           "<style>.curve{fill:none;stroke:#000;stroke-width:1.5}"
           ".arrow{fill:#000}.base{fill:#fff;stroke:#000;stroke-width:1.5}"
           ".dp{fill:#000}.circle{fill:none;stroke-width:1;stroke-dasharray:4 2}"
           "text{font-family:sans-serif;font-size:11px}"
           ".region{fill:#555}.edge{fill:#06c}.dpl{fill:#000}.alpha{font-weight:bold}</style>",
           f'<path d="{_path(xy, frame, True)}" class="curve"/>']

    for arc in imm.arcs:
        poly, (mx, my), (ux, uy) = _arrow(arc.points, frame)
        out.append(poly)
        if "indices" in annotations:
            out.append(_text(mx + 8 * uy, my - 8 * ux, half_label(arc.index2), "edge"))

    if "indices" in annotations:
        for face in imm.faces:
            if face.unbounded:
                continue
            x, y = frame(face.sample)
            out.append(_text(x, y, str(face.index2 // 2), "region"))

    for d in imm.doubles:
        x, y = frame((d.position.x, d.position.y))
        out.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="3" class="dp"/>')
        parts = []
        if "indices" in annotations:
            parts.append(f"[{d.index}]")
        if "weights" in annotations and weights is not None:
            parts.append(f"{weights[d.id]:+d}")
        if parts:
            out.append(_text(x + 6, y - 6, " ".join(parts), "dpl"))

    if smoothed is not None and ("circles" in annotations or "alpha" in annotations):
        for c in smoothed.circles:
            color = CIRCLE_COLORS[c.id % len(CIRCLE_COLORS)]
            if "circles" in annotations:
                out.append(f'<path d="{_path(c.polyline, frame, True)}" class="circle" '
                           f'stroke="{color}"/>')
            if "alpha" in annotations and c.alpha is not None:
                top = max(c.polyline, key=lambda p: (p[1], -p[0]))
                x, y = frame(top)
                out.append(f'<text x="{_fmt(x)}" y="{_fmt(y - 8)}" class="alpha" '
                           f'fill="{color}">{escape(f"α={c.alpha}")}</text>')

    bx, by = frame(xy[imm.curve.base_index])
    out.append(f'<circle cx="{_fmt(bx)}" cy="{_fmt(by)}" r="4" class="base"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
