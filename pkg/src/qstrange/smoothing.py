"""Weights, orientation-preserving smoothing, and the region forest.

Smoothing reconnects the incoming strand of each double point's first visit
to the outgoing strand of its second visit (and vice versa).  The two
corners created at a double point ``d`` are tagged ``+1`` (the corner that
turns left, on the edge of index ``ind(d) + 1/2``) and ``-1`` (turning right,
index ``ind(d) - 1/2``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from . import kernels
from .errors import BaseNotExterior, ContainmentAmbiguous, PointTooClose, ProbeInconsistent, UnknownPoint
from .geometry import signed_area, winding_number
from .immersion import GenericImmersion

# w(d) = WEIGHT_SIGN * sign(det(v1, v2)), v1/v2 the directions of the first
# and second visit.  -1 makes the first passage the under-strand of a
# right-handed crossing count +1; pinned by the weak triple-point fixtures.
WEIGHT_SIGN = -1


def _det(u, v):
    return u[0] * v[1] - u[1] * v[0]


def compute_weights(imm: GenericImmersion) -> dict:
    """Local writhe of every crossing in the ascending diagram from the base point."""
    if not imm.base_on_exterior:
        raise BaseNotExterior("base point is not on an exterior edge")
    return _weights(imm)


def _weights(imm):
    out = {}
    for d in imm.doubles:
        det = _det(d.v1, d.v2)
        out[d.id] = WEIGHT_SIGN * (1 if det > 0 else -1)
    return out


@dataclass(frozen=True)
class SmoothedVertex:
    double: int
    sign: int
    weight: Optional[int]


@dataclass(frozen=True)
class SmoothedCircle:
    id: int
    arcs: tuple
    vertices: tuple
    rot: int
    index2: int
    alpha: Optional[int]
    polyline: tuple


@dataclass(frozen=True)
class SmoothedCurve:
    circles: tuple
    circle_of_vertex: dict
    doubles: tuple

    def g(self, double: int, sign: int):
        """The double point a smoothed vertex came from."""
        if (double, sign) not in self.circle_of_vertex:
            raise KeyError((double, sign))
        return self.doubles[double]

    def circle_of_arc(self, arc: int) -> SmoothedCircle:
        for c in self.circles:
            if arc in c.arcs:
                return c
        raise KeyError(arc)


def _corner_sign(d, visit):
    det = _det(d.v1, d.v2)
    return (1 if det > 0 else -1) * (1 if visit == 1 else -1)


def smooth(imm: GenericImmersion, weights: Optional[dict] = None) -> SmoothedCurve:
    """Split the immersion into disjoint oriented circles.

    Weights default to :func:`compute_weights` when the base point is
    exterior; otherwise vertex weights and circle ``alpha`` are ``None``.
    """
    if weights is None and imm.base_on_exterior:
        weights = compute_weights(imm)
    arcs, doubles = imm.arcs, imm.doubles
    if not doubles:
        a = arcs[0]
        poly = a.points[:-1]
        rot = 1 if signed_area(poly) > 0 else -1
        alpha = 0 if weights is not None else None
        circle = SmoothedCircle(0, (0,), (), rot, a.index2, alpha, tuple(poly))
        return SmoothedCurve((circle,), {}, ())

    shortcut = {d.id: _corner_gap(imm, d) for d in doubles}

    def follow(a):
        d = doubles[arcs[a].end]
        visit = 1 if d.in1 == a else 2
        return d, visit, (d.out2 if visit == 1 else d.out1)

    circles = []
    owner = {}
    seen = set()
    for a0 in range(len(arcs)):
        if a0 in seen:
            continue
        cycle, verts, poly = [], [], []
        a = a0
        while a not in seen:
            seen.add(a)
            cycle.append(a)
            d, visit, nxt = follow(a)
            sign = _corner_sign(d, visit)
            w = None if weights is None else weights[d.id]
            verts.append(SmoothedVertex(d.id, sign, w))
            poly.extend(_cut_corners(arcs[a], shortcut))
            a = nxt
        idx = {arcs[c].index2 for c in cycle}
        if len(idx) != 1:
            raise ProbeInconsistent(f"arcs {cycle} of one smoothed circle carry indices {sorted(idx)}")
        n = len(circles)
        rot = 1 if signed_area(poly) > 0 else -1
        alpha = None if weights is None else rot * sum(v.weight for v in verts)
        for v in verts:
            owner[(v.double, v.sign)] = n
        circles.append(SmoothedCircle(n, tuple(cycle), tuple(verts), rot, idx.pop(),
                                      alpha, tuple(poly)))
    return SmoothedCurve(tuple(circles), owner, doubles)


def _corner_gap(imm, d):
    """Length of the chord cut off at each smoothed corner of ``d``."""
    xy = imm.curve.xy
    px, py = d.position.x, d.position.y
    reach = kernels.min_distance(xy[:, 0], xy[:, 1], px, py, d.seg1, d.seg2)
    for a in (d.in1, d.in2):
        pts = imm.arcs[a].points
        reach = min(reach, math.dist(pts[-1], pts[-2]))
    for a in (d.out1, d.out2):
        pts = imm.arcs[a].points
        reach = min(reach, math.dist(pts[0], pts[1]))
    return 0.25 * reach


def _cut_corners(arc, shortcut):
    pts = arc.points
    (x0, y0), (x1, y1) = pts[0], pts[1]
    h = 0.5 * shortcut[arc.start]
    ln = math.hypot(x1 - x0, y1 - y0)
    head = (x0 + h * (x1 - x0) / ln, y0 + h * (y1 - y0) / ln)
    (xa, ya), (xb, yb) = pts[-2], pts[-1]
    h = 0.5 * shortcut[arc.end]
    ln = math.hypot(xb - xa, yb - ya)
    tail = (xb - h * (xb - xa) / ln, yb - h * (yb - ya) / ln)
    return [head, *pts[1:-1], tail]


def alpha_at(imm: GenericImmersion, smoothed: SmoothedCurve, p):
    """Alpha at a regular curve point, or ``(alpha+, alpha-, 2*alpha(d))`` at a double.

    ``p`` is a double-point id (``int``) or a point on the curve.
    """
    if smoothed.circles and smoothed.circles[0].alpha is None:
        raise BaseNotExterior("alpha needs weights, which need an exterior base point")
    if isinstance(p, int) and not isinstance(p, bool):
        if not 0 <= p < len(imm.doubles):
            raise UnknownPoint(f"no double point {p}")
        return _alpha_double(smoothed, p)
    x, y = float(p[0]), float(p[1])
    scale = 1.0 + float(abs(imm.curve.xy).max())
    snap = 1e-9 * scale
    for d in imm.doubles:
        if math.hypot(d.position.x - x, d.position.y - y) <= snap:
            return _alpha_double(smoothed, d.id)
    for arc in imm.arcs:
        if _polyline_distance(arc.points, x, y) <= snap:
            return smoothed.circle_of_arc(arc.id).alpha
    raise UnknownPoint(f"({x}, {y}) is not on the curve")


def _alpha_double(smoothed, d):
    ap = smoothed.circles[smoothed.circle_of_vertex[(d, 1)]].alpha
    am = smoothed.circles[smoothed.circle_of_vertex[(d, -1)]].alpha
    return ap, am, ap + am


def _polyline_distance(pts, x, y):
    best = math.inf
    for (ax, ay), (bx, by) in zip(pts, pts[1:]):
        dx, dy = bx - ax, by - ay
        ll = dx * dx + dy * dy
        t = min(1.0, max(0.0, ((x - ax) * dx + (y - ay) * dy) / ll))
        best = min(best, math.hypot(ax + t * dx - x, ay + t * dy - y))
    return best


@dataclass(frozen=True)
class Region:
    id: int
    index2: int
    chi: int
    children: tuple
    boundary: Optional[int]

    @property
    def index(self) -> int:
        return self.index2 // 2


@dataclass(frozen=True)
class RegionForest:
    regions: tuple
    parent: dict

    @property
    def root(self) -> Region:
        return self.regions[0]


def build_region_forest(smoothed: SmoothedCurve) -> RegionForest:
    circles = smoothed.circles
    samples = [_sample(c.polyline) for c in circles]
    inside = {c.id: [] for c in circles}
    for c in circles:
        sx, sy = samples[c.id]
        for other in circles:
            if other.id == c.id:
                continue
            pts = other.polyline
            gap = kernels.min_distance([p[0] for p in pts], [p[1] for p in pts], sx, sy)
            if gap <= 1e-12 * (1.0 + abs(sx) + abs(sy)):
                raise ContainmentAmbiguous(f"circle {c.id} touches circle {other.id}")
            try:
                w = winding_number(pts, (sx, sy))
            except PointTooClose as exc:
                raise ContainmentAmbiguous(str(exc)) from None
            if w:
                inside[c.id].append(other.id)
    depth = {k: len(v) for k, v in inside.items()}
    parent = {k: (max(v, key=depth.__getitem__) if v else None) for k, v in inside.items()}

    kids = {None: []}
    for c in circles:
        kids[c.id] = []
    for c in circles:
        kids[parent[c.id]].append(c.id)

    regions = [Region(0, 0, 1 - len(kids[None]), tuple(kids[None]), None)]
    region_of = {None: 0}
    for c in sorted(circles, key=lambda c: depth[c.id]):
        region_of[c.id] = len(regions)
        regions.append(Region(len(regions), c.index2 + c.rot, 1 - len(kids[c.id]),
                              tuple(kids[c.id]), c.id))
    for c in circles:
        outer = regions[region_of[parent[c.id]]]
        if outer.index2 != c.index2 - c.rot:
            raise ContainmentAmbiguous(
                f"circle {c.id} (index2 {c.index2}, rot {c.rot}) sits in a region of index2 {outer.index2}")
    return RegionForest(tuple(regions), {c.id: region_of[parent[c.id]] for c in circles})


def _sample(poly):
    best, k = -1.0, 0
    for i in range(len(poly)):
        ln = math.dist(poly[i], poly[(i + 1) % len(poly)])
        if ln > best:
            best, k = ln, i
    (ax, ay), (bx, by) = poly[k], poly[(k + 1) % len(poly)]
    return 0.5 * (ax + bx), 0.5 * (ay + by)
