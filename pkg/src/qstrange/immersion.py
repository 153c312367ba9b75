"""Combinatorial diagram of a generic polygonal immersion.

A :class:`PolygonalCurve` is cut at its self-crossings into arcs.  Every
index is stored doubled (``index2``) so that half-integer edge indices stay
exact: arcs carry odd ``index2``, double points and regions even ones.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Optional

import numpy as np

from . import kernels
from .errors import (DegenerateIntersection, NoExteriorVertex, ProbeInconsistent,
                     TangentialPair, TripleCoincidence)
from .geometry import (DEFAULT_TOLERANCES, TAU, Point2, Tolerances, signed_area,
                       transversal_angle, turning_angles, winding_number)


@dataclass(frozen=True)
class PolygonalCurve:
    vertices: tuple
    base_index: int = 0

    def __post_init__(self):
        pts = tuple(p if isinstance(p, Point2) else Point2(float(p[0]), float(p[1]))
                    for p in self.vertices)
        object.__setattr__(self, "vertices", pts)
        n = len(pts)
        if n < 3:
            raise ValueError("a closed curve needs at least three vertices")
        for k in range(n):
            if pts[k] == pts[(k + 1) % n]:
                raise ValueError(f"vertices {k} and {(k + 1) % n} coincide")
        if not 0 <= self.base_index < n:
            raise ValueError(f"base_index {self.base_index} out of range")

    def __len__(self):
        return len(self.vertices)

    @cached_property
    def xy(self) -> np.ndarray:
        arr = np.array([(p.x, p.y) for p in self.vertices], dtype=np.float64)
        arr.setflags(write=False)
        return arr

    def with_base(self, base_index: int) -> "PolygonalCurve":
        return PolygonalCurve(self.vertices, base_index % len(self.vertices))

    def rotated(self, shift: int) -> "PolygonalCurve":
        """Same curve with vertex labels shifted cyclically; the base vertex is kept."""
        n = len(self.vertices)
        shift %= n
        verts = self.vertices[shift:] + self.vertices[:shift]
        return PolygonalCurve(verts, (self.base_index - shift) % n)


@dataclass(frozen=True)
class DoublePoint:
    id: int
    position: Point2
    t1: float
    t2: float
    seg1: int
    seg2: int
    in1: int
    out1: int
    in2: int
    out2: int
    v1: tuple
    v2: tuple
    theta: float
    index2: int

    @property
    def index(self) -> int:
        return self.index2 // 2


@dataclass(frozen=True)
class Arc:
    """Piece of the curve between consecutive double-point passages.

    ``start``/``end`` are double-point ids (``None`` for a curve without
    crossings).  ``vertex_ids`` are the polygon vertices strictly inside the
    arc, in traversal order; ``turning`` is the sum of the turning angles at
    exactly those vertices.
    """

    id: int
    points: tuple
    vertex_ids: tuple
    index2: int
    turning: float
    start: Optional[int]
    end: Optional[int]
    probe_left: tuple
    probe_right: tuple


@dataclass(frozen=True)
class Face:
    """A region of the complement of the curve, found by a half-edge walk."""

    halfedges: tuple
    area: float
    index2: int
    sample: tuple
    unbounded: bool


@dataclass(frozen=True)
class GenericImmersion:
    curve: PolygonalCurve
    arcs: tuple
    doubles: tuple
    base_on_exterior: bool
    faces: tuple = field(repr=False)
    tol: Tolerances = field(default=DEFAULT_TOLERANCES, repr=False)

    @property
    def n_doubles(self) -> int:
        return len(self.doubles)

    @cached_property
    def exterior_arcs(self) -> frozenset:
        outer = next(f for f in self.faces if f.unbounded)
        return frozenset(a for a, _ in outer.halfedges)

    @property
    def base_arc(self) -> Arc:
        return self.arcs[0]


@dataclass(frozen=True)
class _Passage:
    double: int
    seg: int
    t: float
    key: float
    point: tuple


def build_immersion(curve: PolygonalCurve,
                    tol: Tolerances = DEFAULT_TOLERANCES) -> GenericImmersion:
    xy = curve.xy
    n = len(xy)
    xs, ys = xy[:, 0], xy[:, 1]
    turn = turning_angles(xy, tol)
    hits, bad = kernels.find_crossings(xs, ys, tol.eps_intersect)
    if bad:
        i, j, code = bad[0]
        what = "overlap collinearly" if code == kernels.OVERLAP else "touch at or near an endpoint"
        raise DegenerateIntersection(f"segments {i} and {j} {what}", (i, j))

    base = curve.base_index
    seg_dir = np.roll(xy, -1, axis=0) - xy
    passages = []
    raw = []
    for c, (i, j, ta, tb) in enumerate(sorted(hits)):
        try:
            theta = transversal_angle(seg_dir[i], seg_dir[j], tol)
        except TangentialPair as exc:
            raise TangentialPair(f"segments {i} and {j}: {exc}", (i, j)) from None
        x = xs[i] + ta * seg_dir[i, 0]
        y = ys[i] + ta * seg_dir[i, 1]
        raw.append(((x, y), theta))
        for seg, t in ((i, ta), (j, tb)):
            passages.append(_Passage(c, seg, t, ((seg - base) % n) + t, (x, y)))
    _check_triple(passages, tol)

    passages.sort(key=lambda p: p.key)
    m = len(passages)
    visits = {}
    for k, p in enumerate(passages):
        visits.setdefault(p.double, []).append(k)

    arcs = _cut_arcs(curve, passages, turn, tol)

    # relabel doubles by the traversal position of their first visit
    order = sorted(visits, key=lambda c: visits[c][0])
    relabel = {c: d for d, c in enumerate(order)}
    if m:
        arcs = [replace(a, start=relabel[a.start], end=relabel[a.end]) for a in arcs]
    doubles = []
    for c in order:
        k1, k2 = visits[c]
        p1, p2 = passages[k1], passages[k2]
        in1, out1 = k1, (k1 + 1) % m
        in2, out2 = k2, (k2 + 1) % m
        sum1 = arcs[in1].index2 + arcs[out1].index2
        sum2 = arcs[in2].index2 + arcs[out2].index2
        if sum1 != sum2 or sum1 % 4:
            raise ProbeInconsistent(
                f"edge indices around crossing of segments {p1.seg} and {p2.seg} disagree",
                (p1.seg, p2.seg))
        (x, y), theta = raw[c]
        doubles.append(DoublePoint(
            id=relabel[c], position=Point2(x, y), t1=p1.key, t2=p2.key,
            seg1=p1.seg, seg2=p2.seg, in1=in1, out1=out1, in2=in2, out2=out2,
            v1=tuple(map(float, seg_dir[p1.seg])), v2=tuple(map(float, seg_dir[p2.seg])),
            theta=theta, index2=sum1 // 2))

    faces = _faces(arcs, doubles)
    outer = next(f for f in faces if f.unbounded)
    base_ext = any(a == 0 for a, _ in outer.halfedges) and abs(arcs[0].index2) == 1
    return GenericImmersion(curve, tuple(arcs), tuple(doubles), base_ext, tuple(faces), tol)


def _check_triple(passages, tol):
    by_seg = {}
    for p in passages:
        by_seg.setdefault(p.seg, []).append(p)
    for seg, group in by_seg.items():
        group.sort(key=lambda p: p.t)
        for a, b in zip(group, group[1:]):
            if b.t - a.t < tol.eps_intersect:
                raise TripleCoincidence(
                    f"two crossings coincide on segment {seg} at parameter {a.t:.12g}",
                    (seg,))


def _cut_arcs(curve, passages, turn, tol):
    xy = curve.xy
    n = len(xy)
    m = len(passages)
    if m == 0:
        b = curve.base_index
        ids = tuple((b + k) % n for k in range(n))
        pts = tuple(tuple(map(float, xy[v])) for v in ids) + (tuple(map(float, xy[b])),)
        left, right, index2 = _probe(xy, pts, [(b + k) % n for k in range(n)], tol)
        return [Arc(0, pts, ids, index2, float(math.fsum(turn)), None, None, left, right)]

    arcs = []
    for j in range(m):
        p, q = passages[j - 1], passages[j]
        # vertices sit at integer keys; arc 0 wraps through the base vertex
        hi = math.floor(q.key) + (n if j == 0 else 0)
        steps = hi - math.floor(p.key)
        ids = tuple((p.seg + k) % n for k in range(1, steps + 1))
        pts = (p.point,) + tuple(tuple(map(float, xy[v])) for v in ids) + (q.point,)
        segs = [(p.seg + k) % n for k in range(steps + 1)]
        left, right, index2 = _probe(xy, pts, segs, tol)
        turning = float(math.fsum(turn[v] for v in ids))
        arcs.append(Arc(j, pts, ids, index2, turning, p.double, q.double, left, right))
    return arcs


def _probe(xy, pts, segs, tol):
    """Winding numbers just left and right of the arc's longest piece."""
    best, k = -1.0, 0
    for i in range(len(pts) - 1):
        ln = math.dist(pts[i], pts[i + 1])
        if ln > best:
            best, k = ln, i
    (ax, ay), (bx, by) = pts[k], pts[k + 1]
    mx, my = 0.5 * (ax + bx), 0.5 * (ay + by)
    ux, uy = (bx - ax) / best, (by - ay) / best
    dist = kernels.min_distance(xy[:, 0], xy[:, 1], mx, my, segs[k], -1)
    delta = 0.25 * dist
    left = (mx - delta * uy, my + delta * ux)
    right = (mx + delta * uy, my - delta * ux)
    wl = winding_number(xy, left, tol)
    wr = winding_number(xy, right, tol)
    if wl - wr != 1:
        raise ProbeInconsistent(
            f"probes beside segment {segs[k]} have windings {wl} and {wr}", (segs[k],))
    return left, right, wl + wr


def _faces(arcs, doubles):
    """Walk the faces of the planar graph formed by the curve.

    Half-edge ``(a, +1)`` runs along arc ``a``, ``(a, -1)`` against it; each
    face lies to the left of its half-edges, so exactly one walk (the
    unbounded face) has negative signed area.
    """
    if not doubles:
        a = arcs[0]
        pts = a.points[:-1]
        area = signed_area(pts)
        inner = (a.index2 + 1) // 2 if area > 0 else (a.index2 - 1) // 2
        # a simple loop bounds one face on each side
        if area > 0:
            return [Face(((0, 1),), area, 2 * inner, a.probe_left, False),
                    Face(((0, -1),), -area, 0, a.probe_right, True)]
        return [Face(((0, 1),), area, 0, a.probe_left, True),
                Face(((0, -1),), -area, 2 * inner, a.probe_right, False)]

    def origin(h):
        a, s = h
        return arcs[a].start if s > 0 else arcs[a].end

    def out_dir(h):
        a, s = h
        pts = arcs[a].points
        (x0, y0), (x1, y1) = (pts[0], pts[1]) if s > 0 else (pts[-1], pts[-2])
        return math.atan2(y1 - y0, x1 - x0)

    around = {}
    for a in range(len(arcs)):
        for s in (1, -1):
            around.setdefault(origin((a, s)), []).append((a, s))
    for d in around:
        around[d].sort(key=out_dir)

    def nxt(h):
        a, s = h
        twin = (a, -s)
        ring = around[origin(twin)]
        return ring[ring.index(twin) - 1]

    seen = set()
    faces = []
    for a in range(len(arcs)):
        for s in (1, -1):
            h0 = (a, s)
            if h0 in seen:
                continue
            walk, pts = [], []
            h = h0
            while h not in seen:
                seen.add(h)
                walk.append(h)
                p = arcs[h[0]].points
                pts.extend(p if h[1] > 0 else p[::-1])
                h = nxt(h)
            area = signed_area(pts)
            a0, s0 = walk[0]
            arc = arcs[a0]
            if s0 > 0:
                index2, sample = arc.index2 + 1, arc.probe_left
            else:
                index2, sample = arc.index2 - 1, arc.probe_right
            faces.append(Face(tuple(walk), area, index2, sample, False))
    k = min(range(len(faces)), key=lambda i: faces[i].area)
    faces[k] = replace(faces[k], unbounded=True)
    return faces


def rotation_number(imm: GenericImmersion) -> int:
    total = float(math.fsum(turning_angles(imm.curve.xy, imm.tol)))
    turns = total / TAU
    k = round(turns)
    if abs(turns - k) >= 0.25:
        raise ValueError(f"total turning {total} is not a multiple of 2pi")
    return int(k)


def rebase_to_exterior(imm: GenericImmersion) -> GenericImmersion:
    """Move the base vertex onto the first exterior arc (in traversal order)."""
    if imm.base_on_exterior:
        return imm
    ext = imm.exterior_arcs
    for arc in imm.arcs:
        if arc.id in ext and abs(arc.index2) == 1 and arc.vertex_ids:
            return build_immersion(imm.curve.with_base(arc.vertex_ids[0]), imm.tol)
    raise NoExteriorVertex("no polygon vertex lies inside an exterior arc; refine the curve")
