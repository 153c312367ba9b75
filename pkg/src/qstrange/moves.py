"""Local modifications: hand-built fixture pairs and their verification.

A fixture consists of straight-ish strands inside the unit disk joined by
connectors that leave the disk radially, run along an arc (or a spiral that
winds around the disk, which shifts the local index), and come back in.
Only the strands change between ``before`` and ``after``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .curveio import MOVE_KINDS, CurveFile, ModificationPair
from .errors import ExpectationMismatch, ParseError
from .immersion import build_immersion
from .invariants import compute_report
from .laurent import REAL, HalfLaurent

TANGENCY = ("direct-tangency", "opposite-tangency")
TRIPLE = ("weak-triple", "strong-triple")
REAL_TOL = 1e-6


def expected_differences(kind: str, i: int) -> dict:
    """Table values for a positive modification at local index ``i``."""
    qi = HalfLaurent.monomial(2 * i)
    q_minus_1 = HalfLaurent({2: 1, 0: -1})
    root_diff = HalfLaurent({1: 1, -1: -1})
    zero = HalfLaurent.zero()
    half_sq = (HalfLaurent.monomial(2 * i + 1, 0.5, REAL) * root_diff ** 2)
    if kind == "direct-tangency":
        return {"p": zero, "i": -(qi * root_diff).as_real(), "st_q": zero}
    if kind == "opposite-tangency":
        return {"p": HalfLaurent.monomial(2 * i - 2) * q_minus_1 ** 2, "i": zero.as_real(), "st_q": zero}
    if kind == "weak-triple":
        return {"p": zero, "i": half_sq, "st_q": qi * q_minus_1}
    if kind == "strong-triple":
        return {"p": -(HalfLaurent.monomial(2 * i - 2) * q_minus_1 ** 3), "i": half_sq,
                "st_q": qi * q_minus_1}
    raise ParseError(f"unknown modification kind {kind!r}")


@dataclass
class MoveDiff:
    kind: str
    ind_param: int
    delta: dict
    expected: dict
    mismatches: list

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def to_json(self) -> dict:
        return {"kind": self.kind, "ind_param": self.ind_param,
                "delta": {k: v.to_json() for k, v in self.delta.items()},
                "expected": {k: v.to_json() for k, v in self.expected.items()},
                "mismatches": list(self.mismatches), "pass": self.passed}


def verify_modification(pair: ModificationPair, tol=None) -> MoveDiff:
    """Compare invariant jumps across a modification with the table values."""
    _check_disk(pair)
    before = _analyze(pair.before, tol)
    after = _analyze(pair.after, tol)
    want = {"tangency": 2, "triple": 0}["tangency" if pair.kind in TANGENCY else "triple"]
    if after.n_doubles - before.n_doubles != want:
        raise ExpectationMismatch(
            f"{pair.kind}: double count {before.n_doubles} -> {after.n_doubles}")
    delta = {"p": after.p_q - before.p_q, "i": after.i_q - before.i_q,
             "st_q": after.st_q - before.st_q}
    expected = expected_differences(pair.kind, pair.ind_param)
    if pair.orientation == "reversed":
        # the table only covers the drawn orientation; St_q's row holds in
        # every case, so that is all that is checked here
        expected = {"st_q": expected["st_q"]}
    bad = []
    for key in ("p", "st_q"):
        if key in expected and delta[key] != expected[key]:
            bad.append(key)
    if "i" in expected and not delta["i"].close_to(expected["i"], REAL_TOL):
        bad.append("i")
    return MoveDiff(pair.kind, pair.ind_param, delta, expected, bad)


def _analyze(cf, tol):
    imm = build_immersion(cf.to_curve(), **({"tol": tol} if tol else {}))
    return compute_report(imm)


def _check_disk(pair):
    cx, cy, r = pair.disk
    outside = []
    for cf in (pair.before, pair.after):
        n = len(cf.vertices)
        pts = [cf.vertices[(cf.base_index + k) % n] for k in range(n)]
        outside.append([p for p in pts if math.hypot(p[0] - cx, p[1] - cy) > r + 1e-9])
    a, b = outside
    if len(a) != len(b) or any(math.dist(p, q) > 1e-12 for p, q in zip(a, b)):
        raise ExpectationMismatch("before and after differ outside the declared disk")


# -- fixture construction ----------------------------------------------------

def _unit(deg):
    t = math.radians(deg)
    return (math.cos(t), math.sin(t))


def _line_through_origin(deg):
    return [_unit(deg + 180.0), _unit(deg)]


def triple_strands(c):
    """Three strands whose pairwise crossings bound a small triangle.

    Moving ``c`` through 0 drags the first strand across the crossing of the
    other two.
    """
    l1 = [(-1.0, 0.0), (-0.5, c), (0.5, c), (1.0, 0.0)]
    return [l1, _line_through_origin(60.0), _line_through_origin(120.0)]


def tangency_strands(b):
    """A bump strand under a flat strand; ``b`` is the height of the bump tip."""
    a = [_unit(200.0), (-0.5, -0.3), (0.0, b), (0.5, -0.3), _unit(-20.0)]
    flat = [_unit(160.0), (-0.5, 0.3), (0.5, 0.3), _unit(20.0)]
    return [a, flat]


def _connector(p, q, radius, sweep, spread, avoid=()):
    """Polyline from boundary point ``p`` out, around by ``sweep`` radians, in to ``q``.

    Interior vertices keep clear of the angles in ``avoid``, where radial
    pieces of other connectors live.
    """
    a = math.atan2(p[1], p[0])
    steps = max(6, int(abs(sweep) / 0.09)) | 1
    while any(_angle_gap(a + sweep * k / steps, t) < 1e-3
              for k in range(1, steps) for t in avoid):
        steps += 2
    pts = []
    for k in range(steps + 1):
        s = k / steps
        rr = radius + spread * abs(sweep) * s / (2 * math.pi)
        t = a + sweep * s
        pts.append((rr * math.cos(t), rr * math.sin(t)))
    return pts


def _angle_gap(s, t):
    d = (s - t) % (2 * math.pi)
    return min(d, 2 * math.pi - d)


def _sweep(p, q, ccw, turns):
    a = math.atan2(p[1], p[0])
    b = math.atan2(q[1], q[0])
    d = (b - a) % (2 * math.pi)
    if not ccw:
        d -= 2 * math.pi
    return d + (2 * math.pi * turns if ccw else -2 * math.pi * turns)


def assemble(strands, order, flips, radii, ccw, turns, outer):
    """Join oriented strands into a closed curve.

    ``order`` is the traversal order, ``flips[k]`` reverses strand ``k``, the
    connector leaving strand ``order[j]`` uses ``radii[j]`` and direction
    ``ccw[j]``.  Connector ``outer`` may wind ``turns`` extra times; the base
    vertex sits on its outermost stretch.
    """
    pieces = [list(reversed(s)) if f else list(s) for s, f in zip(strands, flips)]
    verts = []
    base = None
    ends = [math.atan2(pt[1], pt[0]) for pc in pieces for pt in (pc[0], pc[-1])]
    for j, k in enumerate(order):
        nxt = pieces[order[(j + 1) % len(order)]]
        verts.extend(pieces[k])
        extra = turns if j == outer else 0
        sw = _sweep(pieces[k][-1], nxt[0], ccw[j], extra)
        conn = _connector(pieces[k][-1], nxt[0], radii[j], sw, 0.25 if extra else 0.0, ends)
        if j == outer:
            frac = 1.0 - min(0.5, math.pi / abs(sw))
            base = len(verts) + int(round(frac * (len(conn) - 1)))
        verts.extend(conn)
    return CurveFile(tuple(verts), base)


@dataclass(frozen=True)
class Layout:
    order: tuple
    flips: tuple
    radii: tuple
    ccw: tuple
    turns: int
    outer: int


def layouts(n_strands):
    """Every connector layout tried by the fixture search, in a fixed order."""
    orders = [(0,) + p for p in itertools.permutations(range(1, n_strands))]
    for order in orders:
        for flips in itertools.product((False, True), repeat=n_strands):
            for perm in itertools.permutations(range(n_strands)):
                radii = tuple(1.25 + 0.3 * r for r in perm)
                outer = perm.index(n_strands - 1)
                for ccw in itertools.product((True, False), repeat=n_strands):
                    for turns in (0, 1, 2):
                        yield Layout(order, flips, radii, ccw, turns, outer)


def newborn_sign(strands, order, flips):
    """Sign of the triangle formed by three straight strands, ``(-1)**q``.

    The traversal order of the strands orients the triangle; ``q`` counts
    sides whose own direction agrees with it.  Also returns whether the sides
    are cyclically oriented.
    """
    lines = []
    for s, f in zip(strands, flips):
        pts = list(reversed(s)) if f else list(s)
        lines.append(pts)
    a, b, c = order
    p_ca = _meet(lines[c], lines[a])
    p_ab = _meet(lines[a], lines[b])
    p_bc = _meet(lines[b], lines[c])
    # walking p_ca -> p_ab -> p_bc meets the sides in traversal order, so it
    # follows the triangle orientation the curve induces
    q = 0
    for side, (u, v) in ((a, (p_ca, p_ab)), (b, (p_ab, p_bc)), (c, (p_bc, p_ca))):
        dx, dy = _direction_near(lines[side], u, v)
        if (v[0] - u[0]) * dx + (v[1] - u[1]) * dy > 0:
            q += 1
    return (-1) ** q, q in (0, 3)


def _segments(pts):
    return list(zip(pts, pts[1:]))


def _meet(l1, l2):
    for (p0, p1) in _segments(l1):
        for (q0, q1) in _segments(l2):
            rx, ry = p1[0] - p0[0], p1[1] - p0[1]
            sx, sy = q1[0] - q0[0], q1[1] - q0[1]
            den = rx * sy - ry * sx
            if den == 0:
                continue
            t = ((q0[0] - p0[0]) * sy - (q0[1] - p0[1]) * sx) / den
            u = ((q0[0] - p0[0]) * ry - (q0[1] - p0[1]) * rx) / den
            if 0 < t < 1 and 0 < u < 1:
                return (p0[0] + t * rx, p0[1] + t * ry)
    raise ValueError("strands do not cross")


def _direction_near(line, u, v):
    mx, my = 0.5 * (u[0] + v[0]), 0.5 * (u[1] + v[1])
    best = None
    for p0, p1 in _segments(line):
        dx, dy = p1[0] - p0[0], p1[1] - p0[1]
        ll = dx * dx + dy * dy
        t = min(1.0, max(0.0, ((mx - p0[0]) * dx + (my - p0[1]) * dy) / ll))
        dist = math.hypot(p0[0] + t * dx - mx, p0[1] + t * dy - my)
        if best is None or dist < best[0]:
            best = (dist, dx, dy)
    return best[1], best[2]


def _local_doubles(cf):
    imm = build_immersion(cf.to_curve())
    return [d for d in imm.doubles if math.hypot(d.position.x, d.position.y) < 1.0]


def local_index(kind, before: CurveFile, after: CurveFile):
    """The ``ind`` a table row refers to, and the orientation class of the move.

    Tangency: index of the two newborn double points.  Triple: the smallest
    index among the double points of the disappearing and newborn triangles;
    the move is in the drawn class when the summed index of those double
    points drops (by 1 for weak, 3 for strong), and in the reversed class
    when it rises.
    """
    loc_b = [d.index for d in _local_doubles(before)]
    loc_a = [d.index for d in _local_doubles(after)]
    if kind in TANGENCY:
        if len(loc_a) - len(loc_b) != 2 or len(set(loc_a)) != 1:
            raise ValueError("newborn double points do not share an index")
        return loc_a[0], "drawn"
    if len(loc_a) != 3 or len(loc_b) != 3:
        raise ValueError("a triple move needs three local double points on each side")
    return min(loc_a + loc_b), ("drawn" if sum(loc_a) < sum(loc_b) else "reversed")


def tangency_kind(flips):
    # both strands run left to right in their canonical form
    return "direct-tangency" if flips[0] == flips[1] else "opposite-tangency"


def build_pair(kind_family, layout, disk=(0.0, 0.0, 1.0)):
    """One fixture pair for a layout, oriented so the move is positive.

    Tangency moves are positive when they add double points; triple moves
    when the newborn triangle has sign +1.  Returns ``None`` when the base
    vertex does not land on an exterior arc.
    """
    if kind_family == "tangency":
        before_s, after_s = tangency_strands(-0.1), tangency_strands(0.7)
        kind = tangency_kind(layout.flips)
    elif kind_family == "triple":
        s_neg, s_pos = triple_strands(-0.2), triple_strands(0.2)
        sign_pos, cyclic = newborn_sign(s_pos, layout.order, layout.flips)
        before_s, after_s = (s_neg, s_pos) if sign_pos > 0 else (s_pos, s_neg)
        kind = "strong-triple" if cyclic else "weak-triple"
    else:
        raise ValueError(f"unknown family {kind_family!r}")
    before = assemble(before_s, layout.order, layout.flips, layout.radii, layout.ccw,
                      layout.turns, layout.outer)
    after = assemble(after_s, layout.order, layout.flips, layout.radii, layout.ccw,
                     layout.turns, layout.outer)
    for cf in (before, after):
        if not build_immersion(cf.to_curve()).base_on_exterior:
            return None
    ind, orientation = local_index(kind, before, after)
    note = (f"order={list(layout.order)} flips={list(layout.flips)} "
            f"ccw={list(layout.ccw)} turns={layout.turns}")
    return ModificationPair(kind, ind, before, after, tuple(disk), "positive", note, orientation)


def curated_pairs(per_kind=4):
    """Deterministic fixture selection: distinct ``ind`` values and layouts per kind.

    Also returns a few reversed-class triple pairs.
    """
    picked = {k: {} for k in MOVE_KINDS}
    reversed_ = {}
    for family, n in (("tangency", 2), ("triple", 3)):
        for lay in layouts(n):
            pair = build_pair(family, lay)
            if pair is None:
                continue
            if pair.orientation == "reversed":
                if len(reversed_) < 2 and pair.kind not in reversed_:
                    reversed_[pair.kind] = pair
                continue
            bucket = picked[pair.kind]
            if pair.ind_param not in bucket and len(bucket) < per_kind:
                bucket[pair.ind_param] = pair
    out = [p for k in MOVE_KINDS for _, p in sorted(picked[k].items())]
    return out, [reversed_[k] for k in sorted(reversed_)]


__all__ = ["MoveDiff", "build_pair", "curated_pairs", "expected_differences", "layouts",
           "local_index", "newborn_sign", "verify_modification"]
