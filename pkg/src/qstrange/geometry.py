"""Planar primitives: segment crossings, winding numbers, turning angles.

All computations are in floating point.  Inputs that fall inside a tolerance
band are rejected with a :class:`~qstrange.errors.GenericityError`; nothing
is repaired.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from . import _kernels_py, kernels
from .errors import CuspVertex, DegenerateIntersection, PointTooClose, TangentialPair

TAU = 2.0 * math.pi


@dataclass(frozen=True)
class Point2:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"non-finite coordinate in {self!r}")

    def __iter__(self):
        yield self.x
        yield self.y


@dataclass(frozen=True)
class Tolerances:
    """Numerical thresholds.

    eps_intersect
        Minimum distance, in segment-parameter units, between a crossing and
        either endpoint of the segments involved.
    eps_angle
        Minimum transversal angle (radians) at a crossing and minimum
        deviation of a vertex turning angle from a full reversal.
    eps_coeff
        Tolerance for comparing real polynomial coefficients.
    """

    eps_intersect: float = 1e-9
    eps_angle: float = 1e-6
    eps_coeff: float = 1e-9

    def __post_init__(self):
        for name in ("eps_intersect", "eps_angle", "eps_coeff"):
            if not getattr(self, name) > 0.0:
                raise ValueError(f"{name} must be strictly positive")
        if not self.eps_angle < math.pi / 4:
            raise ValueError("eps_angle must be below pi/4")


DEFAULT_TOLERANCES = Tolerances()


@dataclass(frozen=True)
class Crossing:
    point: Point2
    ta: float
    tb: float


def intersect_segments(a: Sequence, b: Sequence,
                       tol: Tolerances = DEFAULT_TOLERANCES) -> Optional[Crossing]:
    """Transversal interior crossing of segments ``a = (p0, p1)``, ``b = (q0, q1)``.

    Returns ``None`` when the segments are disjoint.
    """
    (p0, p1), (q0, q1) = a, b
    px, py = float(p0[0]), float(p0[1])
    rx, ry = float(p1[0]) - px, float(p1[1]) - py
    qx, qy = float(q0[0]), float(q0[1])
    sx, sy = float(q1[0]) - qx, float(q1[1]) - qy
    if (rx == 0.0 and ry == 0.0) or (sx == 0.0 and sy == 0.0):
        raise ValueError("segment of zero length")
    code, ta, tb = _kernels_py.segment_pair(px, py, rx, ry, qx, qy, sx, sy,
                                            tol.eps_intersect)
    if code == _kernels_py.NONE:
        return None
    if code == _kernels_py.OVERLAP:
        raise DegenerateIntersection("segments overlap collinearly", (0, 1))
    if code == _kernels_py.ENDPOINT:
        raise DegenerateIntersection("segments touch at or near an endpoint", (0, 1))
    return Crossing(Point2(px + ta * rx, py + ta * ry), ta, tb)


def winding_number(loop, p, tol: Tolerances = DEFAULT_TOLERANCES) -> int:
    """Degree of the direction map from ``p`` to the closed polyline ``loop``."""
    xs, ys = _coords(loop)
    angle = kernels.winding_angle(xs, ys, float(p[0]), float(p[1]))
    turns = angle / TAU
    k = round(turns)
    if abs(turns - k) >= 0.25:
        raise PointTooClose(f"winding residual {abs(turns - k):.3g} at ({p[0]}, {p[1]})")
    return int(k)


def turning_angles(loop, tol: Tolerances = DEFAULT_TOLERANCES) -> np.ndarray:
    """Signed exterior angle at every vertex of a closed polyline.

    Entry ``k`` is the turn from the edge entering vertex ``k`` to the edge
    leaving it, in ``(-pi, pi)``.
    """
    xs, ys = _coords(loop)
    dx = np.roll(xs, -1) - xs
    dy = np.roll(ys, -1) - ys
    if np.any((dx == 0.0) & (dy == 0.0)):
        k = int(np.flatnonzero((dx == 0.0) & (dy == 0.0))[0])
        raise ValueError(f"repeated consecutive vertex at index {k}")
    ix, iy = np.roll(dx, 1), np.roll(dy, 1)
    ang = np.arctan2(ix * dy - iy * dx, ix * dx + iy * dy)
    cusp = np.flatnonzero(np.abs(ang) > math.pi - tol.eps_angle)
    if cusp.size:
        k = int(cusp[0])
        raise CuspVertex(f"vertex {k} reverses direction", ((k - 1) % len(xs), k))
    return ang


def total_turning(loop, tol: Tolerances = DEFAULT_TOLERANCES) -> float:
    xs, _ = _coords(loop)
    if len(xs) < 3:
        raise ValueError("need at least three vertices")
    return float(math.fsum(turning_angles(loop, tol)))


def transversal_angle(u, v, tol: Tolerances = DEFAULT_TOLERANCES) -> float:
    """Non-oriented angle between ``u`` and ``-v``, in ``(0, pi)``."""
    ux, uy = float(u[0]), float(u[1])
    vx, vy = float(v[0]), float(v[1])
    if (ux == 0.0 and uy == 0.0) or (vx == 0.0 and vy == 0.0):
        raise ValueError("zero direction vector")
    # atan2 of |cross| and dot stays accurate near 0 and pi, unlike acos
    theta = math.atan2(abs(ux * vy - uy * vx), -(ux * vx + uy * vy))
    if theta < tol.eps_angle or theta > math.pi - tol.eps_angle:
        raise TangentialPair(f"strands meet at angle {theta:.3g} rad")
    return theta


def signed_area(loop) -> float:
    xs, ys = _coords(loop)
    return 0.5 * float(np.dot(xs, np.roll(ys, -1)) - np.dot(np.roll(xs, -1), ys))


def _coords(loop):
    if isinstance(loop, np.ndarray):
        arr = np.asarray(loop, dtype=np.float64)
    else:
        arr = np.array([(float(p[0]), float(p[1])) for p in loop], dtype=np.float64)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise ValueError("expected a sequence of 2D points")
    return arr[:, 0].copy(), arr[:, 1].copy()
