"""Pure-Python implementations of the hot loops.

Mirrors ``_kernels.pyx`` function for function; used when the compiled
extension is unavailable or ``QSTRANGE_PURE_PYTHON=1`` is set.  Inputs are
plain sequences of floats describing a closed polyline (segment ``i`` joins
vertex ``i`` to vertex ``i + 1 mod n``).
"""

from math import atan2, hypot

NONE = 0
OVERLAP = 1
ENDPOINT = 2
HIT = 3

_PARALLEL = 1e-12


def find_crossings(xs, ys, eps):
    """All transversal interior crossings between non-adjacent segments.

    Returns ``(hits, bad)`` where ``hits`` lists ``(i, j, ta, tb)`` with
    ``i < j`` and ``bad`` lists ``(i, j, code)`` for degenerate contacts.
    """
    n = len(xs)
    hits = []
    bad = []
    x0 = list(xs)
    y0 = list(ys)
    x1 = x0[1:] + x0[:1]
    y1 = y0[1:] + y0[:1]
    lo_x = [min(a, b) for a, b in zip(x0, x1)]
    hi_x = [max(a, b) for a, b in zip(x0, x1)]
    lo_y = [min(a, b) for a, b in zip(y0, y1)]
    hi_y = [max(a, b) for a, b in zip(y0, y1)]
    for i in range(n - 2):
        px, py = x0[i], y0[i]
        rx, ry = x1[i] - px, y1[i] - py
        rlen = hypot(rx, ry)
        # slack keeps near-endpoint contacts visible to the degeneracy test
        sx_ = eps * rlen
        ax0, ax1 = lo_x[i] - sx_, hi_x[i] + sx_
        ay0, ay1 = lo_y[i] - sx_, hi_y[i] + sx_
        last = n - 1 if i > 0 else n - 2
        for j in range(i + 2, last + 1):
            if hi_x[j] < ax0 or lo_x[j] > ax1 or hi_y[j] < ay0 or lo_y[j] > ay1:
                continue
            code, ta, tb = segment_pair(px, py, rx, ry, x0[j], y0[j],
                                        x1[j] - x0[j], y1[j] - y0[j], eps)
            if code == NONE:
                continue
            if code != HIT:
                bad.append((i, j, code))
                continue
            hits.append((i, j, ta, tb))
    return hits, bad


def segment_pair(px, py, rx, ry, qx, qy, sx, sy, eps):
    """Classify segments ``p + t*r`` and ``q + u*s`` (``t, u`` in [0, 1]).

    Returns ``(code, ta, tb)``; ``ta, tb`` are meaningful only for ``HIT``.
    """
    rlen = hypot(rx, ry)
    slen = hypot(sx, sy)
    wx, wy = qx - px, qy - py
    d = rx * sy - ry * sx
    if abs(d) <= _PARALLEL * rlen * slen:
        if abs(wx * ry - wy * rx) <= _PARALLEL * rlen * max(hypot(wx, wy), rlen):
            rr = rx * rx + ry * ry
            u0 = (wx * rx + wy * ry) / rr
            u1 = ((wx + sx) * rx + (wy + sy) * ry) / rr
            if max(u0, u1) >= -eps and min(u0, u1) <= 1.0 + eps:
                return OVERLAP, 0.0, 0.0
        return NONE, 0.0, 0.0
    ta = (wx * sy - wy * sx) / d
    tb = (wx * ry - wy * rx) / d
    if ta < -eps or ta > 1.0 + eps or tb < -eps or tb > 1.0 + eps:
        return NONE, 0.0, 0.0
    if ta < eps or ta > 1.0 - eps or tb < eps or tb > 1.0 - eps:
        return ENDPOINT, ta, tb
    return HIT, ta, tb


def winding_angle(xs, ys, px, py):
    """Signed angle swept by the vector from ``(px, py)`` to the polyline."""
    n = len(xs)
    total = 0.0
    ax = xs[n - 1] - px
    ay = ys[n - 1] - py
    for k in range(n):
        bx = xs[k] - px
        by = ys[k] - py
        total += atan2(ax * by - ay * bx, ax * bx + ay * by)
        ax, ay = bx, by
    return total


def min_distance(xs, ys, px, py, skip_a, skip_b):
    """Distance from a point to the closed polyline, ignoring two segments."""
    n = len(xs)
    best = float("inf")
    for i in range(n):
        if i == skip_a or i == skip_b:
            continue
        j = i + 1 if i + 1 < n else 0
        ax, ay = xs[i], ys[i]
        dx, dy = xs[j] - ax, ys[j] - ay
        ll = dx * dx + dy * dy
        t = ((px - ax) * dx + (py - ay) * dy) / ll if ll > 0.0 else 0.0
        if t < 0.0:
            t = 0.0
        elif t > 1.0:
            t = 1.0
        dist = hypot(ax + t * dx - px, ay + t * dy - py)
        if dist < best:
            best = dist
    return best
