# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops; see ``_kernels_py`` for the reference semantics."""

from libc.math cimport atan2, hypot, fabs, fmin, fmax, INFINITY

OVERLAP = 1
ENDPOINT = 2

cdef double _PARALLEL = 1e-12


def find_crossings(const double[::1] xs, const double[::1] ys, double eps):
    cdef Py_ssize_t n = xs.shape[0]
    cdef Py_ssize_t i, j, jn, last
    cdef double px, py, rx, ry, rlen, slack, ax0, ax1, ay0, ay1
    cdef double qx, qy, sx, sy, slen, wx, wy, d, ta, tb, rr, u0, u1
    cdef double bx0, bx1, by0, by1
    hits = []
    bad = []
    for i in range(n - 2):
        px = xs[i]
        py = ys[i]
        rx = xs[i + 1] - px
        ry = ys[i + 1] - py
        rlen = hypot(rx, ry)
        slack = eps * rlen
        ax0 = fmin(px, px + rx) - slack
        ax1 = fmax(px, px + rx) + slack
        ay0 = fmin(py, py + ry) - slack
        ay1 = fmax(py, py + ry) + slack
        last = n - 1 if i > 0 else n - 2
        for j in range(i + 2, last + 1):
            jn = j + 1 if j + 1 < n else 0
            qx = xs[j]
            qy = ys[j]
            bx0 = fmin(qx, xs[jn])
            bx1 = fmax(qx, xs[jn])
            by0 = fmin(qy, ys[jn])
            by1 = fmax(qy, ys[jn])
            if bx1 < ax0 or bx0 > ax1 or by1 < ay0 or by0 > ay1:
                continue
            sx = xs[jn] - qx
            sy = ys[jn] - qy
            slen = hypot(sx, sy)
            wx = qx - px
            wy = qy - py
            d = rx * sy - ry * sx
            if fabs(d) <= _PARALLEL * rlen * slen:
                if fabs(wx * ry - wy * rx) <= _PARALLEL * rlen * fmax(hypot(wx, wy), rlen):
                    rr = rx * rx + ry * ry
                    u0 = (wx * rx + wy * ry) / rr
                    u1 = ((wx + sx) * rx + (wy + sy) * ry) / rr
                    if fmax(u0, u1) >= -eps and fmin(u0, u1) <= 1.0 + eps:
                        bad.append((i, j, OVERLAP))
                continue
            ta = (wx * sy - wy * sx) / d
            tb = (wx * ry - wy * rx) / d
            if ta < -eps or ta > 1.0 + eps or tb < -eps or tb > 1.0 + eps:
                continue
            if ta < eps or ta > 1.0 - eps or tb < eps or tb > 1.0 - eps:
                bad.append((i, j, ENDPOINT))
                continue
            hits.append((i, j, ta, tb))
    return hits, bad


def winding_angle(const double[::1] xs, const double[::1] ys, double px, double py):
    cdef Py_ssize_t n = xs.shape[0]
    cdef Py_ssize_t k
    cdef double total = 0.0
    cdef double ax = xs[n - 1] - px
    cdef double ay = ys[n - 1] - py
    cdef double bx, by
    for k in range(n):
        bx = xs[k] - px
        by = ys[k] - py
        total += atan2(ax * by - ay * bx, ax * bx + ay * by)
        ax = bx
        ay = by
    return total


def min_distance(const double[::1] xs, const double[::1] ys, double px, double py,
                 Py_ssize_t skip_a, Py_ssize_t skip_b):
    cdef Py_ssize_t n = xs.shape[0]
    cdef Py_ssize_t i, j
    cdef double best = INFINITY
    cdef double ax, ay, dx, dy, ll, t, dist
    for i in range(n):
        if i == skip_a or i == skip_b:
            continue
        j = i + 1 if i + 1 < n else 0
        ax = xs[i]
        ay = ys[i]
        dx = xs[j] - ax
        dy = ys[j] - ay
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
