"""Backend selection for the hot loops.

The compiled extension ``qstrange._kernels`` is used when importable; set
``QSTRANGE_PURE_PYTHON=1`` to force the pure-Python fallback.
"""

from __future__ import annotations

import os

import numpy as np

from . import _kernels_py

OVERLAP = _kernels_py.OVERLAP
ENDPOINT = _kernels_py.ENDPOINT


def _load_compiled():
    if os.environ.get("QSTRANGE_PURE_PYTHON", "") not in ("", "0"):
        return None
    try:
        from . import _kernels
    except ImportError:
        return None
    return _kernels


_compiled = _load_compiled()
BACKEND = "cython" if _compiled is not None else "python"


def _arrays(xs, ys):
    return (np.ascontiguousarray(xs, dtype=np.float64),
            np.ascontiguousarray(ys, dtype=np.float64))


def find_crossings(xs, ys, eps, backend=None):
    impl = _pick(backend)
    if impl is _kernels_py:
        return impl.find_crossings(list(map(float, xs)), list(map(float, ys)), eps)
    return impl.find_crossings(*_arrays(xs, ys), eps)


def winding_angle(xs, ys, px, py, backend=None):
    impl = _pick(backend)
    if impl is _kernels_py:
        return impl.winding_angle(list(map(float, xs)), list(map(float, ys)), px, py)
    return impl.winding_angle(*_arrays(xs, ys), float(px), float(py))


def min_distance(xs, ys, px, py, skip_a=-1, skip_b=-1, backend=None):
    impl = _pick(backend)
    if impl is _kernels_py:
        return impl.min_distance(list(map(float, xs)), list(map(float, ys)),
                                 px, py, skip_a, skip_b)
    return impl.min_distance(*_arrays(xs, ys), float(px), float(py), skip_a, skip_b)


def _pick(backend):
    if backend is None:
        return _compiled if _compiled is not None else _kernels_py
    if backend == "python":
        return _kernels_py
    if backend == "cython":
        if _compiled is None:
            raise RuntimeError("compiled kernels are not built")
        return _compiled
    raise ValueError(f"unknown backend {backend!r}")
