import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from qstrange import kernels

compiled = pytest.mark.skipif(kernels.BACKEND != "cython", reason="compiled kernels not built")


def _loop(seed, n=40):
    rng = np.random.default_rng(seed)
    t = np.sort(rng.uniform(0, 2 * np.pi, n))
    r = 1 + 0.6 * rng.uniform(-1, 1, n)
    return r * np.cos(3 * t), r * np.sin(2 * t)


@compiled
@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_find_crossings_parity(seed):
    xs, ys = _loop(seed)
    hp, bp = kernels.find_crossings(xs, ys, 1e-9, backend="python")
    hc, bc = kernels.find_crossings(xs, ys, 1e-9, backend="cython")
    assert [h[:2] for h in hp] == [h[:2] for h in hc]
    assert np.allclose([h[2:] for h in hp], [h[2:] for h in hc], atol=1e-14, rtol=0) if hp else not hc
    assert list(bp) == list(bc)


@compiled
@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.floats(-2, 2), st.floats(-2, 2))
def test_point_kernels_parity(seed, px, py):
    xs, ys = _loop(seed)
    a = kernels.winding_angle(xs, ys, px, py, backend="python")
    b = kernels.winding_angle(xs, ys, px, py, backend="cython")
    assert a == pytest.approx(b, abs=1e-12)
    a = kernels.min_distance(xs, ys, px, py, 3, 7, backend="python")
    b = kernels.min_distance(xs, ys, px, py, 3, 7, backend="cython")
    assert a == pytest.approx(b, abs=1e-14)


def test_python_backend_always_available():
    xs, ys = [0.0, 1.0, 1.0, 0.0], [0.0, 0.0, 1.0, 1.0]
    assert kernels.winding_angle(xs, ys, 0.5, 0.5, backend="python") == pytest.approx(2 * np.pi)
    assert kernels.min_distance(xs, ys, 0.5, 0.25, backend="python") == pytest.approx(0.25)
    hits, bad = kernels.find_crossings([0, 1, 1, 0], [0, 1, 0, 1], 1e-9, backend="python")
    assert [h[:2] for h in hits] == [(0, 2)] and not bad


def test_unknown_backend():
    with pytest.raises(ValueError):
        kernels.winding_angle([0, 1, 0], [0, 0, 1], 0.1, 0.1, backend="fortran")


def test_fallback_selected_by_environment():
    import os
    import subprocess
    import sys

    env = dict(os.environ, QSTRANGE_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "from qstrange import kernels; print(kernels.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True).stdout
    assert out.strip() == "python"
