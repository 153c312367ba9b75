"""Compare the compiled and pure-Python kernel backends.

    python3 benchmarks/bench_kernels.py --vertices 240 960 --repeat 5
"""

import argparse
import time

import numpy as np

from qstrange import kernels
from qstrange.corpus import random_generic_curve
from qstrange.immersion import build_immersion


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def loop(n, seed=0):
    rng = np.random.default_rng(seed)
    t = np.linspace(0, 2 * np.pi, n, endpoint=False)
    r = 1 + 0.3 * np.sin(7 * t) + 0.01 * rng.standard_normal(n)
    return r * np.cos(3 * t), r * np.sin(2 * t)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--vertices", type=int, nargs="+", default=[240, 960])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)

    backends = ["python"] + (["cython"] if kernels.BACKEND == "cython" else [])
    if len(backends) == 1:
        print("compiled kernels not built; timing the Python backend only")
    print(f"{'kernel':<16}{'n':>6}" + "".join(f"{b:>12}" for b in backends) + "   speedup")
    for n in args.vertices:
        xs, ys = loop(n)
        cases = {
            "find_crossings": lambda b: kernels.find_crossings(xs, ys, 1e-9, backend=b),
            "winding_angle": lambda b: [kernels.winding_angle(xs, ys, 0.1 * k, 0.05, backend=b)
                                        for k in range(20)],
            "min_distance": lambda b: [kernels.min_distance(xs, ys, 0.1 * k, 0.05, backend=b)
                                       for k in range(20)],
        }
        for name, fn in cases.items():
            t = {b: best_of(lambda: fn(b), args.repeat) for b in backends}
            speed = f"{t['python'] / t['cython']:8.1f}x" if "cython" in t else ""
            print(f"{name:<16}{n:>6}" + "".join(f"{t[b] * 1e3:>10.2f}ms" for b in backends)
                  + f"  {speed}")

    cf = random_generic_curve(5, 10)
    t = best_of(lambda: build_immersion(cf.to_curve()), args.repeat)
    print(f"\nbuild_immersion, 240 vertices / 10 doubles, default backend "
          f"({kernels.BACKEND}): {t * 1e3:.2f} ms")


if __name__ == "__main__":
    main()
