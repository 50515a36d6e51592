"""Timing comparison of the compiled and pure-Python recurrence kernels.

Run:  python3 benchmarks/bench_kernels.py
"""
import time

import numpy as np

from curvepoly import build_family
from curvepoly import _kernels_py

try:
    from curvepoly import _kernels_c
    impls = [("cython", _kernels_c), ("python", _kernels_py)]
except ImportError:
    impls = [("python", _kernels_py)]


def bench(label, fn, repeats=7):
    best = np.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    print(f"  {label:<28s} {1e3 * best:9.3f} ms")
    return best


def main():
    fam = build_family("jacobi", 200, alpha=0.3, beta=0.7)
    x = np.linspace(-0.99, 0.99, 20000)
    rng = np.random.default_rng(0)
    c = rng.standard_normal(201)
    times = {}
    for name, mod in impls:
        print(f"backend: {name}")
        times[name, "vander"] = bench(
            "vander (200 x 20000)",
            lambda m=mod: m.vander(fam.alpha, fam.sqb, fam.mu0, x, 200))
        times[name, "derivs"] = bench(
            "vander_derivs order 2",
            lambda m=mod: m.vander_derivs(fam.alpha, fam.sqb, fam.mu0, x, 120, 2))
        times[name, "clenshaw"] = bench(
            "clenshaw (201 coeffs)",
            lambda m=mod: m.clenshaw(fam.alpha, fam.sqb, fam.mu0, c, x))
    if len(impls) == 2:
        print("speedup (python / cython):")
        for op in ("vander", "derivs", "clenshaw"):
            r = times["python", op] / times["cython", op]
            print(f"  {op:<28s} {r:6.2f}x")


if __name__ == "__main__":
    main()
