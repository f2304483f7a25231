"""Timing comparison of the two spectral-sum kernel backends.

Runs the weighted determinant-product sum over momentum subsets with the
numba build (if importable) and with the pure-numpy loop, on a ladder of
problem sizes, and prints a small table.  Usage:

    python3 benchmarks/bench_kernels.py [--repeats 5]
"""

import argparse
import time

import numpy as np

from spinpaths.kernels import _det_product_sum_numpy, backend_name, det_product_sum


def make_case(nsets, nvar, rng):
    phis = rng.uniform(-np.pi, np.pi, size=(nsets, nvar))
    mu_l = np.sort(rng.choice(4 * nvar, size=nvar, replace=False))[::-1]
    mu_r = np.sort(rng.choice(4 * nvar, size=nvar, replace=False))[::-1]
    weights = (rng.normal(size=nsets) + 1j * rng.normal(size=nsets))
    return (np.ascontiguousarray(phis),
            np.ascontiguousarray(mu_l, dtype=np.int64),
            np.ascontiguousarray(mu_r, dtype=np.int64),
            np.ascontiguousarray(weights, dtype=np.complex128))


def best_of(fn, args, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    rng = np.random.default_rng(0)
    cases = [(100, 2), (1000, 2), (1000, 4), (5000, 4), (5000, 8), (20000, 8)]

    print(f"active backend: {backend_name()}")
    header = f"{'subsets':>8} {'walkers':>8} {'numpy (ms)':>12} " \
             f"{'active (ms)':>12} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for nsets, nvar in cases:
        case = make_case(nsets, nvar, rng)
        det_product_sum(*case)              # warm-up / jit compile
        t_active = best_of(det_product_sum, case, args.repeats)
        t_numpy = best_of(_det_product_sum_numpy, case, args.repeats)
        print(f"{nsets:>8} {nvar:>8} {t_numpy * 1e3:>12.3f} "
              f"{t_active * 1e3:>12.3f} {t_numpy / t_active:>8.2f}x")


if __name__ == "__main__":
    main()
