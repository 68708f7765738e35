"""Benchmark the compiled lattice-sum kernel against the numpy fallback.

The tail sums are the hot inner loop of every Weierstrass evaluation, so
this is the workload the extension exists for. Usage:

    python benchmarks/bench_lattice_sums.py [--points N] [--truncation N]
"""
from __future__ import annotations

import argparse
import time

import numpy as np

from curvekernel import lattice_sums


def make_workload(points: int, truncation: int, seed: int = 0):
    rng = np.random.default_rng(seed)
    z = rng.uniform(-0.6, 0.6, size=points) + 1j * rng.uniform(-0.6, 0.6, size=points)
    m, k = np.meshgrid(
        np.arange(-truncation, truncation + 1),
        np.arange(-truncation, truncation + 1),
        indexing="ij",
    )
    w = (m * 1.0 + k * (0.3 + 1.1j)).ravel()
    return z, w[np.abs(w) > 0.4]


def time_fn(fn, z, w, repeats: int = 5) -> float:
    fn(z[:2], w)  # warm up
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn(z, w)
        best = min(best, time.perf_counter() - start)
    return best


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--points", type=int, default=512)
    parser.add_argument("--truncation", type=int, default=64)
    args = parser.parse_args()

    z, w = make_workload(args.points, args.truncation)
    terms = args.points * w.shape[0]
    print(f"workload: {args.points} points x {w.shape[0]} lattice sites = {terms:.3g} terms")
    print(f"selected backend: {lattice_sums.backend_name()}")

    t_numpy = time_fn(lattice_sums.tail_sums_numpy, z, w)
    rows = [("numpy", t_numpy, terms / t_numpy / 1e6)]
    if lattice_sums.COMPILED:
        from curvekernel import _latsum

        def compiled(z, w):
            return _latsum.tail_sums(np.ascontiguousarray(z), np.ascontiguousarray(w))

        t_compiled = time_fn(compiled, z, w)
        rows.append(("compiled", t_compiled, terms / t_compiled / 1e6))
        # agreement on this workload
        sz_a, sp_a = compiled(z, w)
        sz_b, sp_b = lattice_sums.tail_sums_numpy(z, w)
        print(f"max backend deviation: {max(np.abs(sz_a - sz_b).max(), np.abs(sp_a - sp_b).max()):.3e}")
    else:
        print("compiled extension not built; benchmarking the fallback only")

    print(f"{'backend':<10} {'best time':>12} {'Mterms/s':>10}")
    for name, t, rate in rows:
        print(f"{name:<10} {t * 1e3:>10.2f}ms {rate:>10.1f}")
    if len(rows) == 2:
        print(f"speedup: {rows[0][1] / rows[1][1]:.2f}x")


if __name__ == "__main__":
    main()
