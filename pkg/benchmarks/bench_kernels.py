#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Runs each kernel on identical workloads and, when the extension is
available, an end-to-end verdict sweep with the backend swapped in place.

    python benchmarks/bench_kernels.py [--seed N] [--quick]
"""
from __future__ import annotations

import argparse
import random
import time

import numpy as np

import twoeig._kernels as kernel_registry
from twoeig._kernels import pure

try:
    from twoeig._kernels import _native as native
except ImportError:
    native = None


def random_adjacency(rng: random.Random, n: int, p: float) -> np.ndarray:
    m = np.zeros((n, n), dtype=np.uint8)
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                m[i, j] = m[j, i] = 1
    return m


def timeit(fn) -> float:
    start = time.perf_counter()
    fn()
    return time.perf_counter() - start


def bench_scans(backend, graphs):
    for adj in graphs:
        backend.induced_p4(adj)
        backend.coclique3(adj)


def bench_bfs(backend, graphs):
    for adj in graphs:
        for src in range(adj.shape[0]):
            backend.bfs_unique_distances(adj, src)


def bench_jacobi(backend, matrices):
    for a in matrices:
        backend.jacobi_sweeps(a.copy(), 1e-12, 100)


def bench_full_sweep(backend_module, max_n: int):
    """Swap the selected kernel functions and run the verdict self-check."""
    from twoeig.selftest import run_selftest

    saved = {
        name: getattr(kernel_registry, name)
        for name in ("induced_p4", "coclique3", "bfs_unique_distances", "jacobi_sweeps")
    }
    try:
        for name in saved:
            setattr(kernel_registry, name, getattr(backend_module, name))
        report = run_selftest(max_n=max_n, seed=0, cases=0)
        assert report.ok
    finally:
        for name, fn in saved.items():
            setattr(kernel_registry, name, fn)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--quick", action="store_true", help="smaller workloads")
    args = parser.parse_args()

    rng = random.Random(args.seed)
    np_rng = np.random.default_rng(args.seed)

    scan_graphs = [random_adjacency(rng, 22 if args.quick else 30, p) for p in (0.2, 0.5, 0.8) for _ in range(20)]
    bfs_graphs = [random_adjacency(rng, 40 if args.quick else 60, 0.15) for _ in range(15)]
    sizes = (20, 40) if args.quick else (30, 80, 150)
    matrices = []
    for n in sizes:
        a = np_rng.standard_normal((n, n))
        matrices.append(a + a.T)

    workloads = [
        ("p4 + coclique scans", bench_scans, scan_graphs),
        ("bfs uniqueness (all sources)", bench_bfs, bfs_graphs),
        (f"jacobi sweeps n={sizes}", bench_jacobi, matrices),
    ]

    print(f"{'workload':<34}{'pure':>10}{'native':>10}{'speedup':>9}")
    for label, fn, payload in workloads:
        t_pure = timeit(lambda: fn(pure, payload))
        if native is None:
            print(f"{label:<34}{t_pure:>9.3f}s{'-':>10}{'-':>9}")
            continue
        t_native = timeit(lambda: fn(native, payload))
        print(f"{label:<34}{t_pure:>9.3f}s{t_native:>9.3f}s{t_pure / t_native:>8.1f}x")

    max_n = 5 if args.quick else 6
    t_pure = timeit(lambda: bench_full_sweep(pure, max_n))
    if native is not None:
        t_native = timeit(lambda: bench_full_sweep(native, max_n))
        label = f"verdict self-check n<={max_n}"
        print(f"{label:<34}{t_pure:>9.3f}s{t_native:>9.3f}s{t_pure / t_native:>8.1f}x")
    else:
        print("compiled extension not available; built pure-only numbers")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
