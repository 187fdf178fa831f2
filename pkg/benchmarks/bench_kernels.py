#!/usr/bin/env python3
"""Benchmark: compiled kernels versus the pure-Python fallback.

Times the low-level kernels from both modules directly, then the end-to-end
pipeline (spectral data + reconstruction + one commuting diagram) in a
subprocess per backend so the import-time selection is exercised for real.

Usage: python benchmarks/bench_kernels.py [--pipeline-seeds N]
"""

import argparse
import os
import random
import subprocess
import sys
import time

from spectral_pair import _kernels_py

try:
    from spectral_pair import _kernels_cy
except ImportError:
    _kernels_cy = None


def random_complex(rng, radius=1.0):
    while True:
        z = complex(rng.uniform(-radius, radius), rng.uniform(-radius, radius))
        if abs(z) <= radius:
            return z


def timed(fn, args_list, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        for args in args_list:
            fn(*args)
        best = min(best, time.perf_counter() - start)
    return best / len(args_list)


def bench_kernels(n=20000):
    rng = random.Random(0)
    mats = [tuple(random_complex(rng) for _ in range(9)) for _ in range(200)]
    cubics = [(1.0 + 0j, random_complex(rng, 2), random_complex(rng, 2),
               random_complex(rng, 2)) for _ in range(200)]
    cases = {
        "det3": [(m,) for m in mats],
        "adj3": [(m,) for m in mats],
        "matmul3": [(mats[i], mats[(i + 1) % len(mats)])
                    for i in range(len(mats))],
        "char_poly3": [(m,) for m in mats],
        "kernel_vector3": [(m,) for m in mats],
        "solve_cubic_raw": cubics,
    }
    scale = max(1, n // 200)
    rows = []
    for name, args_list in cases.items():
        args_list = args_list * scale
        t_py = timed(getattr(_kernels_py, name), args_list)
        if _kernels_cy is not None:
            t_cy = timed(getattr(_kernels_cy, name), args_list)
            rows.append((name, t_py, t_cy, t_py / t_cy))
        else:
            rows.append((name, t_py, None, None))
    return rows


PIPELINE_SNIPPET = """
import time
from spectral_pair import (BACKEND, Generator, random_pair, spectral_data,
                           reconstruct, verify_commutation)
pairs = [random_pair(s) for s in range({seeds})]
start = time.perf_counter()
for pair in pairs:
    sd = spectral_data(pair)
    reconstruct(sd)
    verify_commutation(Generator.SHEAR, pair)
elapsed = time.perf_counter() - start
print(f"{{BACKEND}} {{elapsed / {seeds}:.6f}}")
"""


def bench_pipeline(seeds):
    results = {}
    for backend in ("py", "cy") if _kernels_cy is not None else ("py",):
        env = dict(os.environ, SPECTRAL_PAIR_BACKEND=backend)
        proc = subprocess.run(
            [sys.executable, "-c", PIPELINE_SNIPPET.format(seeds=seeds)],
            capture_output=True, text=True, env=env)
        if proc.returncode != 0:
            print(proc.stderr, file=sys.stderr)
            raise SystemExit(1)
        name, per_seed = proc.stdout.split()
        results[name] = float(per_seed)
    return results


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--pipeline-seeds", type=int, default=50)
    parser.add_argument("--kernel-calls", type=int, default=20000)
    args = parser.parse_args()

    print(f"{'kernel':<18} {'python':>12} {'cython':>12} {'speedup':>9}")
    for name, t_py, t_cy, speedup in bench_kernels(args.kernel_calls):
        if t_cy is None:
            print(f"{name:<18} {t_py * 1e6:>10.2f}us {'n/a':>12} {'n/a':>9}")
        else:
            print(f"{name:<18} {t_py * 1e6:>10.2f}us {t_cy * 1e6:>10.2f}us "
                  f"{speedup:>8.1f}x")

    print()
    results = bench_pipeline(args.pipeline_seeds)
    print("end-to-end (spectral + reconstruct + commuting diagram, per pair):")
    for backend, per_seed in results.items():
        print(f"  {backend:<8} {per_seed * 1e3:8.3f} ms")
    if len(results) == 2:
        print(f"  speedup  {results['python'] / results['cython']:8.1f}x")


if __name__ == "__main__":
    main()
