"""Benchmark the numba kernels against the pure-numpy fallback.

The hot loops are the union-find block refinement (primitivity testing over
orbit domains up to a few hundred thousand points) and the orbit partition.
Run:

    python benchmarks/bench_kernels.py            # current backend
    EDGEPRIM_KERNELS=numpy python benchmarks/bench_kernels.py

or let this script fork both variants side by side:

    python benchmarks/bench_kernels.py --compare
"""

import argparse
import os
import subprocess
import sys
import time

import numpy as np


def make_inputs(n, m, seed=20240817):
    rng = np.random.default_rng(seed)
    gens = np.stack([rng.permutation(n) for _ in range(m)]).astype(np.int64)
    return gens


def run_once(label):
    from edgeprim import _kernels

    print(f"backend: {_kernels.BACKEND} ({label})")
    rows = []
    for n, m in ((1000, 4), (20000, 4), (216000, 5)):
        gens = make_inputs(n, m)
        # warm-up (includes jit compilation for the numba path)
        _kernels.block_refine(gens, [0], [1])
        t0 = time.perf_counter()
        reps = 5 if n <= 20000 else 2
        for k in range(reps):
            _kernels.block_refine(gens, [0], [k + 1])
        block_t = (time.perf_counter() - t0) / reps
        _kernels.orbit_partition(gens)
        t0 = time.perf_counter()
        for _ in range(reps):
            _kernels.orbit_partition(gens)
        orbit_t = (time.perf_counter() - t0) / reps
        rows.append((n, m, block_t, orbit_t))
        print(f"  n={n:7d} gens={m}  block_refine {block_t * 1e3:9.2f} ms"
              f"   orbit_partition {orbit_t * 1e3:9.2f} ms")
    return rows


def compare():
    for backend in ("numba", "numpy"):
        env = dict(os.environ, EDGEPRIM_KERNELS=backend)
        subprocess.run([sys.executable, __file__], env=env, check=True)


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--compare", action="store_true",
                        help="run both backends in subprocesses")
    args = parser.parse_args()
    if args.compare:
        compare()
    else:
        run_once(os.environ.get("EDGEPRIM_KERNELS", "auto"))


if __name__ == "__main__":
    main()
