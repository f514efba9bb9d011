"""Compare the numba and numpy kernels, and the exact oracle under each backend.

    python3 benchmarks/bench_kernels.py [--repeat 200]

The oracle comparison runs in subprocesses because the backend is fixed at
import time by ``TWINWIDTH_PURE_NUMPY``.
"""
from __future__ import annotations

import argparse
import os
import subprocess
import sys
import time

import numpy as np

from twinwidth import kernels


def random_masks(n: int, seed: int):
    rng = np.random.default_rng(seed)
    black = np.zeros(n, np.uint64)
    red = np.zeros(n, np.uint64)
    for i in range(n):
        for j in range(i + 1, n):
            r = rng.random()
            if r < 0.35:
                black[i] |= np.uint64(1) << np.uint64(j)
                black[j] |= np.uint64(1) << np.uint64(i)
            elif r < 0.45:
                red[i] |= np.uint64(1) << np.uint64(j)
                red[j] |= np.uint64(1) << np.uint64(i)
    return black, red


def timeit(fn, repeat: int) -> float:
    fn()  # warm-up (and compilation)
    t = time.perf_counter()
    for _ in range(repeat):
        fn()
    return (time.perf_counter() - t) / repeat


def kernel_table(repeat: int) -> None:
    print(f"{'n':>4} {'pairs':>6} {'numpy scores':>14} {'numba scores':>14} {'numpy contract':>15} {'numba contract':>15}")
    for n in (12, 24, 48, 64):
        black, red = random_masks(n, n)
        alive = np.arange(n, dtype=np.int64)
        pi, pj = np.triu_indices(n, 1)
        pi, pj = pi.astype(np.int64), pj.astype(np.int64)
        extra = np.zeros(n, np.int64)
        row = [n, pi.size,
               timeit(lambda: kernels.pair_scores_numpy(black, red, extra, alive, pi, pj), repeat)]
        if kernels.HAVE_NUMBA:
            a = kernels.pair_scores_numpy(black, red, extra, alive, pi, pj)
            b = kernels.pair_scores_numba(black, red, extra, alive, pi, pj)
            assert np.array_equal(a, b), "backends disagree"
            row.append(timeit(lambda: kernels.pair_scores_numba(black, red, extra, alive, pi, pj), repeat))
        else:
            row.append(float("nan"))
        row.append(timeit(lambda: kernels.contract_numpy(black, red, 0, 1), repeat))
        row.append(timeit(lambda: kernels.contract_numba(black, red, 0, 1), repeat) if kernels.HAVE_NUMBA else float("nan"))
        print(f"{row[0]:>4} {row[1]:>6} " + " ".join(f"{x * 1e6:>12.1f}us" for x in row[2:]))


ORACLE_SNIPPET = """
import time
from twinwidth import families, oracle, kernels
oracle.exact_tww(families.cycle(5))
t = time.perf_counter()
w, _ = oracle.exact_tww(families.grid(4, 4), limit=16)
d = oracle.decide_tww_le(families.subdivided_clique(5), 2)
print(kernels.backend(), w, d.value, round(time.perf_counter() - t, 3))
"""


def oracle_table() -> None:
    for flag in ("0", "1"):
        env = dict(os.environ, TWINWIDTH_PURE_NUMPY=flag)
        out = subprocess.run([sys.executable, "-c", ORACLE_SNIPPET], env=env, capture_output=True, text=True)
        backend, w, d, secs = out.stdout.split()
        print(f"oracle with {backend:>5}: tww(grid 4x4) = {w}, subdivided K5 width <= 2: {d}, {secs}s")


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=200)
    args = ap.parse_args()
    print(f"default backend: {kernels.backend()}")
    kernel_table(args.repeat)
    oracle_table()


if __name__ == "__main__":
    main()
