#!/usr/bin/env python3
"""Benchmark the numba rank kernels against the pure-numpy fallback.

Default mode times both backends on matrices harvested from real Cech
differentials and simplicial boundary maps. ``--full`` additionally runs the
cd-oracle cross-check end to end in a subprocess per backend (backend
selection happens at import time via TOPANN_BACKEND, hence the subprocess).
"""

import argparse
import os
import random
import subprocess
import sys
import time

import numpy as np

from topann import _kernels_numpy as knp
from topann.cohdim import GradedCechComplex
from topann.monomials import zero_ideal
from topann.randgen import random_squarefree_ideal, ring_of

try:
    from topann import _kernels_numba as knb
except ImportError:
    knb = None


def harvest_matrices(seed=1, ideals=12, max_vars=6, max_gens=8):
    """Differential matrices from random Cech complexes, as the kernels see
    them in production."""
    rng = random.Random(seed)
    mats = []
    while len(mats) < 400:
        ring = ring_of(rng.randint(4, max_vars))
        a = random_squarefree_ideal(rng, ring, 3, max_gens)
        cx = GradedCechComplex(a, zero_ideal(ring), 0)
        for neg in range(0, 1 << ring.n, 3):
            for i in range(cx.r):
                m = cx.differential(neg, i)
                if m.shape[0] >= 2 and m.shape[1] >= 2:
                    mats.append(np.ascontiguousarray(m))
        ideals -= 1
        if ideals <= 0:
            break
    return mats


def time_kernel(fn, mats, repeats=5):
    best = float("inf")
    for _ in range(repeats):
        copies = [m.copy() for m in mats]
        t0 = time.perf_counter()
        for c in copies:
            fn(c)
        best = min(best, time.perf_counter() - t0)
    return best


def bench_kernels():
    mats = harvest_matrices()
    sizes = sorted({m.shape for m in mats})
    print(f"{len(mats)} matrices, shapes {sizes[0]}..{sizes[-1]}")
    rows = [("backend", "rank/Q (Bareiss)", "rank/F2", "rank/F101")]
    if knb is not None:
        # trigger jit outside the timed region
        warm = np.eye(3, dtype=np.int64)
        knb.rank_int64_guarded(warm.copy())
        knb.rank_mod_p(warm.copy(), 2)
        rows.append(
            (
                "numba",
                f"{time_kernel(knb.rank_int64_guarded, mats):.4f}s",
                f"{time_kernel(lambda m: knb.rank_mod_p(m, 2), mats):.4f}s",
                f"{time_kernel(lambda m: knb.rank_mod_p(m, 101), mats):.4f}s",
            )
        )
    rows.append(
        (
            "numpy",
            f"{time_kernel(knp.rank_int64_guarded, mats):.4f}s",
            f"{time_kernel(lambda m: knp.rank_mod_p(m, 2), mats):.4f}s",
            f"{time_kernel(lambda m: knp.rank_mod_p(m, 101), mats):.4f}s",
        )
    )
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    for r in rows:
        print("  ".join(cell.ljust(w) for cell, w in zip(r, widths)))
    # agreement spot check
    for m in mats[:50]:
        assert knp.rank_int64_guarded(m.copy()) == (
            int(knb.rank_int64_guarded(m.copy())) if knb is not None else knp.rank_int64_guarded(m.copy())
        )
    print("backends agree on spot-checked ranks")


def bench_end_to_end():
    for backend in ("numba", "numpy"):
        env = dict(os.environ, TOPANN_BACKEND=backend)
        t0 = time.perf_counter()
        proc = subprocess.run(
            [sys.executable, __file__, "--inner"],
            env=env,
            capture_output=True,
            text=True,
        )
        wall = time.perf_counter() - t0
        print(f"{backend}: {proc.stdout.strip()} (wall {wall:.1f}s incl. startup)")
        if proc.returncode != 0:
            print(proc.stderr, file=sys.stderr)
            sys.exit(proc.returncode)


def inner():
    from topann.linalg import backend_name
    from topann.verify import check_cd_oracle

    t0 = time.perf_counter()
    result = check_cd_oracle(1, 40)
    took = time.perf_counter() - t0
    status = "ok" if result.failures == 0 else "FAILED"
    print(f"backend={backend_name()} cd-oracle x40: {took:.2f}s {status}")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--full", action="store_true", help="also run end-to-end per backend")
    ap.add_argument("--inner", action="store_true", help=argparse.SUPPRESS)
    args = ap.parse_args()
    if args.inner:
        inner()
        return
    bench_kernels()
    if args.full:
        bench_end_to_end()


if __name__ == "__main__":
    main()
