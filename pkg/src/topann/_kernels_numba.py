"""Numba-jitted rank kernels: the default backend for the hot loops.

Contracts match ``_kernels_numpy`` exactly; see that module's docstring.
Importing this module requires numba; ``linalg`` falls back to the numpy
twin when numba is unavailable or TOPANN_BACKEND=numpy is set.
"""

import numpy as np
from numba import njit

GUARD = 1 << 30


@njit(cache=True)
def _modpow(base, exp, p):
    result = 1
    base %= p
    while exp > 0:
        if exp & 1:
            result = result * base % p
        base = base * base % p
        exp >>= 1
    return result


@njit(cache=True)
def rank_mod_p(a: np.ndarray, p: int) -> int:
    m, n = a.shape
    for i in range(m):
        for j in range(n):
            a[i, j] %= p
    rank = 0
    for col in range(n):
        if rank == m:
            break
        piv = -1
        for r in range(rank, m):
            if a[r, col] != 0:
                piv = r
                break
        if piv < 0:
            continue
        if piv != rank:
            for j in range(col, n):
                t = a[rank, j]
                a[rank, j] = a[piv, j]
                a[piv, j] = t
        inv = _modpow(a[rank, col], p - 2, p)
        for j in range(col, n):
            a[rank, j] = a[rank, j] * inv % p
        for r in range(rank + 1, m):
            f = a[r, col]
            if f != 0:
                for j in range(col, n):
                    a[r, j] = (a[r, j] - f * a[rank, j]) % p
        rank += 1
    return rank


@njit(cache=True)
def rank_int64_guarded(a: np.ndarray) -> int:
    m, n = a.shape
    rank = 0
    prev = 1
    for col in range(n):
        if rank == m:
            break
        piv = -1
        for r in range(rank, m):
            if a[r, col] != 0:
                piv = r
                break
        if piv < 0:
            continue
        if piv != rank:
            for j in range(col, n):
                t = a[rank, j]
                a[rank, j] = a[piv, j]
                a[piv, j] = t
        mx = 0
        for r in range(rank, m):
            for j in range(col, n):
                v = a[r, j]
                if v < 0:
                    v = -v
                if v > mx:
                    mx = v
        if mx > GUARD:
            return -1
        p = a[rank, col]
        for r in range(rank + 1, m):
            f = a[r, col]
            for j in range(col, n):
                a[r, j] = (a[r, j] * p - f * a[rank, j]) // prev
        prev = p
        rank += 1
    return rank
