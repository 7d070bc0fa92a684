"""Pure-numpy rank kernels: the fallback backend.

Same contracts as the numba twins in ``_kernels_numba``:

* ``rank_mod_p(a, p)`` — GF(p) rank by row reduction; destroys ``a``.
* ``rank_int64_guarded(a)`` — rank over Q by fraction-free (Bareiss)
  elimination on int64; destroys ``a``; returns -1 when intermediate
  minors could overflow, in which case the caller must redo the
  computation with arbitrary-precision integers.

Both expect C-contiguous int64 matrices with at least one row and column.
"""

import numpy as np

# Bareiss updates compute x*p - y*q with |x|,|y|,|p|,|q| bounded by the
# guard, so 2*GUARD^2 must stay below 2^63.
GUARD = np.int64(1) << 30


def rank_mod_p(a: np.ndarray, p: int) -> int:
    m, n = a.shape
    a %= p
    rank = 0
    for col in range(n):
        if rank == m:
            break
        nz = np.nonzero(a[rank:, col])[0]
        if nz.size == 0:
            continue
        piv = rank + int(nz[0])
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        inv = pow(int(a[rank, col]), p - 2, p)
        a[rank, col:] = a[rank, col:] * inv % p
        coeffs = a[rank + 1:, col]
        hit = np.nonzero(coeffs)[0]
        if hit.size:
            block = a[rank + 1:, col:]
            block[hit] = (block[hit] - np.outer(coeffs[hit], a[rank, col:])) % p
        rank += 1
    return rank


def rank_int64_guarded(a: np.ndarray) -> int:
    m, n = a.shape
    rank = 0
    prev = 1
    for col in range(n):
        if rank == m:
            break
        nz = np.nonzero(a[rank:, col])[0]
        if nz.size == 0:
            continue
        piv = rank + int(nz[0])
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        if np.abs(a[rank:, col:]).max() > GUARD:
            return -1
        p = int(a[rank, col])
        below = a[rank + 1:, col:]
        if below.shape[0]:
            below[...] = (below * p - np.outer(a[rank + 1:, col], a[rank, col:])) // prev
        prev = p
        rank += 1
    return rank
