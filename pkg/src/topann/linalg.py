"""Exact matrix rank over Q and over F_p.

Char 0 uses fraction-free (Bareiss) elimination: an int64 fast path with an
overflow guard, falling back to arbitrary-precision integers when minors
grow past the guard, so the result is always exact. Char p uses modular
row reduction.

The fast path runs on one of two interchangeable kernel backends: numba
(default when importable) or pure numpy. Select explicitly with the
environment variable ``TOPANN_BACKEND=numba|numpy`` before first import.
"""

from __future__ import annotations

import os

import numpy as np

from .errors import LimitExceeded, UndefinedOperation
from .monomials import is_prime

_MAX_CHAR = 2**31  # keeps modular products inside int64


def _select_backend():
    choice = os.environ.get("TOPANN_BACKEND", "auto").lower()
    if choice not in ("auto", "numba", "numpy"):
        raise UndefinedOperation(f"unknown TOPANN_BACKEND {choice!r}")
    if choice != "numpy":
        try:
            from . import _kernels_numba as kernels
            return kernels, "numba"
        except ImportError:
            if choice == "numba":
                raise
    from . import _kernels_numpy as kernels
    return kernels, "numpy"


_kernels, _backend_name = _select_backend()


def backend_name() -> str:
    """Name of the active kernel backend ('numba' or 'numpy')."""
    return _backend_name


def rank_exact_bigint(rows: list[list[int]]) -> int:
    """Bareiss elimination over Python integers; exact for any input size."""
    rows = [[int(x) for x in r] for r in rows]
    m = len(rows)
    n = len(rows[0]) if m else 0
    rank = 0
    prev = 1
    for col in range(n):
        if rank == m:
            break
        piv = next((r for r in range(rank, m) if rows[r][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        p = rows[rank][col]
        pivrow = rows[rank]
        for r in range(rank + 1, m):
            f = rows[r][col]
            row = rows[r]
            for j in range(col, n):
                row[j] = (row[j] * p - f * pivrow[j]) // prev
        prev = p
        rank += 1
    return rank


def _validate_char(char: int) -> None:
    if char == 0:
        return
    if not is_prime(char):
        raise UndefinedOperation(f"field characteristic must be 0 or prime, got {char}")
    if char >= _MAX_CHAR:
        raise LimitExceeded(f"characteristic {char} exceeds the modular kernel limit")


def rank(mat: np.ndarray, char: int) -> int:
    """Exact rank of an integer matrix over Q (char 0) or F_char."""
    _validate_char(char)
    a = np.ascontiguousarray(mat, dtype=np.int64)
    if a.ndim != 2:
        raise UndefinedOperation("rank expects a 2-d matrix")
    if a.shape[0] == 0 or a.shape[1] == 0:
        return 0
    if char == 0:
        r = int(_kernels.rank_int64_guarded(a.copy()))
        if r >= 0:
            return r
        return rank_exact_bigint(np.asarray(mat).tolist())
    return int(_kernels.rank_mod_p(a.copy(), char))
