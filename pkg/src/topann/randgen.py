"""Seeded random instance generators for the verification harness.

All generators draw from a caller-supplied ``random.Random`` so runs are
reproducible; none of them touch global RNG state.
"""

from __future__ import annotations

import random

from .monomials import (
    Monomial,
    MonomialIdeal,
    RingSpec,
    intersect,
    minimal_generators,
)

VAR_NAMES = ("x", "y", "z", "u", "v", "w", "s", "t")


def ring_of(n: int, char: int = 0) -> RingSpec:
    if n <= len(VAR_NAMES):
        return RingSpec(VAR_NAMES[:n], char)
    return RingSpec(tuple(f"x{i}" for i in range(1, n + 1)), char)


def _monomial_from_mask(n: int, mask: int) -> Monomial:
    return Monomial(tuple(1 if mask >> i & 1 else 0 for i in range(n)))


def random_squarefree_ideal(
    rng: random.Random,
    ring: RingSpec,
    min_gens: int = 2,
    max_gens: int = 8,
) -> MonomialIdeal:
    """Each squarefree monomial of degree 2..n-1 enters independently with a
    resampled probability until the minimal generator count lands in range."""
    n = ring.n
    candidates = [
        m for m in range(1 << n) if 2 <= bin(m).count("1") <= max(n - 1, 2)
    ]
    # Small rings cannot reach the requested generator count.
    min_gens = max(1, min(min_gens, len(candidates) // 2 + 1))
    while True:
        prob = rng.uniform(0.08, 0.35)
        picked = [m for m in candidates if rng.random() < prob]
        ideal = minimal_generators(ring, [_monomial_from_mask(n, m) for m in picked])
        if min_gens <= len(ideal.gens) <= max_gens:
            return ideal


def random_irreducible_ideal(
    rng: random.Random, ring: RingSpec, max_exp: int = 3
) -> MonomialIdeal:
    """Pure variable powers on a random nonempty variable subset."""
    n = ring.n
    k = rng.randint(1, n)
    gens = []
    for i in rng.sample(range(n), k):
        exps = [0] * n
        exps[i] = rng.randint(1, max_exp)
        gens.append(Monomial(tuple(exps)))
    return minimal_generators(ring, gens)


def random_intersection_ideal(
    rng: random.Random, ring: RingSpec, max_parts: int = 3, max_exp: int = 3
) -> MonomialIdeal:
    """Intersection of a few irreducible ideals: proper, nonzero, and in
    general not squarefree."""
    parts = rng.randint(1, max_parts)
    ideal = random_irreducible_ideal(rng, ring, max_exp)
    for _ in range(parts - 1):
        ideal = intersect(ideal, random_irreducible_ideal(rng, ring, max_exp))
    return ideal


def random_mprimary_ideal(
    rng: random.Random, ring: RingSpec, max_exp: int = 3
) -> MonomialIdeal:
    """Contains a power of every variable, so its radical is maximal."""
    n = ring.n
    gens = []
    for i in range(n):
        exps = [0] * n
        exps[i] = rng.randint(1, max_exp)
        gens.append(Monomial(tuple(exps)))
    for _ in range(rng.randint(0, 2)):
        gens.append(Monomial(tuple(rng.randint(0, max_exp - 1) for _ in range(n))))
    return minimal_generators(ring, gens)


def random_onedim_ideal(rng: random.Random, ring: RingSpec) -> MonomialIdeal:
    """Squarefree with dim R/a = 1: an intersection of primes generated by
    all-but-one of the variables."""
    n = ring.n
    lines = rng.sample(range(n), rng.randint(1, min(3, n)))
    ideal = None
    for keep in lines:
        exps_list = []
        for i in range(n):
            if i == keep:
                continue
            exps = [0] * n
            exps[i] = 1
            exps_list.append(Monomial(tuple(exps)))
        prime = minimal_generators(ring, exps_list)
        ideal = prime if ideal is None else intersect(ideal, prime)
    return ideal


def random_monomial(rng: random.Random, ring: RingSpec, max_exp: int = 2) -> Monomial:
    return Monomial(tuple(rng.randint(0, max_exp) for _ in range(ring.n)))
