"""Cohomological dimension of monomial data, two independent ways.

The production route computes cd(a, R/I) through multigraded Betti numbers
of R/radical(a) (reduced homology of restricted Stanley-Reisner complexes),
reducing quotients to their minimal primes. The brute-force route builds
the graded pieces of the Cech complex on the generators of a over a box of
multidegrees and reads off nonvanishing cohomology by exact rank; it shares
nothing with the Betti route past the rank kernels feeding both, so the two
cross-validate each other. The radical criterion ``lhv_check`` decides
top-degree nonvanishing for prime quotients without either route.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

import numpy as np

from .decompose import MonomialPrime, ideal_of_prime, minimal_primes
from .errors import LimitExceeded, SquarefreeRequired, UndefinedOperation
from .linalg import rank
from .monomials import (
    Monomial,
    MonomialIdeal,
    RingSpec,
    ideal_sum,
    minimal_generators,
    radical,
    zero_ideal,
)
from .simplicial import reduced_homology, restrict, sr_complex

DEFAULT_MAX_VARS = 12
DEFAULT_MAX_GENERATORS = 12


@dataclass(frozen=True)
class CdValue:
    """Cohomological dimension: a natural number, or the no-support sentinel
    for the empty supremum (no local cohomology in any degree)."""

    value: int | None = None

    @property
    def is_no_support(self) -> bool:
        return self.value is None

    def __str__(self) -> str:
        return "no-support" if self.value is None else str(self.value)


NO_SUPPORT = CdValue(None)


def _char_of(obj: MonomialIdeal, char: int | None) -> int:
    return obj.ring.char if char is None else char


@dataclass(frozen=True)
class BettiTable:
    """Multigraded Betti numbers beta_{i,sigma} keyed by homological degree
    and squarefree multidegree (variable bitmask)."""

    ring: RingSpec
    char: int
    entries: tuple[tuple[int, int, int], ...]  # (i, sigma_mask, value)

    def value(self, i: int, sigma_mask: int) -> int:
        for j, s, v in self.entries:
            if j == i and s == sigma_mask:
                return v
        return 0

    def totals(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for i, _, v in self.entries:
            out[i] = out.get(i, 0) + v
        return out

    def proj_dim(self) -> int:
        return max(i for i, _, _ in self.entries)


def betti_table(
    I: MonomialIdeal,
    char: int | None = None,
    max_vars: int = DEFAULT_MAX_VARS,
) -> BettiTable:
    """Betti numbers of R/I for squarefree I, via reduced homology of the
    restrictions of its Stanley-Reisner complex to each vertex subset."""
    char = _char_of(I, char)
    if not I.is_squarefree:
        raise SquarefreeRequired("Betti numbers are computed for squarefree ideals only")
    if I.is_unit:
        raise UndefinedOperation("Betti table needs a proper ideal")
    n = I.ring.n
    if n > max_vars:
        raise LimitExceeded(f"{n} variables exceeds the configured limit {max_vars}")
    delta = sr_complex(I)
    entries = []
    for sigma in range(1 << n):
        size = bin(sigma).count("1")
        prof = reduced_homology(restrict(delta, sigma), char)
        for deg, d in prof.dims:
            entries.append((size - deg - 1, sigma, d))
    entries.sort()
    return BettiTable(I.ring, char, tuple(entries))


@lru_cache(maxsize=None)
def _proj_dim_cached(I: MonomialIdeal, char: int, max_vars: int) -> int:
    return betti_table(I, char, max_vars).proj_dim()


def proj_dim(
    I: MonomialIdeal,
    char: int | None = None,
    max_vars: int = DEFAULT_MAX_VARS,
) -> int:
    """Projective dimension: largest homological degree with a Betti number."""
    return _proj_dim_cached(I, _char_of(I, char), max_vars)


def cd_poly(
    a: MonomialIdeal,
    char: int | None = None,
    max_vars: int = DEFAULT_MAX_VARS,
) -> CdValue:
    """cd(a, R) over the ambient polynomial ring.

    The unit ideal has empty support, hence no cohomology in any degree;
    otherwise this is the projective dimension of R/radical(a).
    """
    if a.is_unit:
        return NO_SUPPORT
    return CdValue(proj_dim(radical(a), char, max_vars))


def cd_restricted(
    a: MonomialIdeal,
    p: MonomialPrime,
    char: int | None = None,
    max_vars: int = DEFAULT_MAX_VARS,
) -> CdValue:
    """cd(a, R/p): image a(R/p) inside the polynomial ring on the variables
    outside p, then cd over that ring. A zero image means a acts as zero on
    R/p, so only degree 0 survives."""
    char = _char_of(a, char)
    ring = a.ring
    if p.height == ring.n:
        # R/p is the coefficient field.
        return NO_SUPPORT if a.is_unit else CdValue(0)
    keep = [i for i in range(ring.n) if not (p.mask >> i & 1)]
    sub = RingSpec(tuple(ring.vars[i] for i in keep), ring.char)
    image_gens = [
        Monomial(tuple(g.exps[i] for i in keep))
        for g in a.gens
        if not (g.support & p.mask)
    ]
    return cd_poly(minimal_generators(sub, image_gens), char, max_vars)


def cd_quotient(
    a: MonomialIdeal,
    I: MonomialIdeal,
    char: int | None = None,
    max_vars: int = DEFAULT_MAX_VARS,
) -> CdValue:
    """cd(a, R/I), reduced to the maximum of cd(a, R/p) over the minimal
    primes p of I (cohomology with support depends only on Supp R/I)."""
    if I.is_unit:
        return NO_SUPPORT
    char = _char_of(a, char)
    vals = [cd_restricted(a, p, char, max_vars) for p in minimal_primes(I)]
    finite = [v.value for v in vals if v.value is not None]
    if not finite:
        return NO_SUPPORT
    return CdValue(max(finite))


def lhv_check(a: MonomialIdeal, p: MonomialPrime) -> bool:
    """Radical criterion for top nonvanishing on R/p: whether a + p is
    primary to the ideal of all variables."""
    if a.is_unit:
        raise UndefinedOperation("the radical criterion expects a proper ideal")
    ring = a.ring
    total = radical(ideal_sum(a, ideal_of_prime(ring, p)))
    return total == ring.maximal_ideal()


class GradedCechComplex:
    """Graded pieces of the Cech complex of M = R/I on the generators of a.

    For a multidegree d with no positive entries, the component of the
    complex at a generator subset sigma is one-dimensional exactly when the
    union F_sigma of the generators' supports is a face of the
    Stanley-Reisner complex of I and the negative support of d lies inside
    F_sigma; differentials are the signed subset incidences between flagged
    components. ``cohomology_dims`` evaluates one multidegree.
    """

    def __init__(
        self,
        a: MonomialIdeal,
        I: MonomialIdeal,
        char: int,
        max_generators: int = DEFAULT_MAX_GENERATORS,
    ):
        if not a.is_squarefree or not I.is_squarefree:
            raise SquarefreeRequired("the Cech oracle expects squarefree ideals")
        if I.is_unit:
            raise UndefinedOperation("M = R/I needs proper I")
        if a.ring != I.ring:
            raise UndefinedOperation("a and I must share a ring")
        r = len(a.gens)
        if r > max_generators:
            raise LimitExceeded(f"{r} generators exceeds the configured limit {max_generators}")
        self.ring = a.ring
        self.char = char
        self.generators = a.gens
        self.r = r

        faces = sr_complex(I).faces()
        supports = [g.support for g in a.gens]
        size = 1 << r
        F = np.zeros(size, dtype=np.int64)
        ok = np.zeros(size, dtype=bool)
        for sigma in range(size):
            m = 0
            rem = sigma
            while rem:
                m |= supports[(rem & -rem).bit_length() - 1]
                rem &= rem - 1
            F[sigma] = m
            ok[sigma] = m in faces
        self._union_support = F
        self._face_ok = ok

        # Position of each subset within its cardinality layer, plus the
        # static incidence pairs (sigma, sigma|{j}) with their signs.
        self._layer_of = np.array([bin(s).count("1") for s in range(size)], dtype=np.int64)
        self._pairs: list[tuple[np.ndarray, np.ndarray, np.ndarray]] = []
        by_layer: list[list[int]] = [[] for _ in range(r + 1)]
        for sigma in range(size):
            by_layer[int(self._layer_of[sigma])].append(sigma)
        self._pos_in_layer = np.zeros(size, dtype=np.int64)
        for layer in by_layer:
            for pos, sigma in enumerate(layer):
                self._pos_in_layer[sigma] = pos
        for i in range(r):
            src, dst, sgn = [], [], []
            for sigma in by_layer[i]:
                for j in range(r):
                    if sigma >> j & 1:
                        continue
                    src.append(sigma)
                    dst.append(sigma | (1 << j))
                    sgn.append(-1 if bin(sigma & ((1 << j) - 1)).count("1") & 1 else 1)
            self._pairs.append(
                (
                    np.array(src, dtype=np.int64),
                    np.array(dst, dtype=np.int64),
                    np.array(sgn, dtype=np.int64),
                )
            )
        self._layer_sigmas = [np.array(layer, dtype=np.int64) for layer in by_layer]

    def flags(self, neg_mask: int) -> np.ndarray:
        """0/1 flags per generator subset at any degree with the given
        negative support."""
        return self._face_ok & ((neg_mask & ~self._union_support) == 0)

    def differential(self, neg_mask: int, i: int) -> np.ndarray:
        """Dense matrix of the map from layer i to layer i+1 at this degree."""
        flags = self.flags(neg_mask)
        return self._matrix(flags, self._flag_positions(flags), i)

    def _flag_positions(self, flags: np.ndarray) -> np.ndarray:
        pos = np.zeros(1 << self.r, dtype=np.int64)
        for sigmas in self._layer_sigmas:
            f = flags[sigmas]
            pos[sigmas] = np.cumsum(f) - f
        return pos

    def _matrix(self, flags: np.ndarray, pos: np.ndarray, i: int) -> np.ndarray:
        src, dst, sgn = self._pairs[i]
        keep = flags[src] & flags[dst]
        n_lo = int(flags[self._layer_sigmas[i]].sum())
        n_hi = int(flags[self._layer_sigmas[i + 1]].sum())
        mat = np.zeros((n_hi, n_lo), dtype=np.int64)
        if keep.any():
            mat[pos[dst[keep]], pos[src[keep]]] = sgn[keep]
        return mat

    def cohomology_dims(self, neg_mask: int) -> list[int]:
        """Cohomology dimensions [H^0, ..., H^r] of the flagged complex at
        any degree with the given negative support."""
        flags = self.flags(neg_mask)
        counts = [int(flags[s].sum()) for s in self._layer_sigmas]
        pos = self._flag_positions(flags)
        ranks = [0] * (self.r + 1)
        for i in range(self.r):
            if counts[i] and counts[i + 1]:
                ranks[i] = rank(self._matrix(flags, pos, i), self.char)
        out = []
        for i in range(self.r + 1):
            below = ranks[i - 1] if i > 0 else 0
            out.append(counts[i] - ranks[i] - below)
        return out


def cech_cd_oracle(
    a: MonomialIdeal,
    I: MonomialIdeal | None = None,
    char: int | None = None,
    box_depth: int = 1,
    max_generators: int = DEFAULT_MAX_GENERATORS,
) -> CdValue:
    """Brute-force cd(a, R/I): scan every multidegree in {-box_depth..0}^n
    for nonvanishing Cech cohomology and return the largest degree found."""
    if I is None:
        I = zero_ideal(a.ring)
    if box_depth < 1:
        raise UndefinedOperation("box_depth must be at least 1")
    char = _char_of(a, char)
    n = a.ring.n
    if n > 16:
        raise LimitExceeded(f"{n} variables exceeds the oracle's degree-box limit")
    complex_ = GradedCechComplex(a, I, char, max_generators)
    best: int | None = None
    for d in product(range(-box_depth, 1), repeat=n):
        neg = 0
        for i, di in enumerate(d):
            if di < 0:
                neg |= 1 << i
        dims = complex_.cohomology_dims(neg)
        for i in range(complex_.r, -1, -1):
            if dims[i]:
                if best is None or i > best:
                    best = i
                break
    return NO_SUPPORT if best is None else CdValue(best)
