"""Stanley-Reisner correspondence and exact reduced simplicial homology.

Faces are variable-index bitsets. Two boundary conventions matter here and
are fixed once: the void complex (no faces at all) has zero homology in
every degree, while the irrelevant complex {∅} has H~_{-1} = k. These make
the multigraded Betti computation in ``cohdim`` correct at the edge cases.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import LimitExceeded, SquarefreeRequired, UndefinedOperation
from .linalg import rank
from .monomials import Monomial, MonomialIdeal, RingSpec, minimal_generators

DEFAULT_MAX_VERTICES = 16


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _subsets_of(mask: int):
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def _maximal(masks) -> tuple[int, ...]:
    """Inclusion-maximal bitmasks, canonically sorted."""
    by_size = sorted(set(masks), key=lambda f: -_popcount(f))
    kept: list[int] = []
    for f in by_size:
        if not any(f & g == f for g in kept):
            kept.append(f)
    kept.sort(key=lambda f: (_popcount(f), f))
    return tuple(kept)


@dataclass(frozen=True)
class SimplicialComplex:
    """Abstract simplicial complex given by its facets (maximal faces).

    ``facets == ()`` is the void complex (no faces, not even ∅);
    ``facets == (0,)`` is the irrelevant complex whose only face is ∅.
    """

    vertices: int
    facets: tuple[int, ...]

    def __post_init__(self):
        if any(f & ~self.vertices for f in self.facets):
            raise UndefinedOperation("facet uses a vertex outside the ground set")
        if self.facets != _maximal(self.facets):
            raise UndefinedOperation("facets must be inclusion-incomparable and sorted")

    @property
    def is_void(self) -> bool:
        return not self.facets

    def faces(self) -> set[int]:
        out: set[int] = set()
        for f in self.facets:
            out.update(_subsets_of(f))
        return out

    def dim(self) -> int:
        """Dimension: -1 for {∅}; conventionally -2 for the void complex."""
        if self.is_void:
            return -2
        return max(_popcount(f) for f in self.facets) - 1


def complex_from_facets(vertices: int, faces) -> SimplicialComplex:
    return SimplicialComplex(vertices, _maximal(faces))


def full_simplex(vertices: int) -> SimplicialComplex:
    return SimplicialComplex(vertices, (vertices,))


def restrict(K: SimplicialComplex, sigma: int) -> SimplicialComplex:
    """The subcomplex of faces contained in the vertex subset sigma."""
    if K.is_void:
        return SimplicialComplex(K.vertices & sigma, ())
    return complex_from_facets(K.vertices & sigma, [f & sigma for f in K.facets])


def sr_complex(I: MonomialIdeal, max_vertices: int = DEFAULT_MAX_VERTICES) -> SimplicialComplex:
    """Stanley-Reisner complex: faces are the squarefree monomials not in I."""
    if not I.is_squarefree:
        raise SquarefreeRequired("Stanley-Reisner complex needs a squarefree ideal")
    if I.is_unit:
        raise UndefinedOperation("Stanley-Reisner complex needs a proper ideal")
    n = I.ring.n
    if n > max_vertices:
        raise LimitExceeded(f"{n} variables exceeds the face-enumeration limit {max_vertices}")
    gen_masks = [g.support for g in I.gens]
    full = (1 << n) - 1
    faces = [
        s for s in range(full + 1)
        if not any(gm & s == gm for gm in gen_masks)
    ]
    return complex_from_facets(full, faces)


def sr_ideal(K: SimplicialComplex, ring: RingSpec) -> MonomialIdeal:
    """Inverse map: the squarefree ideal of minimal non-faces of K."""
    if ring.n > DEFAULT_MAX_VERTICES:
        raise LimitExceeded("too many variables for non-face enumeration")
    faces = K.faces()
    full = (1 << ring.n) - 1
    gens = []
    for s in range(full + 1):
        if s in faces:
            continue
        below = [s & ~(1 << i) for i in range(ring.n) if s >> i & 1]
        if all(b in faces for b in below):
            exps = tuple(1 if s >> i & 1 else 0 for i in range(ring.n))
            gens.append(Monomial(exps))
    return minimal_generators(ring, gens)


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced homology dimensions; degrees with dimension 0 are omitted."""

    dims: tuple[tuple[int, int], ...]

    def betti(self, i: int) -> int:
        for deg, d in self.dims:
            if deg == i:
                return d
        return 0

    @property
    def total(self) -> int:
        return sum(d for _, d in self.dims)

    def as_dict(self) -> dict[int, int]:
        return dict(self.dims)


def _boundary_matrix(lower: list[int], upper: list[int]) -> np.ndarray:
    """Signed incidence matrix from dimension-i faces (columns) down."""
    index = {f: r for r, f in enumerate(lower)}
    mat = np.zeros((len(lower), len(upper)), dtype=np.int64)
    for c, f in enumerate(upper):
        sign = 1
        rem = f
        while rem:
            v = rem & -rem
            mat[index[f & ~v], c] = sign
            sign = -sign
            rem &= rem - 1
    return mat


@lru_cache(maxsize=None)
def _homology_of_facets(facets: tuple[int, ...], char: int) -> tuple[tuple[int, int], ...]:
    if not facets:
        return ()
    faces: set[int] = set()
    for f in facets:
        faces.update(_subsets_of(f))
    top = max(_popcount(f) for f in faces) - 1
    by_dim: dict[int, list[int]] = {i: [] for i in range(-1, top + 1)}
    for f in faces:
        by_dim[_popcount(f) - 1].append(f)
    for fs in by_dim.values():
        fs.sort()
    # H~_i = dim C_i - rank ∂_i - rank ∂_{i+1}
    ranks: dict[int, int] = {}
    for i in range(0, top + 1):
        ranks[i] = rank(_boundary_matrix(by_dim[i - 1], by_dim[i]), char)
    out = []
    for i in range(-1, top + 1):
        h = len(by_dim[i]) - ranks.get(i, 0) - ranks.get(i + 1, 0)
        if h:
            out.append((i, h))
    return tuple(out)


def reduced_homology(K: SimplicialComplex, char: int) -> HomologyProfile:
    """Exact reduced homology dimensions of K over Q (char 0) or F_char."""
    from .monomials import is_prime

    if char != 0 and not is_prime(char):
        raise UndefinedOperation(f"field characteristic must be 0 or prime, got {char}")
    return HomologyProfile(_homology_of_facets(K.facets, char))


def face_counts(K: SimplicialComplex) -> dict[int, int]:
    """f-vector including the empty face at dimension -1 (absent if void)."""
    counts: dict[int, int] = {}
    for f in K.faces():
        d = _popcount(f) - 1
        counts[d] = counts.get(d, 0) + 1
    return counts
