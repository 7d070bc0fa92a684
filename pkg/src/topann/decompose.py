"""Irreducible and primary decomposition of monomial ideals.

Primary decompositions of monomial ideals are not unique once embedded
primes appear; this module fixes the canonical one obtained by grouping
the (unique) irredundant irreducible decomposition by radical, so results
are reproducible across runs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import UndefinedOperation
from .monomials import (
    Monomial,
    MonomialIdeal,
    RingSpec,
    contains_ideal,
    intersect,
    intersect_all,
    minimal_generators,
    radical,
)


@dataclass(frozen=True)
class MonomialPrime:
    """A monomial prime, i.e. the ideal of a subset of the variables.

    The empty subset is the zero prime (0) of the ambient domain.
    Indices are kept sorted so equality and hashing are structural.
    """

    indices: tuple[int, ...]

    def __post_init__(self):
        if tuple(sorted(set(self.indices))) != self.indices:
            raise UndefinedOperation("prime variable indices must be sorted and distinct")

    @staticmethod
    def of(*indices: int) -> "MonomialPrime":
        return MonomialPrime(tuple(sorted(set(indices))))

    @staticmethod
    def from_mask(mask: int) -> "MonomialPrime":
        return MonomialPrime(tuple(i for i in range(mask.bit_length()) if mask >> i & 1))

    @property
    def mask(self) -> int:
        m = 0
        for i in self.indices:
            m |= 1 << i
        return m

    @property
    def height(self) -> int:
        return len(self.indices)

    @property
    def is_zero(self) -> bool:
        return not self.indices

    def dim_in(self, ring: RingSpec) -> int:
        return ring.n - self.height

    def contains_var_subset(self, other: "MonomialPrime") -> bool:
        return set(other.indices) <= set(self.indices)

    def sort_key(self) -> tuple:
        return (self.height, self.indices)

    def names(self, ring: RingSpec) -> list[str]:
        return [ring.vars[i] for i in self.indices]


def ideal_of_prime(ring: RingSpec, p: MonomialPrime) -> MonomialIdeal:
    """The monomial ideal generated by the prime's variables (zero prime -> 0)."""
    return minimal_generators(ring, [ring.variable(i) for i in p.indices])


@dataclass(frozen=True)
class PrimaryComponent:
    component: MonomialIdeal
    rad_prime: MonomialPrime


@dataclass(frozen=True)
class Decomposition:
    components: tuple[PrimaryComponent, ...]

    @property
    def primes(self) -> tuple[MonomialPrime, ...]:
        return tuple(c.rad_prime for c in self.components)


def _ideal_key(J: MonomialIdeal) -> tuple:
    return tuple(g.sort_key() for g in J.gens)


def irreducible_decomposition(I: MonomialIdeal) -> list[MonomialIdeal]:
    """Unique irredundant set of irreducible monomial ideals intersecting to I.

    Works by generator splitting: a generator u = v*w with coprime non-unit
    v, w satisfies I = (I + v) ∩ (I + w); recursing until every generator is
    a pure variable power yields irreducible ideals, which are then pruned
    to the irredundant set.
    """
    if I.is_unit or I.is_zero:
        raise UndefinedOperation("decomposition is undefined for the unit and zero ideals")
    ring = I.ring
    leaves: set[MonomialIdeal] = set()
    visited: set[MonomialIdeal] = set()
    stack = [I]
    while stack:
        J = stack.pop()
        if J in visited:
            continue
        visited.add(J)
        split_gen = next((g for g in J.gens if bin(g.support).count("1") >= 2), None)
        if split_gen is None:
            leaves.add(J)
            continue
        j = min(i for i, e in enumerate(split_gen.exps) if e > 0)
        v_exps = [0] * ring.n
        v_exps[j] = split_gen.exps[j]
        w_exps = list(split_gen.exps)
        w_exps[j] = 0
        for part in (Monomial(tuple(v_exps)), Monomial(tuple(w_exps))):
            stack.append(minimal_generators(ring, J.gens + (part,)))

    comps = sorted(leaves, key=_ideal_key)
    # Greedy irredundancy pruning in canonical order; the irredundant
    # irreducible decomposition is unique, so the result is order-free.
    changed = True
    while changed:
        changed = False
        for i in range(len(comps)):
            others = comps[:i] + comps[i + 1:]
            if not others:
                break
            if contains_ideal(comps[i], intersect_all(ring, others)):
                del comps[i]
                changed = True
                break
    return comps


def _radical_prime_of_irreducible(J: MonomialIdeal) -> MonomialPrime:
    mask = 0
    for g in J.gens:
        mask |= g.support
    return MonomialPrime.from_mask(mask)


def primary_decomposition(I: MonomialIdeal) -> Decomposition:
    """Canonical reduced primary decomposition of a proper nonzero ideal."""
    irr = irreducible_decomposition(I)
    groups: dict[MonomialPrime, list[MonomialIdeal]] = {}
    for J in irr:
        groups.setdefault(_radical_prime_of_irreducible(J), []).append(J)
    comps = [
        PrimaryComponent(intersect_all(I.ring, members), p)
        for p, members in groups.items()
    ]
    comps.sort(key=lambda c: c.rad_prime.sort_key())
    return Decomposition(tuple(comps))


def zero_prime_decomposition(I: MonomialIdeal) -> Decomposition:
    """Reduced decomposition of the zero submodule of R/I; for I = 0 over the
    ambient domain this is the single component (0) at the zero prime."""
    if I.is_zero:
        zp = MonomialPrime(())
        return Decomposition((PrimaryComponent(I, zp),))
    return primary_decomposition(I)


def minimal_primes(I: MonomialIdeal) -> list[MonomialPrime]:
    """Minimal primes over I, in canonical order; {0} for the zero ideal."""
    if I.is_unit:
        raise UndefinedOperation("the unit ideal has no minimal primes")
    if I.is_zero:
        return [MonomialPrime(())]
    # The radical is the intersection of its minimal primes and that
    # decomposition has no embedded components.
    return sorted(primary_decomposition(radical(I)).primes, key=MonomialPrime.sort_key)


def associated_primes(
    I: MonomialIdeal,
) -> tuple[set[MonomialPrime], set[MonomialPrime], set[MonomialPrime]]:
    """(ass, mass, assh) of R/I: all radical primes of the canonical reduced
    decomposition, the inclusion-minimal ones, and those attaining dim R/I."""
    if I.is_unit:
        raise UndefinedOperation("associated primes are undefined for the unit ideal")
    if I.is_zero:
        zp = {MonomialPrime(())}
        return zp, set(zp), set(zp)
    ass = set(primary_decomposition(I).primes)
    mass = {
        p for p in ass
        if not any(q != p and p.contains_var_subset(q) for q in ass)
    }
    dim = I.ring.n - min(p.height for p in mass)
    assh = {p for p in mass if p.dim_in(I.ring) == dim}
    return ass, mass, assh


def krull_dim_height(I: MonomialIdeal) -> tuple[int, int]:
    """(dim R/I, height I); the zero ideal has dim n and height 0."""
    if I.is_unit:
        raise UndefinedOperation("dimension is undefined for the unit ideal")
    if I.is_zero:
        return I.ring.n, 0
    height = min(p.height for p in minimal_primes(I))
    return I.ring.n - height, height
