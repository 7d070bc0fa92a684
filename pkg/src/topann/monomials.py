"""Exact arithmetic of monomials and monomial ideals in a fixed polynomial ring.

Monomials are exponent vectors; ideals are divisibility-minimal generator
sets kept in a canonical graded-lexicographic order, so structural equality
is ideal equality. All values are immutable and all operations are pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Iterator

from .errors import LimitExceeded, RingMismatch, UndefinedOperation

# Exponents stay machine-width so downstream int64 kernels never wrap.
MAX_EXPONENT = 2**31 - 1


def is_prime(k: int) -> bool:
    """Trial-division primality, adequate for field characteristics."""
    if k < 2:
        return False
    if k < 4:
        return True
    if k % 2 == 0:
        return False
    f = 3
    while f * f <= k:
        if k % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class RingSpec:
    """A polynomial ring k[vars] over a field of the given characteristic."""

    vars: tuple[str, ...]
    char: int = 0

    def __post_init__(self):
        if len(self.vars) < 1:
            raise UndefinedOperation("ring needs at least one variable")
        if len(set(self.vars)) != len(self.vars) or any(not v for v in self.vars):
            raise UndefinedOperation("variable names must be unique and nonempty")
        if self.char != 0 and not is_prime(self.char):
            raise UndefinedOperation(f"characteristic must be 0 or prime, got {self.char}")

    @property
    def n(self) -> int:
        return len(self.vars)

    def var_index(self, name: str) -> int:
        try:
            return self.vars.index(name)
        except ValueError:
            raise KeyError(name) from None

    def variable(self, i: int) -> "Monomial":
        exps = [0] * self.n
        exps[i] = 1
        return Monomial(tuple(exps))

    def maximal_ideal(self) -> "MonomialIdeal":
        """The ideal generated by every variable."""
        return minimal_generators(self, [self.variable(i) for i in range(self.n)])


@dataclass(frozen=True)
class Monomial:
    """An exponent vector; the monomial 1 is the all-zero vector."""

    exps: tuple[int, ...]

    def __post_init__(self):
        if any(e < 0 for e in self.exps):
            raise UndefinedOperation("exponents must be nonnegative")
        if any(e > MAX_EXPONENT for e in self.exps):
            raise LimitExceeded("exponent exceeds machine width")

    @staticmethod
    def one(n: int) -> "Monomial":
        return Monomial((0,) * n)

    @property
    def degree(self) -> int:
        return sum(self.exps)

    @property
    def is_one(self) -> bool:
        return self.degree == 0

    @property
    def support(self) -> int:
        """Bitmask of variables appearing with positive exponent."""
        mask = 0
        for i, e in enumerate(self.exps):
            if e > 0:
                mask |= 1 << i
        return mask

    @property
    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exps)

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def lcm(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(max(a, b) for a, b in zip(self.exps, other.exps)))

    def mul(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(a + b for a, b in zip(self.exps, other.exps)))

    def colon_by(self, other: "Monomial") -> "Monomial":
        """self / gcd(self, other), the generator of (self : other)."""
        return Monomial(tuple(max(a - b, 0) for a, b in zip(self.exps, other.exps)))

    def squarefree_part(self) -> "Monomial":
        return Monomial(tuple(min(e, 1) for e in self.exps))

    def sort_key(self) -> tuple:
        # Degree first, then graded-lex-descending so x precedes y within
        # a degree; keeps printed generator lists in the familiar order.
        return (self.degree, tuple(-e for e in self.exps))


@dataclass(frozen=True)
class MonomialIdeal:
    """Canonical form: minimal generators sorted graded-lexicographically.

    The zero ideal has no generators; the unit ideal's sole generator is 1.
    Build instances through :func:`minimal_generators` so canonicality (and
    hence ``==`` as ideal equality) is guaranteed.
    """

    ring: RingSpec
    gens: tuple[Monomial, ...]

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and self.gens[0].is_one

    @property
    def is_proper(self) -> bool:
        return not self.is_unit

    @property
    def is_squarefree(self) -> bool:
        return all(g.is_squarefree for g in self.gens)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.gens)


def zero_ideal(ring: RingSpec) -> MonomialIdeal:
    return MonomialIdeal(ring, ())


def unit_ideal(ring: RingSpec) -> MonomialIdeal:
    return MonomialIdeal(ring, (Monomial.one(ring.n),))


def _check_lengths(ring: RingSpec, gens: Iterable[Monomial]) -> None:
    for g in gens:
        if len(g.exps) != ring.n:
            raise RingMismatch(
                f"exponent vector of length {len(g.exps)} in a ring with {ring.n} variables"
            )


def _same_ring(I: MonomialIdeal, J: MonomialIdeal) -> None:
    if I.ring != J.ring:
        raise RingMismatch("operands live in different rings")


def minimal_generators(ring: RingSpec, gens: Iterable[Monomial]) -> MonomialIdeal:
    """Divisibility-minimal generating set in canonical graded-lex order."""
    gens = list(set(gens))
    _check_lengths(ring, gens)
    gens.sort(key=Monomial.sort_key)
    kept: list[Monomial] = []
    for g in gens:
        if not any(h.divides(g) for h in kept):
            kept.append(g)
    return MonomialIdeal(ring, tuple(kept))


def ideal_from_exps(ring: RingSpec, exps: Iterable[tuple[int, ...]]) -> MonomialIdeal:
    """Convenience constructor from raw exponent tuples."""
    return minimal_generators(ring, [Monomial(tuple(e)) for e in exps])


def contains(I: MonomialIdeal, u: Monomial) -> bool:
    """Membership: some generator divides u."""
    if len(u.exps) != I.ring.n:
        raise RingMismatch("monomial has wrong number of exponents for this ring")
    return any(g.divides(u) for g in I.gens)


def contains_ideal(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    """Whether J is a subset of I (every generator of J lies in I)."""
    _same_ring(I, J)
    return all(contains(I, g) for g in J.gens)


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """Intersection, generated by pairwise lcms of the generators."""
    _same_ring(I, J)
    return minimal_generators(I.ring, [u.lcm(v) for u in I.gens for v in J.gens])


def intersect_all(ring: RingSpec, ideals: Iterable[MonomialIdeal]) -> MonomialIdeal:
    """Intersection of a family; the empty intersection is the unit ideal."""
    return reduce(intersect, ideals, unit_ideal(ring))


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, J)
    return minimal_generators(I.ring, I.gens + J.gens)


def multiply(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, J)
    return minimal_generators(I.ring, [u.mul(v) for u in I.gens for v in J.gens])


def product_all(ring: RingSpec, ideals: Iterable[MonomialIdeal]) -> MonomialIdeal:
    """Product of a family; the empty product is the unit ideal."""
    return reduce(multiply, ideals, unit_ideal(ring))


def colon(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """The quotient (I : J), intersected over the generators of J."""
    _same_ring(I, J)
    if J.is_zero:
        raise UndefinedOperation("colon by the zero ideal is undefined")
    per_gen = (
        minimal_generators(I.ring, [u.colon_by(v) for u in I.gens]) for v in J.gens
    )
    return intersect_all(I.ring, per_gen)


def colon_monomial(I: MonomialIdeal, v: Monomial) -> MonomialIdeal:
    """(I : v) for a single monomial v."""
    return colon(I, minimal_generators(I.ring, [v]))


def saturate(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """The saturation (I : J^infinity), the fixed point of repeated colon."""
    if J.is_zero:
        raise UndefinedOperation("saturation by the zero ideal is undefined")
    cur = I
    while True:
        nxt = colon(cur, J)
        if nxt == cur:
            return cur
        cur = nxt


def radical(I: MonomialIdeal) -> MonomialIdeal:
    """Generated by the squarefree parts of the generators."""
    return minimal_generators(I.ring, [g.squarefree_part() for g in I.gens])


def format_monomial(ring: RingSpec, m: Monomial) -> str:
    """Canonical text form: '1' or '*'-separated var^k factors."""
    if m.is_one:
        return "1"
    parts = []
    for name, e in zip(ring.vars, m.exps):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_ideal(I: MonomialIdeal) -> list[str]:
    """Sorted generator strings (canonical order is already sorted)."""
    return [format_monomial(I.ring, g) for g in I.gens]
