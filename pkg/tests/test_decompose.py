import random

import pytest

from topann.decompose import (
    MonomialPrime,
    associated_primes,
    ideal_of_prime,
    irreducible_decomposition,
    krull_dim_height,
    minimal_primes,
    primary_decomposition,
)
from topann.errors import UndefinedOperation
from topann.monomials import (
    contains_ideal,
    ideal_from_exps,
    intersect_all,
    radical,
    unit_ideal,
    zero_ideal,
)
from topann.randgen import random_intersection_ideal, random_squarefree_ideal, ring_of

from conftest import same_members_up_to


def I(ring, *exps):
    return ideal_from_exps(ring, exps)


def primes(ring, sets):
    return {MonomialPrime(tuple(sorted(ring.var_index(v) for v in s))) for s in sets}


class TestIrreducible:
    def test_embedded_split(self, ring3):
        # (x^2, xy) = (x) ∩ (x^2, y); intersection verified by membership scan
        comps = irreducible_decomposition(I(ring3, (2, 0, 0), (1, 1, 0)))
        assert comps == [I(ring3, (1, 0, 0)), I(ring3, (2, 0, 0), (0, 1, 0))]
        inter = intersect_all(ring3, comps)
        assert same_members_up_to(inter, I(ring3, (2, 0, 0), (1, 1, 0)), 4)

    def test_prime_is_irreducible(self, ring3):
        p = I(ring3, (1, 0, 0), (0, 1, 0))
        assert irreducible_decomposition(p) == [p]

    def test_squarefree_split(self, ring3):
        comps = irreducible_decomposition(I(ring3, (1, 1, 0), (1, 0, 1)))
        assert comps == [I(ring3, (1, 0, 0)), I(ring3, (0, 1, 0), (0, 0, 1))]

    def test_rejects_unit_and_zero(self, ring3):
        with pytest.raises(UndefinedOperation):
            irreducible_decomposition(unit_ideal(ring3))
        with pytest.raises(UndefinedOperation):
            irreducible_decomposition(zero_ideal(ring3))


class TestPrimary:
    def test_grouping(self, ring3):
        decomp = primary_decomposition(I(ring3, (2, 0, 0), (1, 1, 0)))
        got = {
            (c.component, c.rad_prime) for c in decomp.components
        }
        assert got == {
            (I(ring3, (1, 0, 0)), MonomialPrime((0,))),
            (I(ring3, (2, 0, 0), (0, 1, 0)), MonomialPrime((0, 1))),
        }

    def test_squarefree_components_are_prime(self, ring3):
        decomp = primary_decomposition(I(ring3, (1, 1, 0), (1, 0, 1)))
        for c in decomp.components:
            assert c.component == ideal_of_prime(ring3, c.rad_prime)

    def test_already_primary(self, ring3):
        decomp = primary_decomposition(I(ring3, (2, 0, 0), (0, 1, 0)))
        assert len(decomp.components) == 1
        assert decomp.components[0].rad_prime == MonomialPrime((0, 1))


class TestAssociatedPrimes:
    def test_embedded(self, ring3):
        ass, mass, assh = associated_primes(I(ring3, (2, 0, 0), (1, 1, 0)))
        assert ass == primes(ring3, [("x",), ("x", "y")])
        assert mass == primes(ring3, [("x",)])
        assert assh == primes(ring3, [("x",)])

    def test_two_minimal(self, ring3):
        ass, mass, assh = associated_primes(I(ring3, (1, 1, 0), (1, 0, 1)))
        assert ass == mass == primes(ring3, [("x",), ("y", "z")])
        assert assh == primes(ring3, [("x",)])

    def test_zero_ideal_domain(self, ring3):
        ass, mass, assh = associated_primes(zero_ideal(ring3))
        assert ass == mass == assh == {MonomialPrime(())}


class TestKrullDim:
    def test_mixed(self, ring3):
        assert krull_dim_height(I(ring3, (1, 1, 0), (1, 0, 1))) == (2, 1)

    def test_maximal(self, ring3):
        assert krull_dim_height(ring3.maximal_ideal()) == (0, 3)

    def test_zero(self, ring3):
        assert krull_dim_height(zero_ideal(ring3)) == (3, 0)

    def test_unit_errors(self, ring3):
        with pytest.raises(UndefinedOperation):
            krull_dim_height(unit_ideal(ring3))


def test_random_decompositions_reconstruct_and_are_irredundant():
    rng = random.Random(42)
    for k in range(25):
        ring = ring_of(rng.randint(3, 5))
        ideal = (
            random_intersection_ideal(rng, ring)
            if k % 2
            else random_squarefree_ideal(rng, ring, 2, 6)
        )
        decomp = primary_decomposition(ideal)
        comps = [c.component for c in decomp.components]
        assert intersect_all(ring, comps) == ideal
        for j in range(len(comps)):
            rest = comps[:j] + comps[j + 1:]
            assert intersect_all(ring, rest) != ideal or not rest
        # each component only involves its prime's variables and has it
        # as radical
        for c in decomp.components:
            assert radical(c.component) == ideal_of_prime(ring, c.rad_prime)
        # every associated prime contains the radical's minimal primes story
        ass, mass, _ = associated_primes(ideal)
        assert mass == set(minimal_primes(radical(ideal)))
        for p in ass:
            assert contains_ideal(ideal_of_prime(ring, p), radical(ideal))


def test_dim_agrees_with_minimal_prime_complements():
    rng = random.Random(5)
    for _ in range(15):
        ring = ring_of(rng.randint(3, 6))
        ideal = random_squarefree_ideal(rng, ring, 2, 7)
        dim, height = krull_dim_height(ideal)
        mass = minimal_primes(ideal)
        assert height == min(p.height for p in mass)
        assert dim == max(ring.n - p.height for p in mass)
