import random

import pytest

from topann.cohdim import (
    GradedCechComplex,
    betti_table,
    cd_poly,
    cd_quotient,
    cd_restricted,
    cech_cd_oracle,
    lhv_check,
    proj_dim,
)
from topann.decompose import MonomialPrime
from topann.errors import LimitExceeded, SquarefreeRequired
from topann.monomials import (
    RingSpec,
    ideal_from_exps,
    intersect,
    radical,
    unit_ideal,
    zero_ideal,
)
from topann.randgen import random_squarefree_ideal, ring_of

from test_simplicial import rp2_complex


def I(ring, *exps):
    return ideal_from_exps(ring, exps)


def rp2_ideal():
    from topann.simplicial import sr_ideal

    return sr_ideal(rp2_complex(), RingSpec(tuple("abcdef")))


class TestBetti:
    def test_koszul_totals(self, ring3):
        table = betti_table(ring3.maximal_ideal())
        assert table.totals() == {0: 1, 1: 3, 2: 3, 3: 1}

    def test_codim_one_pair(self, ring3):
        # resolution 0 -> R -> R^2 -> R -> R/(xy,xz) -> 0
        table = betti_table(I(ring3, (1, 1, 0), (1, 0, 1)))
        assert table.totals() == {0: 1, 1: 2, 2: 1}
        assert table.proj_dim() == 2

    def test_principal(self, ring3):
        assert betti_table(I(ring3, (1, 0, 0))).totals() == {0: 1, 1: 1}

    def test_requires_squarefree(self, ring3):
        with pytest.raises(SquarefreeRequired):
            betti_table(I(ring3, (2, 0, 0)))

    def test_size_limit(self, ring3):
        with pytest.raises(LimitExceeded):
            betti_table(I(ring3, (1, 0, 0)), max_vars=2)


class TestProjDim:
    def test_koszul(self, ring3):
        assert proj_dim(ring3.maximal_ideal()) == 3

    def test_codim_one_pair(self, ring3):
        assert proj_dim(I(ring3, (1, 1, 0), (1, 0, 1))) == 2

    def test_rp2_depends_on_characteristic(self):
        ideal = rp2_ideal()
        assert proj_dim(ideal, 0) == 3
        assert proj_dim(ideal, 2) == 4


class TestCdPoly:
    def test_maximal_ideal(self, ring3):
        assert cd_poly(ring3.maximal_ideal()).value == 3

    def test_codim_one_pair(self, ring3):
        assert cd_poly(I(ring3, (1, 1, 0), (1, 0, 1))).value == 2

    def test_radical_insensitive(self, ring3):
        assert cd_poly(I(ring3, (2, 0, 0))).value == 1
        assert cd_poly(I(ring3, (2, 0, 0))) == cd_poly(I(ring3, (1, 0, 0)))

    def test_zero_ideal(self, ring3):
        assert cd_poly(zero_ideal(ring3)).value == 0

    def test_unit_has_no_support(self, ring3):
        assert cd_poly(unit_ideal(ring3)).is_no_support


class TestCdRestricted:
    def test_drops_hit_generators(self, ring3):
        # image of m in k[y,z] is (y,z); image of m in k[x] is (x)
        m = ring3.maximal_ideal()
        assert cd_restricted(m, MonomialPrime((0,))).value == 2
        assert cd_restricted(m, MonomialPrime((1, 2))).value == 1

    def test_zero_image(self, ring3):
        a = I(ring3, (1, 1, 0))
        assert cd_restricted(a, MonomialPrime((0,))).value == 0

    def test_full_prime_gives_field(self, ring3):
        assert cd_restricted(I(ring3, (1, 0, 0)), MonomialPrime((0, 1, 2))).value == 0

    def test_zero_prime_recovers_cd_poly(self, ring3):
        a = I(ring3, (1, 1, 0), (1, 0, 1))
        assert cd_restricted(a, MonomialPrime(())) == cd_poly(a)


class TestCdQuotient:
    def test_maximal_over_quotient(self, ring3):
        got = cd_quotient(ring3.maximal_ideal(), I(ring3, (1, 1, 0), (1, 0, 1)))
        assert got.value == 2

    def test_principal_image(self, ring3):
        # a = (xy, xz) on R/(y): image (xz) in k[x,z] is principal
        got = cd_quotient(I(ring3, (1, 1, 0), (1, 0, 1)), I(ring3, (0, 1, 0)))
        assert got.value == 1

    def test_contained_in_prime(self, ring3):
        p = I(ring3, (1, 0, 0))
        assert cd_quotient(p, p).value == 0

    def test_unit_module(self, ring3):
        assert cd_quotient(I(ring3, (1, 0, 0)), unit_ideal(ring3)).is_no_support

    def test_radical_insensitivity(self, ring3):
        a = ring3.maximal_ideal()
        J = I(ring3, (2, 1, 0), (0, 0, 2))
        assert cd_quotient(a, J) == cd_quotient(a, radical(J))


class TestLhv:
    def test_complementary_prime(self, ring3):
        a = I(ring3, (0, 1, 0), (0, 0, 1))
        assert lhv_check(a, MonomialPrime((0,)))
        assert cd_restricted(a, MonomialPrime((0,))).value == 2

    def test_failing_case(self, ring3):
        a = I(ring3, (0, 1, 0))
        assert not lhv_check(a, MonomialPrime((0,)))
        assert cd_restricted(a, MonomialPrime((0,))).value == 1

    def test_maximal_with_zero_prime(self, ring3):
        assert lhv_check(ring3.maximal_ideal(), MonomialPrime(()))


class TestCechOracle:
    def test_koszul_top(self, ring3):
        assert cech_cd_oracle(ring3.maximal_ideal()).value == 3

    def test_principal(self, ring3):
        assert cech_cd_oracle(I(ring3, (1, 0, 0))).value == 1

    def test_codim_one_pair_agrees(self, ring3):
        a = I(ring3, (1, 1, 0), (1, 0, 1))
        assert cech_cd_oracle(a) == cd_poly(a)

    def test_unit_no_support(self, ring3):
        assert cech_cd_oracle(unit_ideal(ring3)).is_no_support

    def test_zero_ideal(self, ring3):
        assert cech_cd_oracle(zero_ideal(ring3)).value == 0

    def test_quotient_module(self, ring3):
        a = ring3.maximal_ideal()
        Iq = I(ring3, (1, 1, 0), (1, 0, 1))
        assert cech_cd_oracle(a, Iq) == cd_quotient(a, Iq)

    def test_requires_squarefree(self, ring3):
        with pytest.raises(SquarefreeRequired):
            cech_cd_oracle(I(ring3, (2, 0, 0)))

    def test_generator_limit(self, ring3):
        with pytest.raises(LimitExceeded):
            cech_cd_oracle(I(ring3, (1, 1, 0), (1, 0, 1)), max_generators=1)

    def test_rp2_characteristic_dependence(self):
        ideal = rp2_ideal()
        assert cech_cd_oracle(ideal, None, 0).value == 3
        assert cech_cd_oracle(ideal, None, 2).value == 4


class TestCechComplexStructure:
    def test_flag_semantics(self, ring3):
        # a = (xy, xz), M = R: at neg = {x,y,z} only the full subset
        # carries the degree.
        a = I(ring3, (1, 1, 0), (1, 0, 1))
        cx = GradedCechComplex(a, zero_ideal(ring3), 0)
        flags = cx.flags(0b111)
        assert list(flags) == [False, False, False, True]
        assert cx.cohomology_dims(0b111) == [0, 0, 1]

    def test_flags_respect_nonfaces(self, ring3):
        # M = R/(x): localizations at generators divisible by x vanish
        a = I(ring3, (1, 0, 0))
        cx = GradedCechComplex(a, I(ring3, (1, 0, 0)), 0)
        assert list(cx.flags(0)) == [True, False]

    def test_differentials_compose_to_zero(self):
        rng = random.Random(17)
        for _ in range(10):
            ring = ring_of(rng.randint(3, 5))
            a = random_squarefree_ideal(rng, ring, 2, 6)
            Iq = random_squarefree_ideal(rng, ring, 2, 6)
            cx = GradedCechComplex(a, Iq, 0)
            for neg in range(1 << ring.n):
                for i in range(cx.r - 1):
                    lo = cx.differential(neg, i)
                    hi = cx.differential(neg, i + 1)
                    if lo.size and hi.size:
                        assert not (hi @ lo).any()


def test_box_sufficiency_depth_two_matches():
    rng = random.Random(8)
    for _ in range(8):
        ring = ring_of(rng.randint(3, 4))
        a = random_squarefree_ideal(rng, ring, 2, 6)
        assert cech_cd_oracle(a, None, 0, box_depth=1) == cech_cd_oracle(
            a, None, 0, box_depth=2
        )


def test_monotonicity_in_support():
    # Supp R/I ⊆ Supp R/J forces cd(a, R/I) <= cd(a, R/J).
    rng = random.Random(13)
    for _ in range(15):
        ring = ring_of(rng.randint(3, 5))
        a = random_squarefree_ideal(rng, ring, 2, 6)
        Iq = random_squarefree_ideal(rng, ring, 2, 6)
        J = intersect(Iq, random_squarefree_ideal(rng, ring, 2, 6))
        ci, cj = cd_quotient(a, Iq), cd_quotient(a, J)
        assert ci.value <= cj.value


def test_cd_within_module_dimension():
    from topann.decompose import krull_dim_height

    rng = random.Random(14)
    for _ in range(15):
        ring = ring_of(rng.randint(3, 6))
        a = random_squarefree_ideal(rng, ring, 2, 8)
        Iq = random_squarefree_ideal(rng, ring, 2, 8)
        dim, _ = krull_dim_height(Iq)
        got = cd_quotient(a, Iq)
        assert 0 <= got.value <= dim
