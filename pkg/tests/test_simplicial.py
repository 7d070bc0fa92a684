import random

import pytest

from topann.errors import SquarefreeRequired, UndefinedOperation
from topann.monomials import ideal_from_exps, zero_ideal
from topann.randgen import random_squarefree_ideal, ring_of
from topann.simplicial import (
    SimplicialComplex,
    complex_from_facets,
    face_counts,
    full_simplex,
    reduced_homology,
    restrict,
    sr_complex,
    sr_ideal,
)

RP2_TRIANGLES = ["125", "126", "134", "136", "145", "234", "235", "246", "356", "456"]


def rp2_complex():
    facets = [sum(1 << (int(c) - 1) for c in t) for t in RP2_TRIANGLES]
    return complex_from_facets(0b111111, facets)


class TestSrComplex:
    def test_two_facets(self, ring3):
        K = sr_complex(ideal_from_exps(ring3, [(1, 1, 0), (1, 0, 1)]))
        assert set(K.facets) == {0b001, 0b110}

    def test_zero_ideal_full_simplex(self, ring3):
        assert sr_complex(zero_ideal(ring3)).facets == (0b111,)

    def test_maximal_ideal_irrelevant(self, ring3):
        assert sr_complex(ring3.maximal_ideal()).facets == (0,)

    def test_rejects_nonsquarefree(self, ring3):
        with pytest.raises(SquarefreeRequired):
            sr_complex(ideal_from_exps(ring3, [(2, 0, 0)]))

    def test_roundtrip_random(self):
        rng = random.Random(3)
        for _ in range(20):
            ring = ring_of(rng.randint(3, 6))
            I = random_squarefree_ideal(rng, ring, 2, 8)
            assert sr_ideal(sr_complex(I), ring) == I


class TestReducedHomology:
    def test_circle(self):
        K = complex_from_facets(0b111, [0b011, 0b101, 0b110])
        assert reduced_homology(K, 0).as_dict() == {1: 1}
        assert reduced_homology(K, 2).as_dict() == {1: 1}

    def test_full_simplex_contractible(self):
        assert reduced_homology(full_simplex(0b11111), 0).as_dict() == {}

    def test_void_and_irrelevant(self):
        void = SimplicialComplex(0b11, ())
        irr = SimplicialComplex(0b11, (0,))
        assert reduced_homology(void, 0).as_dict() == {}
        assert reduced_homology(irr, 0).as_dict() == {-1: 1}
        assert reduced_homology(irr, 3).as_dict() == {-1: 1}

    def test_projective_plane_characteristic_dependence(self):
        K = rp2_complex()
        assert face_counts(K) == {-1: 1, 0: 6, 1: 15, 2: 10}
        assert reduced_homology(K, 0).as_dict() == {}
        over_f2 = reduced_homology(K, 2)
        assert over_f2.betti(1) == 1
        assert over_f2.betti(2) == 1
        assert reduced_homology(K, 3).as_dict() == {}

    def test_field_validation(self):
        with pytest.raises(UndefinedOperation):
            reduced_homology(full_simplex(0b1), 4)

    def test_two_points(self):
        K = complex_from_facets(0b11, [0b01, 0b10])
        assert reduced_homology(K, 0).as_dict() == {0: 1}


class TestRestrict:
    def test_full_simplex(self):
        assert restrict(full_simplex(0b1111), 0b0110).facets == (0b0110,)

    def test_to_empty_is_irrelevant(self):
        assert restrict(full_simplex(0b111), 0).facets == (0,)

    def test_partial(self, ring3):
        K = sr_complex(ideal_from_exps(ring3, [(1, 1, 0), (1, 0, 1)]))
        got = restrict(K, 0b011)  # down to {x, y}
        assert set(got.facets) == {0b001, 0b010}

    def test_void_stays_void(self):
        assert restrict(SimplicialComplex(0b11, ()), 0b01).is_void


def euler_characteristic(K):
    return sum((-1) ** d * c for d, c in face_counts(K).items() if d >= 0)


def test_euler_characteristic_and_coefficient_bound():
    rng = random.Random(9)
    for _ in range(25):
        ring = ring_of(rng.randint(3, 6))
        K = sr_complex(random_squarefree_ideal(rng, ring, 2, 8))
        for char in (0, 2, 3):
            prof = reduced_homology(K, char)
            reduced_euler = sum((-1) ** d * v for d, v in prof.dims)
            assert euler_characteristic(K) - 1 == reduced_euler
        # Universal-coefficient direction: rational homology is smallest.
        assert reduced_homology(K, 0).total <= reduced_homology(K, 2).total
        assert reduced_homology(K, 0).total <= reduced_homology(K, 3).total


def test_rank_nullity_per_degree():
    from topann.linalg import rank
    from topann.simplicial import _boundary_matrix

    rng = random.Random(21)
    for _ in range(10):
        ring = ring_of(rng.randint(3, 5))
        K = sr_complex(random_squarefree_ideal(rng, ring, 2, 6))
        faces = sorted(K.faces())
        by_dim = {}
        for f in faces:
            by_dim.setdefault(bin(f).count("1") - 1, []).append(f)
        top = max(by_dim)
        prof = reduced_homology(K, 0)
        for i in range(-1, top + 1):
            ci = by_dim.get(i, [])
            rank_i = (
                rank(_boundary_matrix(by_dim.get(i - 1, []), ci), 0) if i >= 0 else 0
            )
            upper = by_dim.get(i + 1, [])
            rank_up = rank(_boundary_matrix(ci, upper), 0) if upper else 0
            assert len(ci) == rank_i + rank_up + prof.betti(i)
