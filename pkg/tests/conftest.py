import itertools

import pytest

from topann.monomials import Monomial, MonomialIdeal, RingSpec, contains


@pytest.fixture
def ring3():
    return RingSpec(("x", "y", "z"))


@pytest.fixture
def ring6():
    return RingSpec(tuple("abcdef"))


def monomials_up_to(n, degree):
    """Every exponent vector of total degree <= degree; the brute-force
    membership universe used to cross-check ideal operations."""
    for exps in itertools.product(range(degree + 1), repeat=n):
        if sum(exps) <= degree:
            yield Monomial(exps)


def same_members_up_to(I: MonomialIdeal, J: MonomialIdeal, degree: int) -> bool:
    """Ideal equality tested by brute-force membership scan."""
    return all(
        contains(I, u) == contains(J, u)
        for u in monomials_up_to(I.ring.n, degree)
    )
