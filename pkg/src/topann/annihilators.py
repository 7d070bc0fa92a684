"""Annihilators of top local cohomology and attached-prime sets.

Everything here reduces to two ingredients computed elsewhere: the
canonical reduced decomposition of R/I and per-prime cohomological
dimensions. The T-submodule (largest submodule of R/I with strictly
smaller cohomological dimension) is computed along two independent routes
that must agree, so every call cross-checks itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .cohdim import CdValue, cd_poly, cd_quotient, cd_restricted, lhv_check
from .decompose import (
    MonomialPrime,
    associated_primes,
    ideal_of_prime,
    krull_dim_height,
    zero_prime_decomposition,
)
from .errors import HypothesisError, UndefinedOperation, VerificationFailure
from .monomials import (
    Monomial,
    MonomialIdeal,
    colon_monomial,
    contains,
    contains_ideal,
    format_ideal,
    intersect_all,
    product_all,
    radical,
    saturate,
    unit_ideal,
)


@dataclass(frozen=True)
class TopAnnReport:
    """Result of the top-cohomology annihilator computation for M = R/I.

    ``t_lift`` is the ideal T with T/I the largest submodule of M of
    strictly smaller cohomological dimension. When cd(a, M) = dim M the
    annihilator of the top module is exactly ``t_lift``; otherwise the top
    module vanishes and the annihilator is the unit ideal.
    """

    c: CdValue
    dim_m: int
    t_lift: MonomialIdeal
    ann: MonomialIdeal
    hypothesis_met: bool


class AttMode(Enum):
    EXACT = "exact"
    MEMBERSHIP_ONLY = "membership-only"


@dataclass(frozen=True)
class AttSet:
    """A set of attached primes; ``mode`` records whether the defining set
    was provably finite and fully enumerated, or only sampled over the
    monomial primes of the surrogate ring."""

    primes: tuple[MonomialPrime, ...]
    mode: AttMode

    def as_set(self) -> frozenset[MonomialPrime]:
        return frozenset(self.primes)


def _component_cds(a, I, char):
    decomp = zero_prime_decomposition(I)
    return [
        (comp, cd_restricted(a, comp.rad_prime, char))
        for comp in decomp.components
    ]


def t_submodule(a: MonomialIdeal, I: MonomialIdeal, char: int | None = None) -> MonomialIdeal:
    """The ideal T with T/I the largest submodule of R/I whose cohomological
    dimension with respect to a is strictly below cd(a, R/I).

    Computed two ways that must agree: saturating I by the product of the
    low-dimension associated primes, and intersecting the primary
    components whose prime attains the top dimension.
    """
    if I.is_unit:
        raise UndefinedOperation("M = R/I needs a proper ideal I")
    ring = I.ring
    c = cd_quotient(a, I, char)
    if c.is_no_support:
        raise HypothesisError("cd(a, R/I) has empty support; T is undefined")
    with_cd = _component_cds(a, I, char)
    low_primes = [
        ideal_of_prime(ring, comp.rad_prime) for comp, v in with_cd if v.value != c.value
    ]
    route_a = saturate(I, product_all(ring, low_primes))
    top_components = [comp.component for comp, v in with_cd if v.value == c.value]
    if not top_components:
        raise VerificationFailure("no primary component attains the top dimension")
    route_b = intersect_all(ring, top_components)
    if route_a != route_b:
        raise VerificationFailure(
            "saturation route and component-intersection route disagree: "
            f"{format_ideal(route_a)} vs {format_ideal(route_b)}"
        )
    return route_a


def ann_top(a: MonomialIdeal, I: MonomialIdeal, char: int | None = None) -> TopAnnReport:
    """Annihilator of the top local cohomology module of R/I with respect
    to a. When cd(a, R/I) < dim R/I the module is zero and the annihilator
    is the unit ideal."""
    if I.is_unit:
        raise UndefinedOperation("M = R/I needs a proper ideal I")
    dim_m, _ = krull_dim_height(I)
    c = cd_quotient(a, I, char)
    if c.is_no_support:
        # No cohomology in any degree: the top module vanishes too.
        return TopAnnReport(c, dim_m, I, unit_ideal(I.ring), False)
    t = t_submodule(a, I, char)
    met = c.value == dim_m
    ann = t if met else unit_ideal(I.ring)
    return TopAnnReport(c, dim_m, t, ann, met)


def att_top(a: MonomialIdeal, I: MonomialIdeal, char: int | None = None) -> AttSet:
    """Attached primes of the top local cohomology module H^{dim R/I}:
    the minimal primes of I whose quotient attains the full dimension.
    This set is provably finite and fully enumerated."""
    if I.is_unit:
        raise UndefinedOperation("M = R/I needs a proper ideal I")
    dim_m, _ = krull_dim_height(I)
    _, mass, _ = associated_primes(I)
    primes = sorted(
        (p for p in mass if cd_restricted(a, p, char).value == dim_m),
        key=MonomialPrime.sort_key,
    )
    return AttSet(tuple(primes), AttMode.EXACT)


def att_upper_check(
    a: MonomialIdeal,
    I: MonomialIdeal,
    p: MonomialPrime,
    char: int | None = None,
) -> bool:
    """Necessary condition for p to be attached to H^{cd(a,R/I)}: p must
    support R/I and cd(a, R/p) must equal cd(a, R/I). A False certifies
    non-membership; True alone does not certify membership."""
    c = cd_quotient(a, I, char)
    if c.is_no_support:
        raise HypothesisError("cd(a, R/I) must be finite")
    in_support = contains_ideal(ideal_of_prime(I.ring, p), radical(I))
    return in_support and cd_restricted(a, p, char).value == c.value


def _require_vanishing_top(a: MonomialIdeal, char: int | None) -> None:
    top = cd_poly(a, char)
    if top.value is not None and top.value >= a.ring.n:
        raise HypothesisError("the ring's top local cohomology at a does not vanish")


def att_codim1_membership(a: MonomialIdeal, p: MonomialPrime, char: int | None = None) -> bool:
    """Exact membership of a monomial prime in the attached set of the
    codimension-one module H^{n-1} of the ring, assuming H^n vanishes."""
    _require_vanishing_top(a, char)
    return cd_restricted(a, p, char).value == a.ring.n - 1


def att_codim1_onedim(a: MonomialIdeal, char: int | None = None) -> AttSet:
    """Attached primes of H^{n-1} of the ring when dim R/a = 1: the
    dimension n-1 monomial primes passing the radical criterion, together
    with the zero prime (the ambient ring is a domain). Enumeration covers
    monomial primes only, hence membership-only mode."""
    ring = a.ring
    dim_a, _ = krull_dim_height(a)
    if dim_a != 1:
        raise HypothesisError(f"dim R/a must be 1, got {dim_a}")
    _require_vanishing_top(a, char)
    members = [
        MonomialPrime((i,)) for i in range(ring.n) if lhv_check(a, MonomialPrime((i,)))
    ]
    members.append(MonomialPrime(()))
    for p in members:
        if not att_codim1_membership(a, p, char):
            raise VerificationFailure(
                f"prime {p.indices} passes the radical route but fails the "
                "dimension route"
            )
    return AttSet(tuple(members), AttMode.MEMBERSHIP_ONLY)


@dataclass(frozen=True)
class MultCriterion:
    """x kills the top module iff multiplying M by x drops its
    cohomological dimension; the two booleans must agree."""

    kills: bool
    cd_drop: bool


def mult_criterion(
    a: MonomialIdeal,
    I: MonomialIdeal,
    x: Monomial,
    char: int | None = None,
) -> MultCriterion:
    """Evaluate both sides of the multiplication criterion for M = R/I."""
    report = ann_top(a, I, char)
    if not report.hypothesis_met:
        raise HypothesisError("cd(a, R/I) < dim R/I: top cohomology vanishes")
    kills = contains(report.ann, x)
    quot = colon_monomial(I, x)  # x*M is R/(I : x)
    if quot.is_unit:
        cd_drop = True  # x*M = 0
    else:
        cdx = cd_quotient(a, quot, char)
        cd_drop = cdx.is_no_support or cdx.value < report.c.value
    return MultCriterion(kills, cd_drop)


@dataclass(frozen=True)
class AnnChecksReport:
    """Consistency report tying the annihilator to the associated primes.

    ``ann_equals_module_annihilator`` (ann equals I, the annihilator of
    M = R/I itself) must hold exactly when every associated prime attains
    the top dimension; the radical of ann must equal the intersection of
    the top-dimension associated primes; and its vanishing locus must be
    the support of M/T.
    """

    c: CdValue
    ann: MonomialIdeal
    ann_equals_module_annihilator: bool
    all_associated_top: bool
    zero_iff_all_top: bool
    radical_matches_top_primes: bool
    support_matches_quotient: bool

    @property
    def consistent(self) -> bool:
        return (
            self.zero_iff_all_top
            and self.radical_matches_top_primes
            and self.support_matches_quotient
        )


def ann_checks(a: MonomialIdeal, I: MonomialIdeal, char: int | None = None) -> AnnChecksReport:
    """Run the annihilator consistency checks for M = R/I; any False in the
    report is a defect of the build, not a property of the input."""
    rep = ann_top(a, I, char)
    if not rep.hypothesis_met:
        raise HypothesisError("cd(a, R/I) < dim R/I: top cohomology vanishes")
    ring = I.ring
    ass, _, _ = associated_primes(I)
    c = rep.c.value
    cds = {p: cd_restricted(a, p, char).value for p in ass}
    all_top = all(v == c for v in cds.values())
    eq_base = rep.ann == I
    top_primes = [ideal_of_prime(ring, p) for p in ass if cds[p] == c]
    rad_ok = radical(rep.ann) == intersect_all(ring, top_primes)
    supp_ok = radical(rep.ann) == radical(rep.t_lift)
    return AnnChecksReport(
        c=rep.c,
        ann=rep.ann,
        ann_equals_module_annihilator=eq_base,
        all_associated_top=all_top,
        zero_iff_all_top=eq_base == all_top,
        radical_matches_top_primes=rad_ok,
        support_matches_quotient=supp_ok,
    )
