"""Seeded cross-validation harness.

Drives random instances through every dual-route identity the build is
supposed to satisfy: Betti-route vs Cech-route cohomological dimension,
the two T-submodule constructions, the radical/attached-prime identity,
the radical criterion against the dimension route, the two
codimension-one attached-set characterizations, and the multiplication
criterion biconditional. Any failure here is a defect of the build.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .annihilators import (
    ann_checks,
    ann_top,
    att_codim1_membership,
    att_codim1_onedim,
    att_top,
    mult_criterion,
    t_submodule,
)
from .cohdim import cd_poly, cd_quotient, cd_restricted, cech_cd_oracle, lhv_check
from .decompose import MonomialPrime, ideal_of_prime, krull_dim_height
from .errors import TopAnnError, UndefinedOperation
from .monomials import (
    MonomialIdeal,
    RingSpec,
    contains_ideal,
    format_ideal,
    format_monomial,
    intersect_all,
    minimal_generators,
    radical,
)
from .randgen import (
    random_intersection_ideal,
    random_monomial,
    random_onedim_ideal,
    random_squarefree_ideal,
    ring_of,
)


@dataclass
class CheckResult:
    name: str
    instances: int = 0
    failures: int = 0
    first_counterexample: str | None = None

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def record(self, ok: bool, describe) -> None:
        self.instances += 1
        if not ok:
            self.failures += 1
            if self.first_counterexample is None:
                self.first_counterexample = describe()


@dataclass
class VerifyReport:
    seed: int
    count: int
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def _rng(seed: int, name: str) -> random.Random:
    return random.Random(f"{seed}/{name}")


def _describe(ring: RingSpec, **ideals) -> str:
    parts = [f"ring={','.join(ring.vars)}"]
    for label, val in ideals.items():
        if isinstance(val, MonomialIdeal):
            parts.append(f"{label}={format_ideal(val)}")
        else:
            parts.append(f"{label}={val}")
    return " ".join(parts)


def _shrunk(ring: RingSpec, ideal: MonomialIdeal, still_fails) -> MonomialIdeal:
    """Greedy generator-dropping minimization of a failing instance."""
    cur = ideal
    changed = True
    while changed:
        changed = False
        for k in range(len(cur.gens)):
            cand = minimal_generators(ring, cur.gens[:k] + cur.gens[k + 1:])
            if cand.is_zero or cand.is_unit:
                continue
            try:
                bad = still_fails(cand)
            except TopAnnError:
                bad = False
            if bad:
                cur = cand
                changed = True
                break
    return cur


def check_cd_oracle(
    seed: int,
    count: int,
    max_vars: int = 6,
    max_gens: int = 8,
    box_depth: int = 1,
    chars: tuple[int, ...] = (0, 2),
    include_quotients: bool = True,
) -> CheckResult:
    """Betti-route cd must equal the Cech oracle, for the ring and for
    random squarefree quotients."""
    rng = _rng(seed, "cd-oracle")
    result = CheckResult("cd-oracle-equivalence")
    for _ in range(count):
        ring = ring_of(rng.randint(3, max_vars))
        a = random_squarefree_ideal(rng, ring, 2, max_gens)
        quotients = [None]
        if include_quotients:
            quotients.append(random_squarefree_ideal(rng, ring, 2, max_gens))
        ok = True
        for char in chars:
            for I in quotients:
                lhs = cd_poly(a, char) if I is None else cd_quotient(a, I, char)
                rhs = cech_cd_oracle(a, I, char, box_depth)
                if lhs != rhs:
                    ok = False

        def describe():
            def bad(cand):
                return any(
                    cd_poly(cand, ch) != cech_cd_oracle(cand, None, ch, box_depth)
                    for ch in chars
                )

            small = _shrunk(ring, a, bad) if bad(a) else a
            return _describe(ring, a=small)

        result.record(ok, describe)
    return result


def check_t_routes(
    seed: int,
    count: int,
    max_vars: int = 6,
    chars: tuple[int, ...] = (0, 2),
) -> CheckResult:
    """Saturation route and component-intersection route of the T-submodule
    agree, and I sits inside the result."""
    rng = _rng(seed, "t-routes")
    result = CheckResult("t-two-routes")
    for k in range(count):
        ring = ring_of(rng.randint(3, max_vars))
        char = chars[k % len(chars)]
        a = ring.maximal_ideal() if k % 2 else random_squarefree_ideal(rng, ring, 2, 6)
        I = random_intersection_ideal(rng, ring)
        try:
            t = t_submodule(a, I, char)  # raises if the two routes disagree
            ok = contains_ideal(t, I)
        except TopAnnError:
            ok = False
        result.record(ok, lambda: _describe(ring, a=a, i=I, char=char))
    return result


def check_radical_ann_att(
    seed: int,
    count: int,
    max_vars: int = 6,
    chars: tuple[int, ...] = (0, 2),
) -> CheckResult:
    """radical(ann) equals the intersection of the attached primes whenever
    the top module is nonzero, and the attached set is empty exactly when
    it is zero."""
    rng = _rng(seed, "radical-ann")
    result = CheckResult("radical-ann-att")
    for k in range(count):
        ring = ring_of(rng.randint(3, max_vars))
        char = chars[k % len(chars)]
        a = ring.maximal_ideal() if k % 2 else random_squarefree_ideal(rng, ring, 2, 6)
        I = random_intersection_ideal(rng, ring)
        try:
            rep = ann_top(a, I, char)
            att = att_top(a, I, char)
            ok = bool(att.primes) == rep.hypothesis_met
            if rep.hypothesis_met:
                expected = intersect_all(
                    ring, [ideal_of_prime(ring, p) for p in att.primes]
                )
                ok = ok and radical(rep.ann) == expected
                ok = ok and ann_checks(a, I, char).consistent
        except TopAnnError:
            ok = False
        result.record(ok, lambda: _describe(ring, a=a, i=I, char=char))
    return result


def check_lhv(
    seed: int,
    count: int,
    max_vars: int = 5,
    char: int = 0,
) -> CheckResult:
    """The radical criterion agrees with cd(a, R/p) = dim R/p over every
    monomial prime of the ring."""
    rng = _rng(seed, "lhv")
    result = CheckResult("lhv-equivalence")
    for _ in range(count):
        n = rng.randint(2, max_vars)
        ring = ring_of(n)
        a = random_squarefree_ideal(rng, ring, 2, 8)
        ok = True
        witness = None
        for mask in range(1 << n):
            p = MonomialPrime.from_mask(mask)
            lhs = lhv_check(a, p)
            rhs = cd_restricted(a, p, char).value == p.dim_in(ring)
            if lhs != rhs:
                ok = False
                witness = p
                break
        result.record(
            ok, lambda: _describe(ring, a=a, prime=witness.indices if witness else ())
        )
    return result


def check_codim1_sets(
    seed: int,
    count: int,
    max_vars: int = 5,
    char: int = 0,
) -> CheckResult:
    """Membership route and radical-enumeration route of the
    codimension-one attached set coincide over all monomial primes."""
    rng = _rng(seed, "codim1")
    result = CheckResult("codim1-sets")
    for _ in range(count):
        n = rng.randint(2, max_vars)
        ring = ring_of(n)
        a = random_onedim_ideal(rng, ring)
        try:
            enumerated = set(att_codim1_onedim(a, char).primes)
            by_membership = {
                MonomialPrime.from_mask(m)
                for m in range(1 << n)
                if att_codim1_membership(a, MonomialPrime.from_mask(m), char)
            }
            ok = enumerated == by_membership
        except TopAnnError:
            ok = False
        result.record(ok, lambda: _describe(ring, a=a))
    return result


def check_mult_criterion(
    seed: int,
    count: int,
    max_vars: int = 6,
    chars: tuple[int, ...] = (0, 2),
) -> CheckResult:
    """x annihilates the top module iff cd drops on x*M."""
    rng = _rng(seed, "mult")
    result = CheckResult("mult-criterion")
    for k in range(count):
        ring = ring_of(rng.randint(3, max_vars))
        char = chars[k % len(chars)]
        I = random_intersection_ideal(rng, ring)
        a = random_squarefree_ideal(rng, ring, 2, 6)
        dim_m, _ = krull_dim_height(I)
        if cd_quotient(a, I, char).value != dim_m:
            a = ring.maximal_ideal()
        x = random_monomial(rng, ring)
        try:
            mc = mult_criterion(a, I, x, char)
            ok = mc.kills == mc.cd_drop
        except TopAnnError:
            ok = False
        result.record(
            ok,
            lambda: _describe(ring, a=a, i=I, x=format_monomial(ring, x), char=char),
        )
    return result


def run_verification(
    seed: int,
    count: int,
    max_vars: int = 6,
    max_gens: int = 8,
    box_depth: int = 1,
    chars: tuple[int, ...] = (0, 2),
) -> VerifyReport:
    """Run every check with `count` instances each."""
    if count < 1:
        raise UndefinedOperation("verification needs count >= 1")
    if max_vars < 2:
        raise UndefinedOperation("verification needs max_vars >= 2")
    report = VerifyReport(seed=seed, count=count)
    report.checks.append(
        check_cd_oracle(seed, count, max_vars, max_gens, box_depth, chars)
    )
    report.checks.append(check_t_routes(seed, count, max_vars, chars))
    report.checks.append(check_radical_ann_att(seed, count, max_vars, chars))
    report.checks.append(check_lhv(seed, count, min(max_vars, 5)))
    report.checks.append(check_codim1_sets(seed, count, min(max_vars, 5)))
    report.checks.append(check_mult_criterion(seed, count, max_vars, chars))
    return report
