"""topann: exact annihilators and attached primes of top local cohomology
for monomial-ideal data over polynomial rings."""

__version__ = "0.1.0"

from .annihilators import (
    AnnChecksReport,
    AttMode,
    AttSet,
    MultCriterion,
    TopAnnReport,
    ann_checks,
    ann_top,
    att_codim1_membership,
    att_codim1_onedim,
    att_top,
    att_upper_check,
    mult_criterion,
    t_submodule,
)
from .cohdim import (
    NO_SUPPORT,
    BettiTable,
    CdValue,
    GradedCechComplex,
    betti_table,
    cd_poly,
    cd_quotient,
    cd_restricted,
    cech_cd_oracle,
    lhv_check,
    proj_dim,
)
from .decompose import (
    Decomposition,
    MonomialPrime,
    PrimaryComponent,
    associated_primes,
    ideal_of_prime,
    irreducible_decomposition,
    krull_dim_height,
    minimal_primes,
    primary_decomposition,
)
from .errors import (
    HypothesisError,
    LimitExceeded,
    ParseError,
    RingMismatch,
    SquarefreeRequired,
    TopAnnError,
    UndefinedOperation,
    VerificationFailure,
)
from .monomials import (
    Monomial,
    MonomialIdeal,
    RingSpec,
    colon,
    contains,
    contains_ideal,
    format_ideal,
    format_monomial,
    ideal_sum,
    intersect,
    intersect_all,
    minimal_generators,
    multiply,
    radical,
    saturate,
    unit_ideal,
    zero_ideal,
)
from .simplicial import (
    HomologyProfile,
    SimplicialComplex,
    reduced_homology,
    restrict,
    sr_complex,
    sr_ideal,
)
from .verify import run_verification
