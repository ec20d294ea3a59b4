"""Exact combinatorial sequences with fast base-p divisibility predictors.

Two independent routes answer "what is the highest power of x dividing y":
a brute-force oracle that builds y as an exact big integer and strips
factors, and a closed-form fast path that works purely in base-p digit
arithmetic.  A verification harness sweeps every claim against the
oracle; the CLI (`valuata`) exposes queries, sweeps and benchmarks.
"""

from .digits import (
    DigitExpansion,
    digit_sum,
    expand,
    is_prime,
    kummer_carries,
    popcount_valuation,
    vp_factorial,
)
from .msums import (
    WitnessFailure,
    divisibility_propagation_witness,
    msum_B,
    msum_closed_t0,
    msum_closed_t1,
    msum_closed_t2,
    msum_recurrence_step,
)
from .sequences import (
    SEQUENCES,
    DomainError,
    IntegralityError,
    SumParams,
    catalan,
    central_binomial,
    central_multinomial,
    central_multinomial_product,
    check_congruence,
    delannoy,
    delannoy_table,
    eval_B,
    eval_B_via_macmahon,
    eval_B_via_trinomial,
    eval_M,
    eval_T,
    franel,
    fuss_catalan,
    hexagonal,
    legendre,
    legendre_rational,
    schroder_large,
    schroder_little,
)
from .theorems import (
    HarnessGrid,
    HarnessResult,
    HypothesisViolation,
    TheoremReport,
    check_lemma1,
    check_remarks,
    predict_bsum_omega,
    predict_bsum_omega_bound,
    predict_central_binomial_v2,
    predict_delannoy_v3,
    predict_franel_v2_bound,
    predict_legendre_omega,
    predict_motzkin_omega,
    predict_schroder_v3,
    predict_trinomial_omega,
    run_harness,
)
from .valuation import (
    INFINITE,
    Factorization,
    InvalidBaseError,
    Valuation,
    ZeroInputError,
    factorize,
    omega,
    vp_binomial_fast,
    vp_int,
)

__version__ = "0.1.0"
