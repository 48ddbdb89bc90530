"""
Exact counting module exports.

Brute-force oracles, the structural counter |M2^lam(k)| = Z + Q/2,
Möbius machinery, C/D interval factors and |M2^Z(k)|.
"""

from eigencount.exactcount.counting import (
    DEFAULT_ENUMERATION_LIMIT,
    asymptotic_count_lambda,
    brute_force_count_integer_spectrum,
    brute_force_count_lambda,
    brute_force_count_repeated,
    count_integer_spectrum,
    count_repeated,
    count_repeated_integer,
    count_report,
    fast_count_lambda,
    integer_spectrum_main_term,
    mobius_lambda_sum,
    mobius_main_term,
)
from eigencount.exactcount.intervals import (
    cd_factors,
    cd_partial_sum,
    n_k_lambda,
    n_pair_oracle,
)
from eigencount.exactcount.mobius import mobius_sieve, prime_sieve
from eigencount.exactcount.types import CDPair, CountError, CountReport, MobiusTable

__all__ = [
    "CountError",
    "CountReport",
    "MobiusTable",
    "CDPair",
    "DEFAULT_ENUMERATION_LIMIT",
    "prime_sieve",
    "mobius_sieve",
    "n_k_lambda",
    "n_pair_oracle",
    "cd_factors",
    "cd_partial_sum",
    "brute_force_count_lambda",
    "brute_force_count_integer_spectrum",
    "brute_force_count_repeated",
    "fast_count_lambda",
    "asymptotic_count_lambda",
    "integer_spectrum_main_term",
    "count_repeated",
    "count_repeated_integer",
    "count_integer_spectrum",
    "mobius_lambda_sum",
    "mobius_main_term",
    "count_report",
]
