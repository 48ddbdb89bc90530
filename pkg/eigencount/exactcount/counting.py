"""
Counting matrices in M2(k) with a prescribed integer eigenvalue.

Responsibilities:
- brute-force oracles (exhaustive enumeration, integer arithmetic)
- exact structural count |M2^lam(k)| = Z + Q/2
- Möbius-inserted form of the quadruple sum and its C/D main term
- asymptotic main term (24 V(lam/k) / pi^2) k^2 log k
- repeated-eigenvalue count and |M2^Z(k)|

Z counts shifted matrices M - lam*I with a zero entry (both diagonal and
off-diagonal products vanish), Q counts quadruples (a, b, c, d), all nonzero,
gcd(a, b) = 1, with |ac + lam|, |bc|, |ad|, |bd + lam| <= k. Each singular
shifted matrix without zero entries has exactly two quadruples.
"""

import logging
from functools import lru_cache
from math import log, pi
from typing import Iterable, Optional, Tuple

import numpy as np

from eigencount.closedform.constants import constants_bundle
from eigencount.closedform.densities import v_density
from eigencount.exactcount.intervals import cd_products, pair_counts
from eigencount.exactcount.mobius import mobius_sieve
from eigencount.exactcount.types import CountError, CountReport

logger = logging.getLogger(__name__)

DEFAULT_ENUMERATION_LIMIT = 10**9

METHODS = ("brute", "fast")


def _check_k(k: int, minimum: int = 1) -> None:
    if not isinstance(k, (int, np.integer)) or k < minimum:
        raise CountError(
            step="validation",
            error_message=f"k must be an integer >= {minimum}",
            details=f"k = {k!r}",
        )


def _check_enumeration_guard(k: int, limit: int, power: int = 4) -> None:
    size = (2 * k + 1) ** power
    if size > limit:
        raise CountError(
            step="enumeration_guard",
            error_message=f"k = {k} is too large to enumerate",
            details=f"(2k+1)^{power} = {size} exceeds the limit {limit}",
        )


def _entries(k: int) -> np.ndarray:
    return np.arange(-k, k + 1, dtype=np.int64)


# Brute-force oracles


def brute_force_count_lambda(k: int, lam: int, limit: int = DEFAULT_ENUMERATION_LIMIT) -> int:
    """
    |M2^lam(k)| by checking det(M - lam*I) == 0 for every M in M2(k).

    Raises:
        CountError: If (2k+1)^4 exceeds the enumeration limit
    """
    _check_k(k)
    _check_enumeration_guard(k, limit)

    vals = _entries(k)
    off_diagonal = np.multiply.outer(vals, vals)  # b*c
    shifted = vals - lam
    count = 0
    for a in shifted:
        # (a - lam)(d - lam) - bc over every (b, c, d)
        det = a * shifted[None, None, :] - off_diagonal[:, :, None]
        count += int(np.count_nonzero(det == 0))
    return count


def brute_force_count_integer_spectrum(k: int, limit: int = DEFAULT_ENUMERATION_LIMIT) -> int:
    """|M2^Z(k)| by exhaustive enumeration: disc must be a perfect square."""
    _check_k(k, minimum=0)
    _check_enumeration_guard(k, limit)

    vals = _entries(k)
    four_bc = 4 * np.multiply.outer(vals, vals)
    count = 0
    for a in vals:
        disc = (a - vals[None, None, :]) ** 2 + four_bc[:, :, None]
        nonneg = disc[disc >= 0]
        root = np.rint(np.sqrt(nonneg.astype(np.float64))).astype(np.int64)
        count += int(np.count_nonzero(root * root == nonneg))
    return count


def brute_force_count_repeated(k: int, limit: int = DEFAULT_ENUMERATION_LIMIT) -> int:
    """Matrices in M2(k) with disc == 0, by exhaustive enumeration."""
    _check_k(k, minimum=0)
    _check_enumeration_guard(k, limit)

    vals = _entries(k)
    four_bc = 4 * np.multiply.outer(vals, vals)
    return sum(
        int(np.count_nonzero((a - vals[None, None, :]) ** 2 + four_bc[:, :, None] == 0))
        for a in vals
    )


# Structural count


@lru_cache(maxsize=4)
def coprime_pairs(k: int) -> Tuple[np.ndarray, np.ndarray]:
    """All (a, b) with 1 <= a < b <= k and gcd(a, b) = 1, as int64 arrays."""
    a, b = np.triu_indices(k, 1)
    a = a.astype(np.int64) + 1
    b = b.astype(np.int64) + 1
    keep = np.gcd(a, b) == 1
    return a[keep], b[keep]


def zero_entry_count(k: int, lam: int) -> int:
    """
    Singular M - lam*I with at least one zero entry, for lam >= 0.

    A zero entry forces both products a'd' and bc to vanish, so the count is
    #{diagonal pairs with product 0} * #{off-diagonal pairs with product 0}.
    """
    diagonal_has_zero = 1 if lam <= k else 0
    n = 2 * k + 1
    diagonal = n * n - (n - diagonal_has_zero) ** 2
    off_diagonal = n * n - (n - 1) ** 2
    return diagonal * off_diagonal


def quadruple_count(k: int, lam: int) -> int:
    """
    Q = #{(a, b, c, d) nonzero, gcd(a, b) = 1, four entry bounds}, for lam >= 0.

    N(a, b) is invariant under sign flips of a or b and under a <-> b, and the
    only coprime diagonal pair is (1, 1), so Q = 4 N(1, 1) + 8 sum_{a<b} N(a, b).
    """
    a, b = coprime_pairs(k)
    off_diagonal = int(np.sum(pair_counts(k, lam, a, b))) if a.size else 0
    return 4 * int(pair_counts(k, lam, 1, 1)) + 8 * off_diagonal


def fast_count_lambda(k: int, lam: int) -> int:
    """
    Exact |M2^lam(k)| = Z + Q/2 in O(k^2) work.

    Negative lam is reduced through M -> -M.
    """
    _check_k(k)
    lam = abs(int(lam))
    if lam > 2 * k:
        return 0
    quadruples = quadruple_count(k, lam)
    if quadruples % 2:
        raise CountError(
            step="parity",
            error_message="quadruple count must be even",
            details=f"k={k}, lam={lam}, Q={quadruples}",
        )
    return zero_entry_count(k, lam) + quadruples // 2


def mobius_lambda_sum(k: int, lam: int) -> int:
    """
    4 sum_{d<=k} mu(d) sum_{1<=alpha<beta<=k/d} N(d alpha, d beta).

    Equals 4 sum over coprime a < b of N(a, b) exactly.
    """
    _check_k(k)
    lam = abs(int(lam))
    if lam > 2 * k:
        return 0
    mu = mobius_sieve(k)
    total = 0
    for d in range(1, k // 2 + 1):
        if mu[d] == 0:
            continue
        alpha, beta = np.triu_indices(k // d, 1)
        alpha = (alpha.astype(np.int64) + 1) * d
        beta = (beta.astype(np.int64) + 1) * d
        total += mu[d] * int(np.sum(pair_counts(k, lam, alpha, beta)))
    return 4 * total


def mobius_main_term(k: int, lam: int) -> float:
    """
    4 k^2 sum_{d<=k} mu(d)/d^2 sum_{1<=alpha<beta<=k/d} C(lam/k; alpha, beta) D(lam/k; alpha, beta).

    The C/D approximation of mobius_lambda_sum before the inner sums are
    replaced by V(delta)/beta.
    """
    _check_k(k)
    lam = abs(int(lam))
    if lam > 2 * k:
        return 0.0
    delta = lam / k
    mu = mobius_sieve(k)
    total = 0.0
    for d in range(1, k // 2 + 1):
        if mu[d] == 0:
            continue
        alpha, beta = np.triu_indices(k // d, 1)
        inner = float(np.sum(cd_products(delta, alpha + 1.0, beta + 1.0)))
        total += mu[d] * inner / d**2
    return 4 * k * k * total


# Asymptotics


def asymptotic_count_lambda(k: int, lam: int) -> float:
    """(24 V(lam/k) / pi^2) k^2 log k, natural log."""
    _check_k(k)
    if abs(lam) > 2 * k:
        raise CountError(
            step="validation",
            error_message="asymptotic formula needs |lam| <= 2k",
            details=f"k={k}, lam={lam}",
        )
    return 24 * v_density(lam / k) / pi**2 * k * k * log(k)


def integer_spectrum_main_term(k: int) -> float:
    """16 C k^3 log k with C = (7 sqrt2 + 4 + 3 log(sqrt2 + 1)) / (3 pi^2)."""
    _check_k(k)
    return 16 * constants_bundle().C * k**3 * log(k)


# Repeated eigenvalues and |M2^Z(k)|


def count_repeated(
    k: int, integer_only: bool = True, limit: int = DEFAULT_ENUMERATION_LIMIT
) -> int:
    """
    Matrices in M2(k) with disc = (a-d)^2 + 4bc = 0.

    a = d contributes (2k+1)(4k+1) (bc = 0). For a - d = t != 0, bc = -t^2/4
    needs t even; write t = 2s and split s^2 = e * (s^2/e) with both factors <= k,
    two sign choices each.

    integer_only is accepted for symmetry with the real-eigenvalue variant and
    does not change the result: with integer entries disc = 0 already forces
    a = d (mod 2), so every repeated eigenvalue (a + d)/2 is an integer.

    Raises:
        CountError: If (2k+1)^2 exceeds the enumeration limit
    """
    _check_k(k, minimum=0)
    _check_enumeration_guard(k, limit, power=2)

    count = (2 * k + 1) * (4 * k + 1)
    for t in range(1, 2 * k + 1):
        if t % 2:
            continue  # bc = -t^2/4 has no integer solution
        square = (t // 2) ** 2
        splits = sum(
            1
            for e in range(max(1, -(-square // k)), min(k, square) + 1)
            if square % e == 0 and square // e <= k
        )
        diagonal_pairs = 2 * (2 * k + 1 - t)  # a - d = +t or -t
        count += diagonal_pairs * 2 * splits
    return count


def count_repeated_integer(k: int, limit: int = DEFAULT_ENUMERATION_LIMIT) -> int:
    """Matrices in M2(k) with a repeated integer eigenvalue."""
    return count_repeated(k, integer_only=True, limit=limit)


def count_integer_spectrum(k: int) -> int:
    """
    |M2^Z(k)| = (sum_{|lam|<=2k} |M2^lam(k)| + #repeated) / 2.

    Integer trace means one integer eigenvalue forces the other; matrices
    with a repeated eigenvalue are counted once in the lam-sum.

    Raises:
        CountError: If the total is odd
    """
    _check_k(k, minimum=0)
    if k == 0:
        return 1

    total = fast_count_lambda(k, 0)
    for lam in range(1, 2 * k + 1):
        total += 2 * fast_count_lambda(k, lam)
        if lam % 64 == 0:
            logger.debug("integer spectrum k=%d: lam %d/%d", k, lam, 2 * k)
    total += count_repeated_integer(k)

    if total % 2:
        raise CountError(
            step="parity",
            error_message="lam-sum plus repeated correction must be even",
            details=f"k={k}, total={total}",
        )
    return total // 2


def count_report(k: int, lam: int, methods: Iterable[str] = METHODS) -> CountReport:
    """
    Run the requested counting methods for (k, lam).

    Raises:
        CountError: On unknown methods or if brute and fast disagree
    """
    methods = tuple(methods)
    unknown = [m for m in methods if m not in METHODS]
    if unknown:
        raise CountError(
            step="validation",
            error_message=f"unknown counting methods: {unknown}",
            details=f"valid methods: {list(METHODS)}",
        )

    brute: Optional[int] = brute_force_count_lambda(k, lam) if "brute" in methods else None
    fast = fast_count_lambda(k, lam)
    if brute is not None and brute != fast:
        raise CountError(
            step="oracle_mismatch",
            error_message="structural count disagrees with enumeration",
            details=f"k={k}, lam={lam}, brute={brute}, fast={fast}",
        )

    main_term = asymptotic_count_lambda(k, lam) if abs(lam) <= 2 * k else 0.0
    ratio = fast / main_term if main_term != 0 else None
    return CountReport(k=k, lam=lam, brute=brute, fast=fast, main_term=main_term, ratio=ratio)
