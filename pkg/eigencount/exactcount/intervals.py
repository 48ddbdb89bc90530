"""
Interval counts behind the structural counter.

N_{k,lam}(a, b) counts nonzero integer pairs (c, d) with
|ac + lam|, |bc|, |ad|, |bd + lam| <= k. For positive a, b the constraints
split into one interval for c and one for d, so N is a product of two
one-dimensional nonzero-integer counts. C and D are the continuum versions
of those two interval lengths (divided by k).
"""

from typing import Union

import numpy as np

from eigencount.exactcount.types import CDPair, CountError

IntArray = Union[int, np.ndarray]


def nonzero_integers_between(lo: IntArray, hi: IntArray) -> IntArray:
    """#{t in Z \\ {0} : lo <= t <= hi} for integer bounds; 0 when hi < lo."""
    span = np.maximum(hi - lo + 1, 0)
    has_zero = np.where((lo <= 0) & (hi >= 0), 1, 0)
    return span - has_zero


def _ceil_div(p: IntArray, q: IntArray) -> IntArray:
    return -((-p) // q)


def pair_counts(k: int, lam: int, a: IntArray, b: IntArray) -> IntArray:
    """
    N_{k,lam}(a, b) for positive a, b (scalars or int64 arrays), lam >= 0.

    c ranges over [max(ceil((-k-lam)/a), ceil(-k/b)), min(floor((k-lam)/a), floor(k/b))],
    d over [max(ceil(-k/a), ceil((-k-lam)/b)), min(floor(k/a), floor((k-lam)/b))].
    """
    c_lo = np.maximum(_ceil_div(-k - lam, a), _ceil_div(-k, b))
    c_hi = np.minimum((k - lam) // a, k // b)
    d_lo = np.maximum(_ceil_div(-k, a), _ceil_div(-k - lam, b))
    d_hi = np.minimum(k // a, (k - lam) // b)
    return nonzero_integers_between(c_lo, c_hi) * nonzero_integers_between(d_lo, d_hi)


def n_k_lambda(k: int, lam: int, x: int, y: int) -> int:
    """
    Exact N_{k,lam}(x, y) for 0 <= lam <= 2k and 1 <= x <= y <= k.

    Raises:
        CountError: If the parameters are out of range
    """
    if k < 1 or not 0 <= lam <= 2 * k or not 1 <= x <= y <= k:
        raise CountError(
            step="validation",
            error_message="n_k_lambda needs k >= 1, 0 <= lam <= 2k and 1 <= x <= y <= k",
            details=f"k={k}, lam={lam}, x={x}, y={y}",
        )
    return int(pair_counts(k, lam, x, y))


def n_pair_oracle(k: int, lam: int, a: int, b: int) -> int:
    """N_{k,lam}(a, b) by enumerating every (c, d); any nonzero a, b."""
    if a == 0 or b == 0:
        raise CountError(
            step="validation",
            error_message="N is defined for nonzero a, b",
            details=f"a={a}, b={b}",
        )
    count = 0
    for c in range(-k, k + 1):
        if c == 0 or abs(a * c + lam) > k or abs(b * c) > k:
            continue
        for d in range(-k, k + 1):
            if d != 0 and abs(a * d) <= k and abs(b * d + lam) <= k:
                count += 1
    return count


def _check_delta(delta: float) -> None:
    if not 0.0 <= delta <= 2.0:
        raise CountError(
            step="validation",
            error_message="delta must lie in [0, 2]",
            details=f"delta = {delta}",
        )


def cd_factors(delta: float, x: float, y: float) -> CDPair:
    """
    C = max{0, min{(1-delta)/x + 1/y, 2/y}},  D = min{(1-delta)/y + 1/x, 2/y}.

    Raises:
        CountError: If delta is outside [0, 2] or not 0 < x <= y
    """
    _check_delta(delta)
    if not 0 < x <= y:
        raise CountError(
            step="validation",
            error_message="cd_factors needs 0 < x <= y",
            details=f"x={x}, y={y}",
        )
    c_factor = max(0.0, min((1 - delta) / x + 1 / y, 2 / y))
    d_factor = min((1 - delta) / y + 1 / x, 2 / y)
    return CDPair(C=c_factor, D=d_factor)


def cd_products(delta: float, alpha: np.ndarray, beta: np.ndarray) -> np.ndarray:
    """Vectorized C(delta; alpha, beta) * D(delta; alpha, beta)."""
    alpha = np.asarray(alpha, dtype=np.float64)
    beta = np.asarray(beta, dtype=np.float64)
    c_factor = np.maximum(0.0, np.minimum((1 - delta) / alpha + 1 / beta, 2 / beta))
    d_factor = np.minimum((1 - delta) / beta + 1 / alpha, 2 / beta)
    return c_factor * d_factor


def cd_partial_sum(delta: float, beta: int) -> float:
    """
    sum_{1 <= alpha < beta} C(delta; alpha, beta) D(delta; alpha, beta).

    beta times this sum tends to V(delta) with error O((1 + log beta) / beta).
    """
    _check_delta(delta)
    if beta < 1:
        raise CountError(
            step="validation",
            error_message="beta must be at least 1",
            details=f"beta = {beta}",
        )
    alpha = np.arange(1, beta, dtype=np.float64)
    if alpha.size == 0:
        return 0.0
    return float(np.sum(cd_products(delta, alpha, np.full_like(alpha, float(beta)))))
