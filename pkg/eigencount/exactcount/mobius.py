"""
Möbius sieve.

mu(n) = (-1)^r if n is a product of r distinct primes, 0 if a square divides n.
Partial sums of mu(d)/d^2 approach 6/pi^2 with an O(1/n) tail.
"""

import logging
from functools import lru_cache

import numpy as np

from eigencount.exactcount.types import CountError, MobiusTable

logger = logging.getLogger(__name__)


def prime_sieve(nmax: int) -> np.ndarray:
    """Primes <= nmax by the sieve of Eratosthenes."""
    if nmax < 2:
        return np.array([], dtype=np.int64)

    is_prime = np.ones(nmax + 1, dtype=bool)
    is_prime[:2] = False
    for i in range(2, int(nmax**0.5) + 1):
        if is_prime[i]:
            is_prime[i * i :: i] = False
    return np.nonzero(is_prime)[0].astype(np.int64)


@lru_cache(maxsize=8)
def mobius_sieve(n: int) -> MobiusTable:
    """
    Tabulate mu(1..n).

    Each prime p flips the sign of its multiples; multiples of p^2 are zeroed.

    Raises:
        CountError: If n < 1
    """
    if n < 1:
        raise CountError(
            step="validation",
            error_message="Möbius table needs n >= 1",
            details=f"n = {n}",
        )

    mu = np.ones(n + 1, dtype=np.int8)
    mu[0] = 0
    for p in prime_sieve(n):
        mu[p::p] *= -1
        mu[p * p :: p * p] = 0
    # cached tables are shared between callers
    mu.flags.writeable = False

    logger.debug("mobius sieve up to %d", n)
    return MobiusTable(limit=n, values=mu)
