"""
Tests for the prime and Möbius sieves.
"""

from math import pi

import numpy as np
import pytest

from eigencount.exactcount import CountError, mobius_sieve, prime_sieve


def test_primes_up_to_twenty():
    """Sieve of Eratosthenes."""
    assert prime_sieve(20).tolist() == [2, 3, 5, 7, 11, 13, 17, 19]
    assert prime_sieve(1).size == 0


def test_first_values():
    """mu(1..6) = 1, -1, -1, 0, -1, 1."""
    assert mobius_sieve(6).as_list() == [1, -1, -1, 0, -1, 1]


def test_square_factors_vanish():
    """mu(12) = 0 since 4 divides 12; mu(30) = -1."""
    table = mobius_sieve(30)
    assert table[12] == 0
    assert table[30] == -1


def test_table_bounds():
    """Index 0 and indices past the limit are outside the table."""
    table = mobius_sieve(10)
    with pytest.raises(IndexError):
        table[0]
    with pytest.raises(IndexError):
        table[11]


def test_rejects_empty_table():
    """n < 1 raises CountError."""
    with pytest.raises(CountError) as exc_info:
        mobius_sieve(0)
    assert exc_info.value.step == "validation"


def test_divisor_sum_identity():
    """sum_{d | m} mu(d) is 1 for m = 1 and 0 otherwise."""
    limit = 2000
    table = mobius_sieve(limit)
    sums = np.zeros(limit + 1, dtype=np.int64)
    for d in range(1, limit + 1):
        sums[d::d] += table.values[d]
    assert sums[1] == 1
    assert not np.any(sums[2:])


def test_weighted_sum_tail():
    """sum_{d <= n} mu(d)/d^2 is within 1/n of 6/pi^2."""
    for n in (100, 1000, 10000):
        assert abs(mobius_sieve(n).weighted_sum() - 6 / pi**2) < 1.0 / n


def test_cached_table_is_read_only():
    """Repeated calls share one table; its values cannot be overwritten."""
    table = mobius_sieve(50)
    assert mobius_sieve(50) is table
    with pytest.raises(ValueError):
        table.values[2] = 1
    assert table[2] == -1
