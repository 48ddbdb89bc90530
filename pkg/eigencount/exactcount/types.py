"""
Counting value types and errors.
"""

from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np


@dataclass(frozen=True)
class CountError(Exception):
    """Counting error with structured information."""

    step: str  # "validation", "enumeration_guard", "parity", "oracle_mismatch"
    error_message: str
    details: Optional[str] = None

    def __str__(self) -> str:
        msg = f"[{self.step}] {self.error_message}"
        if self.details:
            msg += f"\n  Details: {self.details}"
        return msg


@dataclass(frozen=True)
class MobiusTable:
    """
    Möbius function values mu(0..limit); index 0 is unused and holds 0.

    Fields:
        limit: largest argument n
        values: int8 array of length limit + 1
    """

    limit: int
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        if self.limit < 1:
            raise ValueError(f"limit must be at least 1, got {self.limit}")
        if len(self.values) != self.limit + 1:
            raise ValueError("values must hold mu(0..limit)")

    def __getitem__(self, m: int) -> int:
        if not 1 <= m <= self.limit:
            raise IndexError(f"mu({m}) outside table 1..{self.limit}")
        return int(self.values[m])

    def as_list(self) -> List[int]:
        """mu(1), ..., mu(limit)."""
        return [int(v) for v in self.values[1:]]

    def weighted_sum(self, power: int = 2) -> float:
        """sum_{d <= limit} mu(d) / d^power."""
        d = np.arange(1, self.limit + 1, dtype=np.float64)
        return float(np.sum(self.values[1:] / d**power))


@dataclass(frozen=True)
class CDPair:
    """Continuum interval-length factors C(delta; x, y), D(delta; x, y)."""

    C: float
    D: float


@dataclass(frozen=True)
class CountReport:
    """
    Result of one counting query.

    Fields:
        k: entry bound
        lam: prescribed eigenvalue
        brute: exhaustive count, None when not computed
        fast: structural count
        main_term: (24 V(lam/k) / pi^2) k^2 log k
        ratio: fast / main_term, None when main_term == 0
    """

    k: int
    lam: int
    brute: Optional[int]
    fast: int
    main_term: float
    ratio: Optional[float]

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"k must be positive, got {self.k}")
        if self.fast < 0:
            raise ValueError("fast count cannot be negative")
        if self.brute is not None and self.brute != self.fast:
            raise ValueError(f"brute ({self.brute}) and fast ({self.fast}) counts disagree")
        if abs(self.lam) > 2 * self.k and self.fast != 0:
            raise ValueError("no matrix in M2(k) has an eigenvalue beyond 2k")
