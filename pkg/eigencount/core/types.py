"""
Matrix value types.

Immutable dataclass definitions for 2x2 matrices and their spectra.
All fields are frozen. Construction validates the invariants, nothing else.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isfinite
from typing import Optional, Union

Number = Union[int, float, Fraction]


@dataclass(frozen=True)
class MatrixError(Exception):
    """Matrix operation error with structured information."""

    step: str  # "construction", "singular_representation"
    error_message: str
    details: Optional[str] = None

    def __str__(self) -> str:
        msg = f"[{self.step}] {self.error_message}"
        if self.details:
            msg += f"\n  Details: {self.details}"
        return msg


@dataclass(frozen=True)
class IntMatrix2:
    """
    2x2 integer matrix ((a, b), (c, d)) with entries bounded by k.

    Fields:
        a, b: top row
        c, d: bottom row
        k: entry bound, |entry| <= k
    """

    a: int
    b: int
    c: int
    d: int
    k: int

    def __post_init__(self):
        if self.k < 0:
            raise ValueError(f"bound k must be nonnegative, got {self.k}")
        for name in ("a", "b", "c", "d"):
            value = getattr(self, name)
            if not isinstance(value, int):
                raise ValueError(f"entry {name} must be an integer, got {value!r}")
            if abs(value) > self.k:
                raise ValueError(f"entry {name}={value} exceeds bound k={self.k}")

    @classmethod
    def from_rows(cls, rows: tuple, k: Optional[int] = None) -> "IntMatrix2":
        """Build from ((a, b), (c, d)); k defaults to the largest entry magnitude."""
        (a, b), (c, d) = rows
        bound = max(abs(a), abs(b), abs(c), abs(d)) if k is None else k
        return cls(a, b, c, d, bound)

    def rows(self) -> tuple:
        return ((self.a, self.b), (self.c, self.d))

    def shifted(self, lam: int) -> "IntMatrix2":
        """M - lam*I; the bound grows by |lam| so the result stays valid."""
        return IntMatrix2(self.a - lam, self.b, self.c, self.d - lam, self.k + abs(lam))


@dataclass(frozen=True)
class RealMatrix2:
    """2x2 real matrix ((a, b), (c, d)); element of M2([-1,1]) when sampled."""

    a: float
    b: float
    c: float
    d: float

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            if not isfinite(getattr(self, name)):
                raise ValueError(f"entry {name} must be finite")

    @classmethod
    def from_rows(cls, rows: tuple) -> "RealMatrix2":
        (a, b), (c, d) = rows
        return cls(float(a), float(b), float(c), float(d))

    def rows(self) -> tuple:
        return ((self.a, self.b), (self.c, self.d))


Matrix2 = Union[IntMatrix2, RealMatrix2]


# Spectrum classification (tagged union)


@dataclass(frozen=True)
class ComplexPair:
    """Non-real conjugate pair (disc < 0)."""


@dataclass(frozen=True)
class RealDistinct:
    """Two distinct real eigenvalues, low < high."""

    low: float
    high: float

    def __post_init__(self):
        if not self.low < self.high:
            raise ValueError(f"RealDistinct requires low < high, got {self.low}, {self.high}")

    def straddles_zero(self) -> bool:
        return self.low < 0 < self.high


@dataclass(frozen=True)
class Repeated:
    """A single repeated real eigenvalue (disc == 0)."""

    value: float


SpectrumClass = Union[ComplexPair, RealDistinct, Repeated]


# Singular matrix structure


@dataclass(frozen=True)
class ZeroPattern:
    """Singular matrix with at least two zero entries."""


@dataclass(frozen=True)
class Quadruple:
    """
    Singular matrix written as ((a*c, b*c), (a*d, b*d)).

    Canonical representative of the pair {(a,b,c,d), (-a,-b,-c,-d)}:
    gcd(a, b) = 1 and a > 0.
    """

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if 0 in (self.a, self.b, self.c, self.d):
            raise ValueError("Quadruple entries must be nonzero")
        if gcd(self.a, self.b) != 1:
            raise ValueError(f"gcd(a, b) must be 1, got gcd({self.a}, {self.b})")
        if self.a <= 0:
            raise ValueError("canonical Quadruple requires a > 0")

    def reconstruct(self) -> tuple:
        return ((self.a * self.c, self.b * self.c), (self.a * self.d, self.b * self.d))

    def negated(self) -> tuple:
        """The other valid (non-canonical) representation."""
        return (-self.a, -self.b, -self.c, -self.d)


SingularForm = Union[ZeroPattern, Quadruple]
