"""
Characteristic invariants and spectrum structure of 2x2 matrices.

Responsibilities:
- trace / determinant / discriminant
- classify the eigenvalue pair from the sign of the discriminant
- Gershgorin magnitude bound
- canonical (a, b, c, d) representation of singular integer matrices

All functions are pure. Eigenvalues come from the quadratic formula on
(trace, determinant); no general eigensolver is involved.
"""

from fractions import Fraction
from math import gcd, sqrt
from typing import Tuple

from eigencount.core.types import (
    ComplexPair,
    IntMatrix2,
    Matrix2,
    MatrixError,
    Number,
    Quadruple,
    RealDistinct,
    RealMatrix2,
    Repeated,
    SingularForm,
    SpectrumClass,
    ZeroPattern,
)

MATRIX_SIZE = 2


def char_invariants(m: Matrix2) -> Tuple[Number, Number, Number]:
    """
    Compute (trace, determinant, discriminant).

    disc = (a - d)^2 + 4bc, which equals trace^2 - 4*det; the identity is
    exact for IntMatrix2 since everything stays in Python integers.
    """
    trace = m.a + m.d
    det = m.a * m.d - m.b * m.c
    disc = (m.a - m.d) ** 2 + 4 * m.b * m.c
    return trace, det, disc


def _exact_disc_sign(m: Matrix2) -> int:
    # floats are dyadic rationals, so the sign is decided without rounding
    a, b, c, d = (Fraction(v) for v in (m.a, m.b, m.c, m.d))
    disc = (a - d) ** 2 + 4 * b * c
    return (disc > 0) - (disc < 0)


def classify_spectrum(m: Matrix2) -> SpectrumClass:
    """
    Classify the eigenvalue pair of m.

    Returns:
        ComplexPair if disc < 0
        Repeated((a + d) / 2) if disc == 0
        RealDistinct((tr - sqrt(disc)) / 2, (tr + sqrt(disc)) / 2) if disc > 0
    """
    sign = _exact_disc_sign(m)
    trace, _, disc = char_invariants(m)

    if sign < 0:
        return ComplexPair()
    if sign == 0:
        return Repeated(float(trace) / 2)

    root = sqrt(float(disc)) if disc > 0 else 0.0
    low = (float(trace) - root) / 2
    high = (float(trace) + root) / 2
    if not low < high:
        # disc is a positive rational too small to separate the roots in floating point
        return Repeated(float(trace) / 2)
    return RealDistinct(low, high)


def eigenvalues(m: Matrix2) -> Tuple[float, ...]:
    """Real eigenvalues of m in increasing order (empty for a complex pair)."""
    spectrum = classify_spectrum(m)
    if isinstance(spectrum, RealDistinct):
        return (spectrum.low, spectrum.high)
    if isinstance(spectrum, Repeated):
        return (spectrum.value, spectrum.value)
    return ()


def gershgorin_bound(m: Matrix2) -> float:
    """n * B with n = 2 and B the largest entry magnitude; bounds every |eigenvalue|."""
    largest = max(abs(m.a), abs(m.b), abs(m.c), abs(m.d))
    return float(MATRIX_SIZE * largest)


def singular_representation(m: IntMatrix2) -> SingularForm:
    """
    Structure of a singular integer matrix.

    Either at least two entries vanish (ZeroPattern), or
    m = ((a*c, b*c), (a*d, b*d)) with gcd(a, b) = 1. The top-row gcd gives c,
    the remaining factors follow; the sign is fixed so that a > 0.

    Raises:
        MatrixError: If m is not singular
    """
    _, det, _ = char_invariants(m)
    if det != 0:
        raise MatrixError(
            step="singular_representation",
            error_message="Matrix is not singular",
            details=f"det{m.rows()} = {det}",
        )

    if 0 in (m.a, m.b, m.c, m.d):
        return ZeroPattern()

    c = gcd(m.a, m.b)
    a, b = m.a // c, m.b // c
    # second row is d times (a, b); a divides m.c exactly because gcd(a, b) = 1
    d = m.c // a

    if a < 0:
        a, b, c, d = -a, -b, -c, -d
    return Quadruple(a, b, c, d)
