"""
Core matrix module exports.

Exact 2x2 matrix types, characteristic invariants, spectrum classification
and the singular-matrix structure.
"""

from eigencount.core.spectrum import (
    char_invariants,
    classify_spectrum,
    eigenvalues,
    gershgorin_bound,
    singular_representation,
)
from eigencount.core.types import (
    ComplexPair,
    IntMatrix2,
    MatrixError,
    Quadruple,
    RealDistinct,
    RealMatrix2,
    Repeated,
    SingularForm,
    SpectrumClass,
    ZeroPattern,
)

__all__ = [
    "IntMatrix2",
    "RealMatrix2",
    "ComplexPair",
    "RealDistinct",
    "Repeated",
    "SpectrumClass",
    "ZeroPattern",
    "Quadruple",
    "SingularForm",
    "MatrixError",
    "char_invariants",
    "classify_spectrum",
    "eigenvalues",
    "gershgorin_bound",
    "singular_representation",
]
