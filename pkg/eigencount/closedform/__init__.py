"""
Closed-form module exports.

The densities V and W, the product-distribution kernels, nu and its
antiderivatives, quadrature of the densities and of F_W, and the constants.
"""

from eigencount.closedform.constants import (
    BREAKPOINTS,
    INTEGER_SPECTRUM_CONSTANT,
    REAL_PAIR_PROBABILITY,
    V_INTEGRAL,
    W_INTEGRAL,
    ConstantsBundle,
    constants_bundle,
)
from eigencount.closedform.densities import (
    antiderivatives_nu,
    default_grid,
    density,
    f_bc,
    g_function,
    nu,
    nu_probability,
    tabulate,
    v_density,
    w_density,
    w_from_boundary,
)
from eigencount.closedform.extremum import argmax_w, golden_section_max
from eigencount.closedform.quadrature import (
    DEFAULT_TOL_1D,
    DEFAULT_TOL_2D,
    EVALUATION_BUDGET,
    f_w_minus,
    integrate_density,
)
from eigencount.closedform.types import (
    ClosedFormError,
    DensityKind,
    DensityTable,
    QuadratureError,
    QuadratureResult,
)

__all__ = [
    "ClosedFormError",
    "QuadratureError",
    "DensityKind",
    "DensityTable",
    "QuadratureResult",
    "ConstantsBundle",
    "BREAKPOINTS",
    "INTEGER_SPECTRUM_CONSTANT",
    "REAL_PAIR_PROBABILITY",
    "V_INTEGRAL",
    "W_INTEGRAL",
    "DEFAULT_TOL_1D",
    "DEFAULT_TOL_2D",
    "EVALUATION_BUDGET",
    "v_density",
    "w_density",
    "g_function",
    "f_bc",
    "nu",
    "nu_probability",
    "antiderivatives_nu",
    "w_from_boundary",
    "density",
    "default_grid",
    "tabulate",
    "integrate_density",
    "f_w_minus",
    "constants_bundle",
    "argmax_w",
    "golden_section_max",
]
