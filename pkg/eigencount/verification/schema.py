"""
Threshold registry schema.

Immutable dataclasses for the acceptance thresholds read from
thresholds.yaml. Basic type-level constraints are checked on construction;
policy checks live in the validator.
"""

from dataclasses import dataclass
from typing import List


@dataclass(frozen=True)
class SmallKThresholds:
    """
    Exact-count oracle checks.

    Fields:
        max_k: oracle equivalence is checked for k = 1..max_k
        mobius_limit: Möbius identity checked for every m <= mobius_limit
        anchor_counts: |M2^0(1)|, |M2^1(1)|, repeated(1), |M2^Z(1)|
    """

    max_k: int
    mobius_limit: int
    anchor_counts: List[int]

    def __post_init__(self):
        if self.max_k < 1:
            raise ValueError("max_k must be at least 1")
        if self.mobius_limit < 1:
            raise ValueError("mobius_limit must be at least 1")
        if len(self.anchor_counts) != 4:
            raise ValueError("anchor_counts needs exactly four values")


@dataclass(frozen=True)
class AnalyticThresholds:
    """
    Closed-form identities and numerical cross-checks.

    Fields:
        identity_tol: pointwise identities (W(0) = 5/9, boundary form of W)
        integral_tol: integrals of V and W
        continuity_tol: branch-point gaps
        continuity_offset: offset from a branch point for one-sided limits
        argmax: expected maximizer of W
        argmax_tol: allowed distance from argmax
        derivative_step: h in the central difference of F_W
        derivative_tol: allowed |W + dF_W/d(delta)|
        derivative_quad_tol: quadrature tolerance for the F_W evaluations
        derivative_grid: delta values for the derivative check
        f_w_minus_tol: allowed error of F_W(0) against 49/72
        bound_constant: constant in the C/D error bounds
        cd_deltas: delta values for the partial-sum bound
        cd_betas: beta values for the partial-sum bound
        lattice_ks: k values for the N vs k^2 C D bound
        table_area_tol: allowed deviation of UZ/UR table areas from 2
        density_fd_tol: allowed error of the f_bc central difference
        asymptotic_ks: k values for the lam = 0 ratio trend
        asymptotic_ratio_tol: allowed |ratio - 1| at the largest k
    """

    identity_tol: float
    integral_tol: float
    continuity_tol: float
    continuity_offset: float
    argmax: float
    argmax_tol: float
    derivative_step: float
    derivative_tol: float
    derivative_quad_tol: float
    derivative_grid: List[float]
    f_w_minus_tol: float
    bound_constant: float
    cd_deltas: List[float]
    cd_betas: List[int]
    lattice_ks: List[int]
    table_area_tol: float
    density_fd_tol: float
    asymptotic_ks: List[int]
    asymptotic_ratio_tol: float

    def __post_init__(self):
        for name in (
            "identity_tol",
            "integral_tol",
            "continuity_tol",
            "continuity_offset",
            "argmax_tol",
            "derivative_step",
            "derivative_tol",
            "derivative_quad_tol",
            "f_w_minus_tol",
            "bound_constant",
            "table_area_tol",
            "density_fd_tol",
            "asymptotic_ratio_tol",
        ):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        for name in ("derivative_grid", "cd_deltas", "cd_betas", "lattice_ks", "asymptotic_ks"):
            if not getattr(self, name):
                raise ValueError(f"{name} cannot be empty")


@dataclass(frozen=True)
class MonteCarloThresholds:
    """
    Statistical checks against the closed forms.

    Fields:
        seed: master seed of every stream
        samples: matrices per experiment
        bins: histogram bins on [-2, 2]
        real_pair_tol: allowed |frequency - 49/72|
        sup_deviation: allowed binned deviation from W
        ks_distance: allowed KS distance of BC from f_bc
        nu_points: number of (x, y) points for the nu check
        nu_samples: samples per nu point
        nu_sigmas: allowed standard errors for the nu check
    """

    seed: int
    samples: int
    bins: int
    real_pair_tol: float
    sup_deviation: float
    ks_distance: float
    nu_points: int
    nu_samples: int
    nu_sigmas: float

    def __post_init__(self):
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be an unsigned 64-bit integer")
        if self.samples < 1 or self.nu_samples < 1 or self.nu_points < 1:
            raise ValueError("sample counts must be positive")
        if self.bins < 2:
            raise ValueError("bins must be at least 2")
        for name in ("real_pair_tol", "sup_deviation", "ks_distance", "nu_sigmas"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")


@dataclass(frozen=True)
class Thresholds:
    """Every threshold used by `eigencount verify`."""

    version: str
    small_k: SmallKThresholds
    analytic: AnalyticThresholds
    montecarlo: MonteCarloThresholds
