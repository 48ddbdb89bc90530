"""
Monte Carlo summaries and errors.
"""

from dataclasses import dataclass, field
from typing import Optional

import numpy as np


@dataclass(frozen=True)
class SimulationError(Exception):
    """Sampling error with structured information."""

    step: str  # "validation", "bin_layout", "density_kind"
    error_message: str
    details: Optional[str] = None

    def __str__(self) -> str:
        msg = f"[{self.step}] {self.error_message}"
        if self.details:
            msg += f"\n  Details: {self.details}"
        return msg


@dataclass(frozen=True)
class EmpiricalSummary:
    """
    Eigenvalue statistics of n sampled matrices from M2([-1, 1]).

    Fields:
        samples: number of matrices
        real_pairs: matrices with disc >= 0 (repeated eigenvalues count as real)
        bin_edges: histogram edges on [-2, 2]
        bin_counts: real eigenvalues per bin, two per real-pair matrix
        max_abs_eigenvalue: largest |eigenvalue| seen
        sign_violations: samples where det < 0 disagrees with eigenvalues straddling 0
    """

    samples: int
    real_pairs: int
    bin_edges: np.ndarray = field(repr=False)
    bin_counts: np.ndarray = field(repr=False)
    max_abs_eigenvalue: float = 0.0
    sign_violations: int = 0

    def __post_init__(self):
        if self.samples < 1:
            raise ValueError("samples must be positive")
        if not 0 <= self.real_pairs <= self.samples:
            raise ValueError("real_pairs must lie in [0, samples]")
        if len(self.bin_edges) != len(self.bin_counts) + 1:
            raise ValueError("bin_edges must have one more entry than bin_counts")
        if int(np.sum(self.bin_counts)) != 2 * self.real_pairs:
            raise ValueError("histogram must hold exactly two eigenvalues per real pair")

    @property
    def bins(self) -> int:
        return len(self.bin_counts)

    @property
    def real_pair_frequency(self) -> float:
        return self.real_pairs / self.samples

    @property
    def complex_frequency(self) -> float:
        return (self.samples - self.real_pairs) / self.samples

    @property
    def eigen_histogram(self) -> np.ndarray:
        """Mean number of eigenvalues per matrix in each bin."""
        return self.bin_counts / self.samples

    @property
    def histogram_mass(self) -> float:
        return float(np.sum(self.bin_counts)) / self.samples


@dataclass(frozen=True)
class DensityComparison:
    """Binned comparison of a summary with a closed-form density."""

    sup_deviation: float
    chi_square: float
    expected_mass: np.ndarray = field(repr=False)
    empirical_mass: np.ndarray = field(repr=False)


@dataclass(frozen=True)
class ProductSummary:
    """Statistics of n sampled products BC."""

    samples: int
    ks_distance: float
    median: float
    max_product: float


@dataclass(frozen=True)
class IntegerSummary:
    """
    Integer-spectrum frequency over n matrices sampled from M2(k).

    Fields:
        exact_frequency: |M2^Z(k)| / (2k+1)^4, None when not computed
        asymptotic_frequency: C log k / k
    """

    k: int
    samples: int
    hits: int
    exact_frequency: Optional[float]
    asymptotic_frequency: float

    @property
    def frequency(self) -> float:
        return self.hits / self.samples


@dataclass(frozen=True)
class NuEstimate:
    """Sampled rho(x, y) with its standard error."""

    x: float
    y: float
    samples: int
    mean: float
    standard_error: float
