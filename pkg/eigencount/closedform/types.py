"""
Closed-form value types and errors.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

import numpy as np
from scipy.integrate import trapezoid as trapezoid_rule


@dataclass(frozen=True)
class ClosedFormError(Exception):
    """Closed-form evaluation error with structured information."""

    step: str  # "validation", "density_kind", "domain"
    error_message: str
    details: Optional[str] = None

    def __str__(self) -> str:
        msg = f"[{self.step}] {self.error_message}"
        if self.details:
            msg += f"\n  Details: {self.details}"
        return msg


@dataclass(frozen=True)
class QuadratureError(Exception):
    """Quadrature failure: tolerance not reached or evaluation budget spent."""

    step: str  # "tolerance", "budget", "validation"
    error_message: str
    details: Optional[str] = None

    def __str__(self) -> str:
        msg = f"[{self.step}] {self.error_message}"
        if self.details:
            msg += f"\n  Details: {self.details}"
        return msg


class DensityKind(str, Enum):
    """V and W densities, and their area-2 normalizations UZ and UR."""

    V = "V"
    W = "W"
    UZ = "UZ"
    UR = "UR"

    @classmethod
    def parse(cls, name: str) -> "DensityKind":
        try:
            return cls(name.upper())
        except ValueError:
            raise ClosedFormError(
                step="density_kind",
                error_message=f"unknown density kind '{name}'",
                details=f"valid kinds: {[k.value for k in cls]}",
            )


@dataclass(frozen=True)
class QuadratureResult:
    """
    Outcome of one adaptive quadrature.

    The requested tolerance is absolute for |value| <= 1 and relative above:
    an accepted result has error_estimate <= tol * max(1, |value|).

    Fields:
        value: integral estimate
        error_estimate: absolute error estimate reported by the integrator
        evaluations: integrand evaluations spent
    """

    value: float
    error_estimate: float
    evaluations: int

    def __post_init__(self):
        if self.error_estimate < 0:
            raise ValueError("error_estimate cannot be negative")
        if self.evaluations < 0:
            raise ValueError("evaluations cannot be negative")


@dataclass(frozen=True)
class DensityTable:
    """
    A density tabulated on a strictly increasing grid in [-2.005, 2.005].

    Fields:
        kind: which density
        grid: delta values
        values: density at each grid point
    """

    kind: DensityKind
    grid: np.ndarray = field(repr=False)
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        if self.grid.shape != self.values.shape or self.grid.ndim != 1:
            raise ValueError("grid and values must be 1-D arrays of equal length")
        if self.grid.size > 1 and not np.all(np.diff(self.grid) > 0):
            raise ValueError("grid must be strictly increasing")
        if np.any(self.values < 0):
            raise ValueError("density values cannot be negative")

    def trapezoid(self) -> float:
        """Trapezoid-rule integral over the table grid."""
        return float(trapezoid_rule(self.values, self.grid))

    def rows(self):
        """(delta, value) pairs in grid order."""
        return zip(self.grid.tolist(), self.values.tolist())
