"""
Threshold registry validator.

Pure validation functions: they return structured errors and never raise.
"""

from dataclasses import dataclass
from math import sqrt
from typing import List

from eigencount.closedform.constants import REAL_PAIR_PROBABILITY, SQRT2
from eigencount.exactcount.counting import DEFAULT_ENUMERATION_LIMIT
from eigencount.verification.schema import Thresholds

# Derivative grid must stay this far from 1 and sqrt2
KINK_MARGIN = 0.02


@dataclass(frozen=True)
class ValidationError:
    """Result of a failed validation."""

    field: str
    error: str
    severity: str  # "error" or "warning"


@dataclass(frozen=True)
class ValidationResult:
    """Result of validation (success or errors)."""

    valid: bool
    errors: List[ValidationError]

    def has_critical_errors(self) -> bool:
        return any(e.severity == "error" for e in self.errors)


def validate_thresholds(thresholds: Thresholds) -> ValidationResult:
    """
    Validate a threshold registry.

    Rules enforced:
    1. small-k brute force stays under the enumeration guard
    2. anchor counts are nonnegative
    3. derivative grid avoids the kinks at 1 and sqrt2 and the ends of [0, 2]
    4. C/D deltas lie in [0, 2], betas and lattice ks are positive
    5. asymptotic ks are increasing and at least 2
    6. Monte Carlo tolerances are not tighter than 3 standard errors (warning)
    7. quadrature noise is small against the derivative step (warning)
    """
    errors: List[ValidationError] = []
    small_k = thresholds.small_k
    analytic = thresholds.analytic
    montecarlo = thresholds.montecarlo

    # Rule 1
    if (2 * small_k.max_k + 1) ** 4 > DEFAULT_ENUMERATION_LIMIT:
        errors.append(
            ValidationError(
                field="small_k.max_k",
                error=f"brute force at k = {small_k.max_k} exceeds the enumeration guard",
                severity="error",
            )
        )

    # Rule 2
    if any(count < 0 for count in small_k.anchor_counts):
        errors.append(
            ValidationError(
                field="small_k.anchor_counts",
                error=f"counts cannot be negative, got {small_k.anchor_counts}",
                severity="error",
            )
        )

    # Rule 3
    h = analytic.derivative_step
    for delta in analytic.derivative_grid:
        if not h <= delta <= 2.0 - h:
            errors.append(
                ValidationError(
                    field="analytic.derivative_grid",
                    error=f"delta = {delta} leaves [h, 2 - h] with h = {h}",
                    severity="error",
                )
            )
        elif min(abs(delta - 1.0), abs(delta - SQRT2)) < KINK_MARGIN:
            errors.append(
                ValidationError(
                    field="analytic.derivative_grid",
                    error=f"delta = {delta} is within {KINK_MARGIN} of a kink of W",
                    severity="error",
                )
            )

    # Rule 4
    if any(not 0.0 <= delta <= 2.0 for delta in analytic.cd_deltas):
        errors.append(
            ValidationError(
                field="analytic.cd_deltas",
                error=f"deltas must lie in [0, 2], got {analytic.cd_deltas}",
                severity="error",
            )
        )
    for name in ("cd_betas", "lattice_ks"):
        values = getattr(analytic, name)
        if any(v < 1 for v in values):
            errors.append(
                ValidationError(
                    field=f"analytic.{name}",
                    error=f"values must be positive integers, got {values}",
                    severity="error",
                )
            )

    # Rule 5
    ks = analytic.asymptotic_ks
    if ks[0] < 2 or any(b <= a for a, b in zip(ks, ks[1:])):
        errors.append(
            ValidationError(
                field="analytic.asymptotic_ks",
                error=f"ks must be increasing and >= 2 (log k > 0), got {ks}",
                severity="error",
            )
        )

    # Rule 6
    sigma = sqrt(REAL_PAIR_PROBABILITY * (1.0 - REAL_PAIR_PROBABILITY) / montecarlo.samples)
    if montecarlo.real_pair_tol < 3.0 * sigma:
        errors.append(
            ValidationError(
                field="montecarlo.real_pair_tol",
                error=f"tolerance {montecarlo.real_pair_tol} is under 3 standard errors "
                f"({3.0 * sigma:.2e}) at {montecarlo.samples} samples",
                severity="warning",
            )
        )

    # Rule 7
    if analytic.derivative_quad_tol > 0.1 * analytic.derivative_tol * h:
        errors.append(
            ValidationError(
                field="analytic.derivative_quad_tol",
                error="quadrature tolerance is large against derivative_tol * derivative_step",
                severity="warning",
            )
        )

    has_critical_errors = any(e.severity == "error" for e in errors)
    return ValidationResult(valid=not has_critical_errors, errors=errors)
