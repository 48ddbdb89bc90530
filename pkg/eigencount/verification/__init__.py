"""
Verification module exports.

Threshold registry (schema, validator, loader), the acceptance suites and
the runner behind `eigencount verify`.
"""

from eigencount.verification.loader import (
    DEFAULT_THRESHOLDS_PATH,
    ThresholdError,
    ThresholdLoader,
    load_thresholds,
)
from eigencount.verification.runner import VerificationReport, VerificationRunner
from eigencount.verification.schema import (
    AnalyticThresholds,
    MonteCarloThresholds,
    SmallKThresholds,
    Thresholds,
)
from eigencount.verification.suites import (
    SUITE_NAMES,
    AnalyticSuite,
    CheckResult,
    MonteCarloSuite,
    SmallKSuite,
    build_suites,
)
from eigencount.verification.validator import (
    ValidationError,
    ValidationResult,
    validate_thresholds,
)

__all__ = [
    "ThresholdError",
    "ThresholdLoader",
    "DEFAULT_THRESHOLDS_PATH",
    "load_thresholds",
    "Thresholds",
    "SmallKThresholds",
    "AnalyticThresholds",
    "MonteCarloThresholds",
    "ValidationError",
    "ValidationResult",
    "validate_thresholds",
    "CheckResult",
    "SmallKSuite",
    "AnalyticSuite",
    "MonteCarloSuite",
    "SUITE_NAMES",
    "build_suites",
    "VerificationRunner",
    "VerificationReport",
]
