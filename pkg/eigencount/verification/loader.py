"""
Threshold registry loader.

Loads thresholds.yaml (or another YAML file with the same layout), builds the
schema dataclasses and runs the validator. Hard-fails on anything invalid.
"""

from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Union

import yaml

from eigencount.verification.schema import (
    AnalyticThresholds,
    MonteCarloThresholds,
    SmallKThresholds,
    Thresholds,
)
from eigencount.verification.validator import validate_thresholds

DEFAULT_THRESHOLDS_PATH = Path(__file__).parent / "thresholds.yaml"

SECTIONS = {
    "small_k": SmallKThresholds,
    "analytic": AnalyticThresholds,
    "montecarlo": MonteCarloThresholds,
}


@dataclass(frozen=True)
class ThresholdError(Exception):
    """Loader error with structured information."""

    step: str  # "file_load", "parse", "validation"
    error_message: str
    path: Optional[str] = None
    details: Optional[str] = None

    def __str__(self) -> str:
        msg = f"[{self.step}] {self.error_message}"
        if self.details:
            msg += f"\n  Details: {self.details}"
        return msg


class ThresholdLoader:
    """Load and validate the verification threshold registry."""

    def __init__(self, path: Optional[Union[str, Path]] = None):
        self.path = Path(path) if path is not None else DEFAULT_THRESHOLDS_PATH

    def load(self) -> Thresholds:
        """
        Load thresholds from self.path.

        Raises:
            ThresholdError: If the file is missing, unparsable or invalid
        """
        if not self.path.exists():
            raise ThresholdError(
                step="file_load",
                error_message=f"Threshold registry not found: {self.path}",
                path=str(self.path),
            )

        try:
            with open(self.path, "r", encoding="utf-8") as f:
                raw = yaml.safe_load(f)
        except yaml.YAMLError as e:
            raise ThresholdError(
                step="parse",
                error_message="Failed to parse threshold registry",
                path=str(self.path),
                details=str(e),
            )
        return self.load_from_dict(raw, path=str(self.path))

    def load_from_dict(self, raw: object, path: Optional[str] = None) -> Thresholds:
        """
        Build thresholds from an already parsed mapping.

        Raises:
            ThresholdError: If sections are missing or values are invalid
        """
        if not isinstance(raw, dict):
            raise ThresholdError(
                step="parse",
                error_message="Threshold registry must be a mapping",
                path=path,
                details=f"got {type(raw).__name__}",
            )

        missing = [name for name in SECTIONS if not isinstance(raw.get(name), dict)]
        if missing:
            raise ThresholdError(
                step="parse",
                error_message=f"Missing sections: {missing}",
                path=path,
            )

        try:
            sections = {name: cls(**raw[name]) for name, cls in SECTIONS.items()}
            thresholds = Thresholds(version=str(raw.get("version", "1")), **sections)
        except TypeError as e:
            raise ThresholdError(
                step="parse",
                error_message="Missing or unknown threshold fields",
                path=path,
                details=str(e),
            )
        except ValueError as e:
            raise ThresholdError(
                step="parse",
                error_message="Invalid threshold values",
                path=path,
                details=str(e),
            )

        result = validate_thresholds(thresholds)
        if not result.valid:
            details = "\n".join(f"  [{e.field}] {e.error} ({e.severity})" for e in result.errors)
            raise ThresholdError(
                step="validation",
                error_message="Threshold registry failed validation",
                path=path,
                details=details,
            )
        return thresholds


def load_thresholds(path: Optional[Union[str, Path]] = None) -> Thresholds:
    """Load the packaged registry, or the file at `path`."""
    return ThresholdLoader(path).load()
