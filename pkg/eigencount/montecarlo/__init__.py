"""
Monte Carlo module exports.
"""

from eigencount.montecarlo.experiments import (
    classify_batch,
    compare_to_density,
    integer_experiment,
    nu_experiment,
    product_experiment,
    real_pair_standard_error,
    run_experiment,
    uniform_edges,
)
from eigencount.montecarlo.streams import CHUNK_SIZE, DEFAULT_SEED, SeedSpec, chunk_sizes
from eigencount.montecarlo.types import (
    DensityComparison,
    EmpiricalSummary,
    IntegerSummary,
    NuEstimate,
    ProductSummary,
    SimulationError,
)

__all__ = [
    "SimulationError",
    "SeedSpec",
    "DEFAULT_SEED",
    "CHUNK_SIZE",
    "chunk_sizes",
    "EmpiricalSummary",
    "DensityComparison",
    "ProductSummary",
    "IntegerSummary",
    "NuEstimate",
    "classify_batch",
    "uniform_edges",
    "run_experiment",
    "compare_to_density",
    "product_experiment",
    "nu_experiment",
    "integer_experiment",
    "real_pair_standard_error",
]
