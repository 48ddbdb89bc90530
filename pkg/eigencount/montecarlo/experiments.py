"""
Sampling experiments on M2([-1, 1]) and M2(k).

Every experiment draws in fixed-size chunks, one generator per chunk (see
streams.SeedSpec), and reduces per-chunk integer counts by addition, so results
are bit-identical for any worker count.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import log, sqrt
from typing import Callable, List, Tuple, TypeVar, Union

import numpy as np
from scipy.stats import kstest

from eigencount.closedform import DensityKind, f_bc, integrate_density
from eigencount.closedform.constants import INTEGER_SPECTRUM_CONSTANT, REAL_PAIR_PROBABILITY
from eigencount.exactcount import count_integer_spectrum
from eigencount.montecarlo.streams import CHUNK_SIZE, SeedSpec, chunk_sizes
from eigencount.montecarlo.types import (
    DensityComparison,
    EmpiricalSummary,
    IntegerSummary,
    NuEstimate,
    ProductSummary,
    SimulationError,
)

logger = logging.getLogger(__name__)

EIGENVALUE_BOUND = 2.0  # |eigenvalue| <= 2 for entries in [-1, 1]

T = TypeVar("T")


def _check_positive(name: str, value: int, minimum: int = 1) -> None:
    if not isinstance(value, (int, np.integer)) or value < minimum:
        raise SimulationError(
            step="validation",
            error_message=f"{name} must be an integer >= {minimum}",
            details=f"{name} = {value!r}",
        )


def _map_chunks(
    work: Callable[[int, int], T], n: int, chunk_size: int, workers: int
) -> List[T]:
    chunks = list(chunk_sizes(n, chunk_size))
    if workers <= 1 or len(chunks) == 1:
        return [work(index, size) for index, size in chunks]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda chunk: work(*chunk), chunks))


def uniform_edges(bins: int) -> np.ndarray:
    """bins + 1 equally spaced edges on [-2, 2]."""
    return np.linspace(-EIGENVALUE_BOUND, EIGENVALUE_BOUND, bins + 1)


def classify_batch(
    a: np.ndarray, b: np.ndarray, c: np.ndarray, d: np.ndarray
) -> Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """
    Vectorized spectrum classification of [[a, b], [c, d]].

    Returns (real, low, high, det); low/high are meaningful where real holds.
    Same convention as core.classify_spectrum: disc = (a-d)^2 + 4bc, real when
    disc >= 0, eigenvalues (tr -+ sqrt(disc))/2.
    """
    trace = a + d
    det = a * d - b * c
    disc = (a - d) ** 2 + 4.0 * b * c
    real = disc >= 0
    root = np.sqrt(np.where(real, disc, 0.0))
    return real, 0.5 * (trace - root), 0.5 * (trace + root), det


# Real-eigenvalue density


@dataclass(frozen=True)
class _ChunkStats:
    real_pairs: int
    counts: np.ndarray
    max_abs: float
    violations: int


def _eigen_chunk(seed: SeedSpec, edges: np.ndarray, index: int, size: int) -> _ChunkStats:
    a, b, c, d = seed.generator(index).uniform(-1.0, 1.0, size=(4, size))
    real, low, high, det = classify_batch(a, b, c, d)

    eigen = np.concatenate([low[real], high[real]])
    max_abs = float(np.max(np.abs(eigen))) if eigen.size else 0.0
    # Left-closed bins; np.histogram closes the last bin, so +2 lands there
    counts, _ = np.histogram(np.clip(eigen, -EIGENVALUE_BOUND, EIGENVALUE_BOUND), bins=edges)

    straddles = real & (low < 0) & (high > 0)
    violations = int(np.count_nonzero((det < 0) != straddles))
    return _ChunkStats(int(np.count_nonzero(real)), counts.astype(np.int64), max_abs, violations)


def run_experiment(
    n: int,
    bins: int,
    seed: SeedSpec,
    chunk_size: int = CHUNK_SIZE,
    workers: int = 1,
) -> EmpiricalSummary:
    """
    Sample n matrices with independent uniform [-1, 1] entries and histogram
    their real eigenvalues on `bins` equal bins over [-2, 2].

    Raises:
        SimulationError: If n < 1 or bins < 2
    """
    _check_positive("n", n)
    _check_positive("bins", bins, minimum=2)
    edges = uniform_edges(bins)

    stats = _map_chunks(lambda i, size: _eigen_chunk(seed, edges, i, size), n, chunk_size, workers)
    counts = np.sum([s.counts for s in stats], axis=0, dtype=np.int64)
    summary = EmpiricalSummary(
        samples=n,
        real_pairs=sum(s.real_pairs for s in stats),
        bin_edges=edges,
        bin_counts=counts,
        max_abs_eigenvalue=max(s.max_abs for s in stats),
        sign_violations=sum(s.violations for s in stats),
    )
    logger.info(
        "sampled %d matrices in %d chunks: real-pair frequency %.6f",
        n,
        len(stats),
        summary.real_pair_frequency,
    )
    return summary


def compare_to_density(
    summary: EmpiricalSummary, kind: Union[DensityKind, str] = DensityKind.W
) -> DensityComparison:
    """
    Sup deviation and chi-square of binned eigenvalue mass against W or UR.

    W compares mean eigenvalue counts per matrix with the integral of W over
    each bin. UR conditions on real pairs: counts per real-pair matrix against
    the integral of UR.

    Raises:
        SimulationError: For other density kinds or a non-uniform [-2, 2] layout
    """
    kind = DensityKind.parse(kind) if isinstance(kind, str) else kind
    if kind not in (DensityKind.W, DensityKind.UR):
        raise SimulationError(
            step="density_kind",
            error_message=f"cannot compare sampled eigenvalues with {kind.value}",
            details="supported kinds: W, UR",
        )
    edges = np.asarray(summary.bin_edges, dtype=np.float64)
    if edges.shape != (summary.bins + 1,) or not np.allclose(edges, uniform_edges(summary.bins)):
        raise SimulationError(
            step="bin_layout",
            error_message="bin edges must split [-2, 2] into equal bins",
            details=f"{summary.bins} bins from {edges[0]} to {edges[-1]}",
        )

    expected = np.array(
        [integrate_density(kind, lo, hi).value for lo, hi in zip(edges[:-1], edges[1:])]
    )
    if kind is DensityKind.W:
        population = summary.samples
    else:
        population = summary.real_pairs
        if population == 0:
            raise SimulationError(
                step="validation",
                error_message="UR comparison needs at least one real pair",
            )
    empirical = summary.bin_counts / population

    sup_deviation = float(np.max(np.abs(empirical - expected)))
    positive = expected > 0
    chi_square = float(
        population * np.sum((empirical[positive] - expected[positive]) ** 2 / expected[positive])
    )
    return DensityComparison(
        sup_deviation=sup_deviation,
        chi_square=chi_square,
        expected_mass=expected,
        empirical_mass=empirical,
    )


# Product BC


def product_experiment(
    n: int, seed: SeedSpec, chunk_size: int = CHUNK_SIZE, workers: int = 1
) -> ProductSummary:
    """
    Kolmogorov-Smirnov distance between n sampled products BC and f_bc.

    Raises:
        SimulationError: If n < 1
    """
    _check_positive("n", n)

    def chunk(index: int, size: int) -> np.ndarray:
        b, c = seed.generator(index).uniform(-1.0, 1.0, size=(2, size))
        return b * c

    products = np.concatenate(_map_chunks(chunk, n, chunk_size, workers))
    result = kstest(products, f_bc)
    return ProductSummary(
        samples=n,
        ks_distance=float(result.statistic),
        median=float(np.median(products)),
        max_product=float(np.max(products)),
    )


# nu(x, y) as a probability


def nu_experiment(
    x: float, y: float, n: int, seed: SeedSpec, chunk_size: int = CHUNK_SIZE
) -> NuEstimate:
    """
    Sample mean of [BC > xy] + 2 [-(x-y)^2/4 < BC < xy] [x + y < 0].

    Its expectation is rho(x, y), the expected number of negative eigenvalues
    of [[x, B], [C, y]].
    """
    _check_positive("n", n)
    xy = x * y
    floor = -((x - y) ** 2) / 4.0
    both_negative = x + y < 0

    total = 0.0
    total_sq = 0.0
    for index, size in chunk_sizes(n, chunk_size):
        b, c = seed.generator(index).uniform(-1.0, 1.0, size=(2, size))
        bc = b * c
        value = (bc > xy).astype(np.float64)
        if both_negative:
            value += 2.0 * ((bc > floor) & (bc < xy))
        total += float(np.sum(value))
        total_sq += float(np.sum(value * value))

    mean = total / n
    variance = max(0.0, total_sq / n - mean * mean)
    return NuEstimate(x=x, y=y, samples=n, mean=mean, standard_error=sqrt(variance / n))


# Integer matrices


def integer_experiment(
    k: int,
    n: int,
    seed: SeedSpec,
    exact: bool = True,
    chunk_size: int = CHUNK_SIZE,
) -> IntegerSummary:
    """
    Frequency of integer eigenvalues over n matrices sampled uniformly from M2(k).

    Reported next to |M2^Z(k)| / (2k+1)^4 (when exact) and C log k / k.

    Raises:
        SimulationError: If k < 1 or n < 1
    """
    _check_positive("k", k)
    _check_positive("n", n)

    hits = 0
    for index, size in chunk_sizes(n, chunk_size):
        a, b, c, d = seed.generator(index).integers(-k, k + 1, size=(4, size), dtype=np.int64)
        disc = (a - d) ** 2 + 4 * b * c
        disc = disc[disc >= 0]
        root = np.rint(np.sqrt(disc.astype(np.float64))).astype(np.int64)
        # disc = tr^2 - 4 det, so a square root of disc has the parity of tr
        hits += int(np.count_nonzero(root * root == disc))

    exact_frequency = count_integer_spectrum(k) / (2 * k + 1) ** 4 if exact else None
    summary = IntegerSummary(
        k=k,
        samples=n,
        hits=hits,
        exact_frequency=exact_frequency,
        asymptotic_frequency=INTEGER_SPECTRUM_CONSTANT * log(k) / k,
    )
    logger.info("M2(%d): integer spectrum in %d of %d samples", k, hits, n)
    return summary


def real_pair_standard_error(n: int) -> float:
    """Binomial standard error of the real-pair frequency at n samples."""
    p = REAL_PAIR_PROBABILITY
    return sqrt(p * (1.0 - p) / n)
