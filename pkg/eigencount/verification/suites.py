"""
Verification suites behind `eigencount verify`.

small-k:    exact counts against the brute-force oracles
analytic:   closed-form identities, quadrature and the C/D bounds
montecarlo: sampled statistics against the closed forms
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from math import log, pi
from typing import Callable, Dict, List, Tuple, Type

import numpy as np

from eigencount.closedform import (
    REAL_PAIR_PROBABILITY,
    V_INTEGRAL,
    W_INTEGRAL,
    DensityKind,
    argmax_w,
    f_bc,
    f_w_minus,
    integrate_density,
    nu,
    tabulate,
    v_density,
    w_density,
    w_from_boundary,
)
from eigencount.closedform.constants import SQRT2, V_AT_ONE, W_AT_ONE, W_AT_ZERO
from eigencount.exactcount import (
    asymptotic_count_lambda,
    brute_force_count_integer_spectrum,
    brute_force_count_lambda,
    brute_force_count_repeated,
    cd_partial_sum,
    count_integer_spectrum,
    count_repeated_integer,
    fast_count_lambda,
    mobius_lambda_sum,
    mobius_sieve,
)
from eigencount.exactcount.counting import zero_entry_count
from eigencount.exactcount.intervals import cd_products, pair_counts
from eigencount.montecarlo import (
    SeedSpec,
    compare_to_density,
    nu_experiment,
    product_experiment,
    run_experiment,
)
from eigencount.verification.schema import (
    AnalyticThresholds,
    MonteCarloThresholds,
    SmallKThresholds,
    Thresholds,
)

logger = logging.getLogger(__name__)

FD_STEP = 1e-5
ONE_SIDED_OFFSETS = (1e-3, 1e-5, 1e-7)
ONE_SIDED_TOL = 1e-4


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one verification check."""

    name: str
    passed: bool
    detail: str


Check = Tuple[str, Callable[[], CheckResult]]


class SmallKSuite:
    """Exact counts against exhaustive enumeration."""

    name = "small-k"

    def __init__(self, thresholds: SmallKThresholds):
        self.thresholds = thresholds

    def checks(self) -> List[Check]:
        return [
            ("anchor counts at k = 1", self.anchor_counts),
            ("fast count equals brute force", self.oracle_equivalence),
            ("repeated and integer-spectrum counts", self.spectrum_counts),
            ("Möbius identity", self.mobius_identity),
            ("Möbius form of the quadruple sum", self.mobius_lambda_identity),
        ]

    def anchor_counts(self) -> CheckResult:
        got = [
            fast_count_lambda(1, 0),
            fast_count_lambda(1, 1),
            count_repeated_integer(1),
            count_integer_spectrum(1),
        ]
        expected = list(self.thresholds.anchor_counts)
        oracle = [brute_force_count_lambda(1, 0), brute_force_count_lambda(1, 1)]
        passed = got == expected and oracle == expected[:2]
        return CheckResult("anchors", passed, f"got {got}, expected {expected}")

    def oracle_equivalence(self) -> CheckResult:
        mismatches = []
        pairs = 0
        for k in range(1, self.thresholds.max_k + 1):
            for lam in range(-2 * k, 2 * k + 1):
                pairs += 1
                brute = brute_force_count_lambda(k, lam)
                fast = fast_count_lambda(k, lam)
                if brute != fast:
                    mismatches.append((k, lam, brute, fast))
        detail = f"{pairs} (k, lam) pairs, {len(mismatches)} mismatches"
        if mismatches:
            detail += f": first {mismatches[0]}"
        return CheckResult("oracle", not mismatches, detail)

    def spectrum_counts(self) -> CheckResult:
        bad = []
        for k in range(0, self.thresholds.max_k + 1):
            if count_repeated_integer(k) != brute_force_count_repeated(k):
                bad.append(("repeated", k))
            if count_integer_spectrum(k) != brute_force_count_integer_spectrum(k):
                bad.append(("integer spectrum", k))
        return CheckResult(
            "spectrum", not bad, f"k = 0..{self.thresholds.max_k}, mismatches: {bad or 'none'}"
        )

    def mobius_identity(self) -> CheckResult:
        limit = self.thresholds.mobius_limit
        table = mobius_sieve(limit)
        divisor_sums = np.zeros(limit + 1, dtype=np.int64)
        for d in range(1, limit + 1):
            divisor_sums[d::d] += table.values[d]
        passed = divisor_sums[1] == 1 and not np.any(divisor_sums[2:])
        tail = abs(mobius_sieve(1000).weighted_sum() - 6.0 / pi**2)
        passed = passed and tail < 1e-3
        return CheckResult(
            "mobius",
            bool(passed),
            f"m <= {limit}; |sum_{{d<=1000}} mu(d)/d^2 - 6/pi^2| = {tail:.2e}",
        )

    def mobius_lambda_identity(self) -> CheckResult:
        bad = []
        for k in range(1, self.thresholds.max_k + 1):
            for lam in range(0, 2 * k + 1):
                structural = zero_entry_count(k, lam) + 2 * int(pair_counts(k, lam, 1, 1))
                if fast_count_lambda(k, lam) != structural + mobius_lambda_sum(k, lam):
                    bad.append((k, lam))
        return CheckResult("mobius-lambda", not bad, f"mismatches: {bad or 'none'}")


def _extrapolated_gap(f: Callable[[float], float], point: float, eps: float) -> float:
    left = 2.0 * f(point - eps) - f(point - 2.0 * eps)
    right = 2.0 * f(point + eps) - f(point + 2.0 * eps)
    return abs(left - right)


class AnalyticSuite:
    """Closed-form identities and their numerical cross-checks."""

    name = "analytic"

    def __init__(self, thresholds: AnalyticThresholds):
        self.thresholds = thresholds

    def checks(self) -> List[Check]:
        return [
            ("V identities", self.v_identities),
            ("W identities", self.w_identities),
            ("branch-point continuity", self.continuity),
            ("maximum of W", self.argmax),
            ("boundary form of W", self.boundary_form),
            ("F_W(0) and F_W(2)", self.f_w_endpoints),
            ("W = -dF_W/d(delta)", self.derivative_consistency),
            ("product density", self.product_density),
            ("C/D partial sums", self.partial_sums),
            ("N against k^2 C D", self.lattice_bound),
            ("UZ/UR table areas", self.table_areas),
            ("asymptotic ratio trend", self.asymptotic_trend),
        ]

    def v_identities(self) -> CheckResult:
        t = self.thresholds
        integral = integrate_density(DensityKind.V, -2.0, 2.0).value
        errors = {
            "V(1)": abs(v_density(1.0) - V_AT_ONE),
            "V(0)": abs(v_density(0.0) - 4.0),
            "V(2)": abs(v_density(2.0)),
            "int V": abs(integral - V_INTEGRAL),
        }
        passed = max(errors["V(1)"], errors["V(0)"], errors["V(2)"]) <= t.identity_tol
        passed = passed and errors["int V"] <= t.integral_tol
        return CheckResult("V", passed, ", ".join(f"{k} err {v:.1e}" for k, v in errors.items()))

    def w_identities(self) -> CheckResult:
        t = self.thresholds
        integral = integrate_density(DensityKind.W, -2.0, 2.0).value
        errors = {
            "W(0)": abs(w_density(0.0) - W_AT_ZERO),
            "W(1)": abs(w_density(1.0) - W_AT_ONE),
            "W(2)": abs(w_density(2.0)),
            "int W": abs(integral - W_INTEGRAL),
        }
        passed = max(errors["W(0)"], errors["W(1)"], errors["W(2)"]) <= t.identity_tol
        passed = passed and errors["int W"] <= t.integral_tol
        return CheckResult("W", passed, ", ".join(f"{k} err {v:.1e}" for k, v in errors.items()))

    def continuity(self) -> CheckResult:
        t = self.thresholds
        gaps = {
            "V@sqrt2": _extrapolated_gap(v_density, SQRT2, t.continuity_offset),
            "W@sqrt2": _extrapolated_gap(w_density, SQRT2, t.continuity_offset),
            "W@2": _extrapolated_gap(w_density, 2.0, t.continuity_offset),
        }
        passed = max(gaps.values()) <= t.continuity_tol

        # Infinite slope at 1: approach from each side must shrink towards the value at 1
        for label, f in (("V", v_density), ("W", w_density)):
            for side in (-1.0, 1.0):
                distances = [abs(f(1.0 + side * eps) - f(1.0)) for eps in ONE_SIDED_OFFSETS]
                shrinking = all(b < a for a, b in zip(distances, distances[1:]))
                passed = passed and shrinking and distances[-1] <= ONE_SIDED_TOL
                gaps[f"{label}@1{'+' if side > 0 else '-'}"] = distances[-1]
        return CheckResult(
            "continuity", passed, ", ".join(f"{k} {v:.1e}" for k, v in gaps.items())
        )

    def argmax(self) -> CheckResult:
        t = self.thresholds
        peak = argmax_w()
        slope = (w_density(peak + FD_STEP) - w_density(peak - FD_STEP)) / (2 * FD_STEP)
        passed = (
            abs(peak - t.argmax) <= t.argmax_tol
            and w_density(peak) > w_density(0.0)
            and w_density(peak) > w_density(1.0)
            and abs(slope) <= 1e-4
        )
        return CheckResult("argmax", passed, f"argmax W = {peak!r}, W' there {slope:.1e}")

    def boundary_form(self) -> CheckResult:
        grid = np.linspace(0.0, 2.0, 401)
        worst = max(abs(w_from_boundary(d) - w_density(d)) for d in grid)
        passed = worst <= 100 * self.thresholds.identity_tol
        return CheckResult("boundary", passed, f"max |boundary - W| = {worst:.1e} on 401 points")

    def f_w_endpoints(self) -> CheckResult:
        t = self.thresholds
        at_zero = f_w_minus(0.0).value
        at_two = f_w_minus(2.0).value
        passed = max(abs(at_zero - REAL_PAIR_PROBABILITY), abs(at_two)) <= t.f_w_minus_tol
        return CheckResult("f_w", passed, f"F_W(0) = {at_zero!r}, F_W(-2) = {at_two!r}")

    def derivative_consistency(self) -> CheckResult:
        t = self.thresholds
        h = t.derivative_step
        worst = 0.0
        for delta in t.derivative_grid:
            upper = f_w_minus(delta + h, tol=t.derivative_quad_tol).value
            lower = f_w_minus(delta - h, tol=t.derivative_quad_tol).value
            worst = max(worst, abs(-(upper - lower) / (2 * h) - w_density(delta)))
        return CheckResult(
            "derivative",
            worst <= t.derivative_tol,
            f"max deviation {worst:.2e} over {len(t.derivative_grid)} deltas",
        )

    def product_density(self) -> CheckResult:
        worst = 0.0
        for z in (-0.9, -0.5, -0.1, 0.1, 0.5, 0.9):
            slope = (f_bc(z + FD_STEP) - f_bc(z - FD_STEP)) / (2 * FD_STEP)
            worst = max(worst, abs(slope + 0.5 * log(abs(z))))
        return CheckResult(
            "f_bc", worst <= self.thresholds.density_fd_tol, f"max deviation {worst:.1e}"
        )

    def partial_sums(self) -> CheckResult:
        t = self.thresholds
        worst_margin = float("inf")
        for delta in t.cd_deltas:
            for beta in t.cd_betas:
                error = abs(beta * cd_partial_sum(delta, beta) - v_density(delta))
                bound = t.bound_constant * (1 + log(beta)) / beta
                worst_margin = min(worst_margin, bound - error)
        return CheckResult(
            "cd-sum", worst_margin >= 0, f"smallest margin to the bound {worst_margin:.3e}"
        )

    def lattice_bound(self) -> CheckResult:
        t = self.thresholds
        worst = 0.0
        for k in t.lattice_ks:
            x, y = np.triu_indices(k)
            x = x.astype(np.int64) + 1
            y = y.astype(np.int64) + 1
            for lam in (0, k // 2, k, 3 * k // 2):
                exact = pair_counts(k, lam, x, y)
                approx = k * k * cd_products(lam / k, x, y)
                worst = max(worst, float(np.max(np.abs(exact - approx) * y / k)))
        return CheckResult(
            "lattice",
            worst <= t.bound_constant,
            f"max |N - k^2 C D| * y / k = {worst:.3f}",
        )

    def table_areas(self) -> CheckResult:
        kinds = (DensityKind.UZ, DensityKind.UR)
        areas = {kind.value: tabulate(kind).trapezoid() for kind in kinds}
        worst = max(abs(a - 2.0) for a in areas.values())
        return CheckResult(
            "areas",
            worst <= self.thresholds.table_area_tol,
            ", ".join(f"{k} {v!r}" for k, v in areas.items()),
        )

    def asymptotic_trend(self) -> CheckResult:
        t = self.thresholds
        deviations = [
            abs(fast_count_lambda(k, 0) / asymptotic_count_lambda(k, 0) - 1.0)
            for k in t.asymptotic_ks
        ]
        decreasing = all(b < a for a, b in zip(deviations, deviations[1:]))
        passed = decreasing and deviations[-1] <= t.asymptotic_ratio_tol
        return CheckResult(
            "asymptotic",
            passed,
            ", ".join(f"k={k}: |ratio-1| {d:.4f}" for k, d in zip(t.asymptotic_ks, deviations)),
        )


class MonteCarloSuite:
    """Sampled statistics against the closed forms."""

    name = "montecarlo"

    def __init__(self, thresholds: MonteCarloThresholds):
        self.thresholds = thresholds
        self.seed = SeedSpec(master_seed=thresholds.seed)

    def checks(self) -> List[Check]:
        return [
            ("real-pair frequency", self.real_pair_frequency),
            ("histogram against W", self.histogram),
            ("eigenvalue bounds and det sign", self.bounds),
            ("product distribution", self.product),
            ("nu as a probability", self.nu_probability),
        ]

    @cached_property
    def summary(self):
        t = self.thresholds
        return run_experiment(t.samples, t.bins, self.seed.with_stream(0))

    def real_pair_frequency(self) -> CheckResult:
        frequency = self.summary.real_pair_frequency
        error = abs(frequency - REAL_PAIR_PROBABILITY)
        return CheckResult(
            "real-pairs",
            error <= self.thresholds.real_pair_tol,
            f"{frequency!r} vs 49/72 (error {error:.2e})",
        )

    def histogram(self) -> CheckResult:
        comparison = compare_to_density(self.summary, DensityKind.W)
        mass_error = abs(self.summary.histogram_mass - W_INTEGRAL)
        return CheckResult(
            "histogram",
            comparison.sup_deviation <= self.thresholds.sup_deviation,
            f"sup deviation {comparison.sup_deviation:.2e}, "
            f"chi-square {comparison.chi_square:.1f}, mass error {mass_error:.2e}",
        )

    def bounds(self) -> CheckResult:
        s = self.summary
        passed = s.max_abs_eigenvalue <= 2.0 and s.sign_violations == 0
        return CheckResult(
            "bounds",
            passed,
            f"max |eigenvalue| {s.max_abs_eigenvalue!r}, det-sign violations {s.sign_violations}",
        )

    def product(self) -> CheckResult:
        result = product_experiment(self.thresholds.samples, self.seed.with_stream(1))
        passed = result.ks_distance <= self.thresholds.ks_distance and result.max_product < 1.0
        return CheckResult(
            "product", passed, f"KS distance {result.ks_distance:.2e}, median {result.median:.2e}"
        )

    def nu_probability(self) -> CheckResult:
        t = self.thresholds
        rng = self.seed.with_stream(2).generator()
        deltas = rng.uniform(0.0, 2.0, size=t.nu_points)
        offsets = rng.uniform(-1.0, 1.0, size=(t.nu_points, 2))

        worst = 0.0
        for i, (delta, (dx, dy)) in enumerate(zip(deltas, offsets)):
            x, y = float(delta + dx), float(delta + dy)
            estimate = nu_experiment(x, y, t.nu_samples, self.seed.with_stream(3 + i))
            allowed = t.nu_sigmas * estimate.standard_error + 1e-12
            worst = max(worst, abs(estimate.mean - nu(x, y)) / allowed)
        return CheckResult(
            "nu", worst <= 1.0, f"{t.nu_points} points, worst deviation {worst:.2f} of allowed"
        )


SUITES: Dict[str, Tuple[Type, str]] = {
    "small-k": (SmallKSuite, "small_k"),
    "analytic": (AnalyticSuite, "analytic"),
    "montecarlo": (MonteCarloSuite, "montecarlo"),
}
SUITE_NAMES = (*SUITES, "all")


def build_suites(name: str, thresholds: Thresholds) -> list:
    """Instantiate the suites selected by `name` ("all" selects every suite)."""
    if name not in SUITE_NAMES:
        raise ValueError(f"unknown suite '{name}', expected one of {list(SUITE_NAMES)}")
    selected = SUITES if name == "all" else {name: SUITES[name]}
    return [cls(getattr(thresholds, section)) for cls, section in selected.values()]
