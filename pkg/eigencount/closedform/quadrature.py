"""
Adaptive quadrature of the densities and of the F_W double integral.

Both go through scipy.integrate.quad (QUADPACK Gauss-Kronrod) with explicit
breakpoints at the places where the integrands have kinks or logarithmic
derivative singularities. A result is accepted when the reported error
estimate is within tol * max(1, |value|); QUADPACK warning flags alone do
not fail a result.
"""

import logging
from typing import Callable, Iterable, List, Union

from scipy.integrate import quad

from eigencount.closedform.constants import BREAKPOINTS
from eigencount.closedform.densities import _nu, density
from eigencount.closedform.types import DensityKind, QuadratureError, QuadratureResult

logger = logging.getLogger(__name__)

DEFAULT_TOL_1D = 1e-10
DEFAULT_TOL_2D = 1e-6
EVALUATION_BUDGET = 10**7
SUBINTERVAL_LIMIT = 200


class _CountedIntegrand:
    """Wraps an integrand, counting calls against a shared budget."""

    def __init__(self, func: Callable[..., float], budget: int):
        self.func = func
        self.budget = budget
        self.calls = 0

    def __call__(self, *args: float) -> float:
        self.calls += 1
        if self.calls > self.budget:
            raise QuadratureError(
                step="budget",
                error_message="evaluation budget exhausted",
                details=f"budget = {self.budget}",
            )
        return self.func(*args)


def _interior(points: Iterable[float], a: float, b: float) -> List[float]:
    return sorted({p for p in points if a < p < b})


def _quad(func: Callable[[float], float], a: float, b: float, points: List[float], tol: float):
    out = quad(
        func,
        a,
        b,
        points=points or None,
        epsabs=tol,
        epsrel=tol,
        limit=SUBINTERVAL_LIMIT,
        full_output=1,
    )
    return out[0], out[1]


def _accept(
    value: float, error: float, tol: float, evaluations: int, what: str
) -> QuadratureResult:
    if error > tol * max(1.0, abs(value)):
        raise QuadratureError(
            step="tolerance",
            error_message=f"{what} did not reach the requested tolerance",
            details=f"value={value!r}, error_estimate={error:.3e}, tol={tol:.3e}",
        )
    logger.debug("%s = %r (err %.2e, %d evaluations)", what, value, error, evaluations)
    return QuadratureResult(value=value, error_estimate=error, evaluations=evaluations)


def integrate_density(
    kind: Union[DensityKind, str],
    a: float,
    b: float,
    tol: float = DEFAULT_TOL_1D,
    budget: int = EVALUATION_BUDGET,
) -> QuadratureResult:
    """
    Integral of a density over [a, b], split at -sqrt2, -1, 0, 1, sqrt2.

    Raises:
        QuadratureError: On a bad interval or tolerance, or when tol is not reached
    """
    if not -2.0 <= a <= b <= 2.0 or tol <= 0:
        raise QuadratureError(
            step="validation",
            error_message="integrate_density needs -2 <= a <= b <= 2 and tol > 0",
            details=f"a={a}, b={b}, tol={tol}",
        )
    kind = DensityKind.parse(kind) if isinstance(kind, str) else kind
    if a == b:
        return QuadratureResult(value=0.0, error_estimate=0.0, evaluations=0)

    integrand = _CountedIntegrand(lambda t: density(kind, t), budget)
    value, error = _quad(integrand, a, b, _interior(BREAKPOINTS, a, b), tol)
    return _accept(value, error, tol, integrand.calls, f"int_{a}^{b} {kind.value}")


def f_w_minus(
    delta: float, tol: float = DEFAULT_TOL_2D, budget: int = EVALUATION_BUDGET
) -> QuadratureResult:
    """
    F_W(-delta) = 1/4 of the integral of nu over [-1+delta, 1+delta]^2.

    The expected number of eigenvalues below -delta. Inner x-panels split at
    x = -y (x + y = 0), x = 1/y (xy = 1), x = 0 and x = y; outer y-panels split
    where those curves cross the square's edges.

    Raises:
        QuadratureError: On bad input, budget exhaustion or tolerance failure
    """
    if not 0.0 <= delta <= 2.0 or tol <= 0:
        raise QuadratureError(
            step="validation",
            error_message="f_w_minus needs 0 <= delta <= 2 and tol > 0",
            details=f"delta={delta}, tol={tol}",
        )
    lo, hi = delta - 1.0, delta + 1.0
    integrand = _CountedIntegrand(_nu, budget)
    inner_tol = tol / 10.0
    inner_errors: List[float] = []

    def inner(y: float) -> float:
        kinks = [-y, 0.0, y]
        if y != 0.0:
            kinks.append(1.0 / y)
        value, error = _quad(lambda x: integrand(x, y), lo, hi, _interior(kinks, lo, hi), inner_tol)
        inner_errors.append(error)
        return value

    crossings = [0.0, -1.0, 1.0, -lo, -hi, 1.0 / hi]
    if lo != 0.0:
        crossings.append(1.0 / lo)
    value, outer_error = _quad(inner, lo, hi, _interior(crossings, lo, hi), tol)

    error = 0.25 * (outer_error + (hi - lo) * max(inner_errors, default=0.0))
    return _accept(0.25 * value, error, tol, integrand.calls, f"F_W(-{delta})")
