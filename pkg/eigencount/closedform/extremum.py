"""
Location of the maximum of W by golden-section search.
"""

import logging
from math import isnan, sqrt
from typing import Callable

from eigencount.closedform.densities import w_density
from eigencount.closedform.types import ClosedFormError

logger = logging.getLogger(__name__)

PHI_RATIO = 2.0 / (1.0 + sqrt(5.0))
ARGMAX_BRACKET = (0.5, 0.95)
ARGMAX_TOL = 1e-8
MAX_ITERATIONS = 200


def golden_section_max(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    tol: float = ARGMAX_TOL,
    max_iterations: int = MAX_ITERATIONS,
) -> float:
    """
    Maximizer of a unimodal f on [lo, hi], to within tol.

    Raises:
        ClosedFormError: On an empty bracket, NaN values or no convergence
    """
    if not lo < hi or tol <= 0:
        raise ClosedFormError(
            step="validation",
            error_message="golden-section search needs lo < hi and tol > 0",
            details=f"lo={lo}, hi={hi}, tol={tol}",
        )
    x1 = hi - PHI_RATIO * (hi - lo)
    x2 = lo + PHI_RATIO * (hi - lo)
    f1, f2 = f(x1), f(x2)

    iteration = 0
    while hi - lo > tol:
        if iteration >= max_iterations or isnan(f1) or isnan(f2):
            raise ClosedFormError(
                step="validation",
                error_message="golden-section search did not converge",
                details=f"bracket [{lo}, {hi}] after {iteration} iterations",
            )
        if f1 > f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - PHI_RATIO * (hi - lo)
            f1 = f(x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + PHI_RATIO * (hi - lo)
            f2 = f(x2)
        iteration += 1

    logger.debug("golden section converged in %d iterations", iteration)
    return 0.5 * (lo + hi)


def argmax_w() -> float:
    """Positive maximizer of W, near 0.75030751."""
    return golden_section_max(w_density, *ARGMAX_BRACKET)
