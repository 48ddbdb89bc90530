"""
Closed-form eigenvalue densities and the kernels behind W.

V(delta): limiting density of lam/k over M2(k), scaled by k^2 log k.
W(delta): density of real eigenvalues for M2([-1, 1]).

W is derived from nu(x, y), the expected number of negative eigenvalues of
[[x, B], [C, y]] with B, C uniform on [-1, 1]. Integrating nu over the shifted
square [-1+delta, 1+delta]^2 gives F_W(-delta); differentiating in delta
reduces to line integrals along the top and bottom edges, evaluated with the
antiderivatives of nu1 and nu2.
"""

from math import log
from typing import Iterable, Optional, Tuple, Union

import numpy as np

from eigencount.closedform.constants import (
    BREAKPOINTS,
    SQRT2,
    V_AT_ONE,
    V_INTEGRAL,
    W_AT_ONE,
    W_INTEGRAL,
)
from eigencount.closedform.types import ClosedFormError, DensityKind, DensityTable

ArrayLike = Union[float, np.ndarray]

DEFAULT_GRID_LIMIT = 2.005
DEFAULT_GRID_POINTS = 803  # step 0.005, so 0, +-1 and +-2 land on the grid
SNAP_TOLERANCE = 1e-9


# Product distribution


def _g(z: float) -> float:
    if z == 0.0:
        return 0.0
    return z * (1.0 - log(abs(z)))


def g_function(z: ArrayLike) -> ArrayLike:
    """G(z) = z(1 - log|z|), G(0) = 0. Odd."""
    if np.ndim(z) == 0:
        return _g(float(z))
    z = np.asarray(z, dtype=np.float64)
    out = np.zeros_like(z)
    nonzero = z != 0
    out[nonzero] = z[nonzero] * (1.0 - np.log(np.abs(z[nonzero])))
    return out


def f_bc(z: ArrayLike) -> ArrayLike:
    """
    P(BC < z) for B, C independent uniform on [-1, 1].

    0 below -1, (1 + G(z))/2 on [-1, 1], 1 above 1. Accepts arrays.
    """
    if np.ndim(z) == 0:
        return 0.5 * (1.0 + _g(min(1.0, max(-1.0, float(z)))))
    return 0.5 * (1.0 + g_function(np.clip(np.asarray(z, dtype=np.float64), -1.0, 1.0)))


# nu and its antiderivatives


def _nu1(x: float, y: float) -> float:
    return 0.5 + 0.5 * _g(x * y) + _g((x - y) ** 2 / 4.0)


def _nu2(x: float, y: float) -> float:
    return 0.5 - 0.5 * _g(x * y)


def _nu(x: float, y: float) -> float:
    # Strict inequalities in this order; the curves xy = 1 and x + y = 0 fall through to 0
    p = x * y
    s = x + y
    if p < 1.0 and s < 0.0:
        return _nu1(x, y)
    if p < 1.0 and s > 0.0:
        return _nu2(x, y)
    if p > 1.0 and s < 0.0:
        return 1.0 + _g((x - y) ** 2 / 4.0)
    return 0.0


def nu(x: float, y: float) -> float:
    """
    Expected number of negative eigenvalues of [[x, B], [C, y]].

    Raises:
        ClosedFormError: If |x - y| > 2
    """
    if abs(x - y) > 2.0:
        raise ClosedFormError(
            step="domain",
            error_message="nu needs |x - y| <= 2",
            details=f"x={x}, y={y}",
        )
    return _nu(x, y)


def nu_probability(x: float, y: float) -> float:
    """
    rho(x, y) = P(BC > xy) + 2 P(-(x-y)^2/4 < BC < xy) [x + y < 0], from f_bc.

    Agrees with nu off the curves xy = 1 and x + y = 0.
    """
    if abs(x - y) > 2.0:
        raise ClosedFormError(
            step="domain",
            error_message="nu_probability needs |x - y| <= 2",
            details=f"x={x}, y={y}",
        )
    upper = f_bc(x * y)
    rho = 1.0 - upper
    if x + y < 0.0:
        rho += 2.0 * max(0.0, upper - f_bc(-((x - y) ** 2) / 4.0))
    return rho


def _a1(x: float, y: float) -> float:
    # x^2 y (3 - 2 log|xy|) = x (2G(xy) + xy)
    # (x-y)^3 (5 - 6 log|u|) = 8u^2 (6G(u) - u) with u = (x-y)/2
    u = (x - y) / 2.0
    return 0.5 * x + x * (2.0 * _g(x * y) + x * y) / 8.0 + 2.0 * u * u * (6.0 * _g(u) - u) / 9.0


def _a2(x: float, y: float) -> float:
    return 0.5 * x - x * (2.0 * _g(x * y) + x * y) / 8.0


def antiderivatives_nu(x: float, y: float) -> Tuple[float, float]:
    """
    (A1, A2) with dA1/dx = nu1(x, y) and dA2/dx = nu2(x, y).

    A1 = x/2 + x^2 y (3 - 2 log|xy|)/8 + (x-y)^3 (5 - 6 log|(x-y)/2|)/36
    A2 = x/2 - x^2 y (3 - 2 log|xy|)/8

    Raises:
        ClosedFormError: If y == 0
    """
    if y == 0:
        raise ClosedFormError(
            step="domain",
            error_message="antiderivatives are taken for fixed nonzero y",
            details=f"x={x}, y={y}",
        )
    return _a1(x, y), _a2(x, y)


def w_from_boundary(delta: float) -> float:
    """
    W(delta) as -d/d(delta) F_W(-delta), from the edges of the shifted square.

    Only the bottom edge y = delta - 1 and top edge y = delta + 1 contribute
    (nu is symmetric). On [0, 1] the bottom edge switches nu1 -> nu2 at
    x = 1 - delta and the top edge nu2 -> 0 at x = 1/(1 + delta); on (1, sqrt2]
    the bottom edge is nu2 throughout; beyond sqrt2 the top edge vanishes and
    the bottom edge switches nu2 -> 0 at x = 1/(delta - 1).
    """
    d = abs(float(delta))
    if d >= 2.0:
        return 0.0
    lo, hi = d - 1.0, d + 1.0

    if d <= 1.0:
        bottom = (_a1(1.0 - d, lo) - _a1(lo, lo)) + (_a2(hi, lo) - _a2(1.0 - d, lo))
        top = _a2(1.0 / hi, hi) - _a2(lo, hi)
    elif d <= SQRT2:
        bottom = _a2(hi, lo) - _a2(lo, lo)
        top = _a2(1.0 / hi, hi) - _a2(lo, hi)
    else:
        bottom = _a2(1.0 / lo, lo) - _a2(lo, lo)
        top = 0.0
    return 0.5 * (bottom - top)


# Densities


def v_density(delta: float) -> float:
    """V(delta), even, 0 for |delta| > 2; branch points at 1 and sqrt2."""
    d = abs(float(delta))
    if d > 2.0:
        return 0.0
    if d == 1.0:
        return V_AT_ONE
    if d < 1.0:
        return 4.0 - 2.0 * d - d * d + d * d * log(1.0 + d) - 2.0 * (1.0 - d) * log(1.0 - d)
    if d <= SQRT2:
        return 4.0 - 2.0 * d - d * d + d * d * log(d + 1.0) + 2.0 * (d - 1.0) * log(d - 1.0)
    return max(0.0, d * d - 2.0 * d - (d * d - 2.0 * d + 2.0) * log(d - 1.0))


def w_density(delta: float) -> float:
    """W(delta), even, W(1) = 15/32, 0 for |delta| >= 2."""
    d = abs(float(delta))
    if d >= 2.0:
        return 0.0
    if d == 1.0:
        return W_AT_ONE
    if d < 1.0:
        return (
            (80.0 + 20.0 * d + 90.0 * d**2 + 52.0 * d**3 - 107.0 * d**4) / (144.0 * (1.0 + d))
            - (5.0 - 7.0 * d + 8.0 * d * d) * (1.0 - d) * log(1.0 - d) / 12.0
            - d * (1.0 - d * d) * log(1.0 + d) / 4.0
        )
    if d <= SQRT2:
        return (
            d * (20.0 + 10.0 * d - 12.0 * d * d - 3.0 * d**3) / (16.0 * (1.0 + d))
            + (3.0 * d - 1.0) * (d - 1.0) * log(d - 1.0) / 4.0
            + d * (d * d - 1.0) * log(d + 1.0) / 4.0
        )
    return max(
        0.0,
        d * (d - 2.0) * (2.0 - 6.0 * d + 3.0 * d * d) / (16.0 * (d - 1.0))
        - (d - 1.0) ** 3 * log(d - 1.0) / 4.0,
    )


def density(kind: Union[DensityKind, str], delta: float) -> float:
    """V, W, or their area-2 normalizations UZ = 2V/intV, UR = 2W/intW."""
    kind = DensityKind.parse(kind) if isinstance(kind, str) else kind
    if kind is DensityKind.V:
        return v_density(delta)
    if kind is DensityKind.W:
        return w_density(delta)
    if kind is DensityKind.UZ:
        return 2.0 * v_density(delta) / V_INTEGRAL
    return 2.0 * w_density(delta) / W_INTEGRAL


def default_grid(
    limit: float = DEFAULT_GRID_LIMIT, points: int = DEFAULT_GRID_POINTS
) -> np.ndarray:
    """
    Uniform grid on [-limit, limit] with every branch point present exactly.

    Grid nodes within SNAP_TOLERANCE of 0, +-1, +-sqrt2 or +-2 are snapped onto
    them; branch points still missing (+-sqrt2 on the default grid) are inserted.
    """
    if points < 2 or limit <= 0:
        raise ClosedFormError(
            step="validation",
            error_message="grid needs at least 2 points and a positive limit",
            details=f"limit={limit}, points={points}",
        )
    grid = np.linspace(-limit, limit, points)
    for bp in (*BREAKPOINTS, -2.0, 2.0):
        if not -limit <= bp <= limit:
            continue
        nearest = int(np.argmin(np.abs(grid - bp)))
        if abs(grid[nearest] - bp) <= SNAP_TOLERANCE:
            grid[nearest] = bp
        else:
            grid = np.insert(grid, int(np.searchsorted(grid, bp)), bp)
    return grid


def tabulate(kind: Union[DensityKind, str], grid: Optional[Iterable[float]] = None) -> DensityTable:
    """
    Evaluate a density on a grid (default_grid() when omitted).

    Raises:
        ClosedFormError: On an unknown kind or a grid that is not strictly increasing
    """
    kind = DensityKind.parse(kind) if isinstance(kind, str) else kind
    points = default_grid() if grid is None else np.asarray(list(grid), dtype=np.float64)
    if points.ndim != 1 or points.size == 0 or np.any(np.diff(points) <= 0):
        raise ClosedFormError(
            step="validation",
            error_message="grid must be a non-empty strictly increasing sequence",
            details=f"{points.size} points",
        )
    values = np.array([density(kind, d) for d in points], dtype=np.float64)
    return DensityTable(kind=kind, grid=points, values=values)
