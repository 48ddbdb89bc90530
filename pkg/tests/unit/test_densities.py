"""
Tests for the closed-form densities and the kernels behind W.

Tests verify:
1. Named values of V and W, evenness and support
2. G and the product distribution f_bc
3. nu and its probability form rho
4. Antiderivatives of nu1 and nu2
5. Boundary form of W against the explicit formula
6. Grids and tables (UZ/UR areas)
"""

from math import log, sqrt

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from eigencount.closedform import (
    ClosedFormError,
    DensityKind,
    DensityTable,
    antiderivatives_nu,
    default_grid,
    density,
    f_bc,
    g_function,
    nu,
    nu_probability,
    tabulate,
    v_density,
    w_density,
    w_from_boundary,
)

SQRT2 = sqrt(2.0)


class TestNamedValues:
    def test_v(self):
        """V(0) = 4, V(1) = 1 + log 2, V(2) = 0."""
        assert v_density(0.0) == pytest.approx(4.0, abs=1e-12)
        assert v_density(1.0) == pytest.approx(1.0 + log(2.0), abs=1e-12)
        assert v_density(2.0) == pytest.approx(0.0, abs=1e-12)
        assert v_density(2.5) == 0.0

    def test_w(self):
        """W(0) = 5/9, W(1) = 15/32, W(2) = 0."""
        assert w_density(0.0) == pytest.approx(5 / 9, abs=1e-12)
        assert w_density(1.0) == pytest.approx(15 / 32, abs=1e-12)
        assert w_density(2.0) == 0.0
        assert w_density(-3.0) == 0.0

    def test_limits_at_one(self):
        """One-sided limits at 1 meet the value at 1."""
        for f in (v_density, w_density):
            assert f(1.0 - 1e-9) == pytest.approx(f(1.0), abs=1e-6)
            assert f(1.0 + 1e-9) == pytest.approx(f(1.0), abs=1e-6)

    def test_continuity_at_sqrt2(self):
        """Both branches agree at sqrt2."""
        for f in (v_density, w_density):
            assert f(SQRT2 - 1e-10) == pytest.approx(f(SQRT2 + 1e-10), abs=1e-8)

    def test_even_and_nonnegative(self):
        """f(-delta) = f(delta) >= 0 on a fine grid."""
        for delta in np.linspace(0.0, 2.5, 4001):
            for f in (v_density, w_density):
                assert f(-delta) == f(delta)
                assert f(delta) >= 0.0

    def test_normalized_kinds(self):
        """UZ and UR rescale V and W by constant factors."""
        ratio_uz = density("UZ", 0.3) / density("V", 0.3)
        assert density(DensityKind.UZ, 1.7) == pytest.approx(ratio_uz * v_density(1.7))
        ratio_ur = density("UR", 0.3) / density("W", 0.3)
        assert density(DensityKind.UR, 1.2) == pytest.approx(ratio_ur * w_density(1.2))

    def test_unknown_kind(self):
        """Kind names are parsed case-insensitively; others fail."""
        assert DensityKind.parse("ur") is DensityKind.UR
        with pytest.raises(ClosedFormError) as exc_info:
            density("X", 0.0)
        assert exc_info.value.step == "density_kind"


class TestProductDistribution:
    def test_g(self):
        """G(z) = z(1 - log|z|), odd, G(0) = 0."""
        assert g_function(0.0) == 0.0
        assert g_function(1.0) == 1.0
        assert g_function(0.5) == pytest.approx(0.5 * (1 + log(2.0)))
        z = np.linspace(-1.0, 1.0, 101)
        assert np.allclose(g_function(-z), -g_function(z))

    def test_f_bc(self):
        """CDF of BC: 0 below -1, 1/2 at 0, 1 above 1."""
        assert f_bc(-3.0) == 0.0
        assert f_bc(-1.0) == 0.0
        assert f_bc(0.0) == 0.5
        assert f_bc(1.0) == 1.0
        assert f_bc(5.0) == 1.0
        values = f_bc(np.linspace(-1.5, 1.5, 301))
        assert np.all(np.diff(values) >= 0)

    def test_f_bc_density(self):
        """f_bc' = -log|z| / 2 away from 0."""
        h = 1e-6
        for z in (-0.8, -0.3, 0.2, 0.7):
            slope = (f_bc(z + h) - f_bc(z - h)) / (2 * h)
            assert slope == pytest.approx(-0.5 * log(abs(z)), abs=1e-6)


class TestNu:
    def test_example(self):
        """nu(0, -1) = 1/2 + G(1/4)."""
        expected = 0.5 + 0.25 * (1 - log(0.25))
        assert nu(0.0, -1.0) == pytest.approx(expected, abs=1e-12)
        assert nu(0.0, -1.0) == pytest.approx(1.09657, abs=1e-5)
        assert nu_probability(0.0, -1.0) == pytest.approx(expected, abs=1e-12)

    def test_regions(self):
        """Each region of the (x, y) plane."""
        assert nu(0.5, 0.5) == pytest.approx(0.5 - 0.5 * g_function(0.25))
        assert nu(1.5, 1.5) == 0.0
        assert nu(-1.5, -1.0) == pytest.approx(1.0 + g_function(0.0625))

    def test_domain(self):
        """|x - y| > 2 is outside the sampling square."""
        with pytest.raises(ClosedFormError) as exc_info:
            nu(-1.5, 1.0)
        assert exc_info.value.step == "domain"
        with pytest.raises(ClosedFormError):
            nu_probability(2.0, -0.5)

    @given(
        st.floats(min_value=-3.0, max_value=3.0, allow_nan=False),
        st.floats(min_value=-3.0, max_value=3.0, allow_nan=False),
    )
    def test_matches_probability_form(self, x, y):
        """nu = rho off the curves xy = 1 and x + y = 0."""
        assume(abs(x - y) <= 2.0)
        assume(abs(x * y - 1.0) > 1e-9 and abs(x + y) > 1e-9)
        assert nu(x, y) == pytest.approx(nu_probability(x, y), abs=1e-12)


class TestAntiderivatives:
    def test_values_at_one(self):
        """A1(1, 1) = 7/8, A2(1, 1) = 1/8."""
        a1, a2 = antiderivatives_nu(1.0, 1.0)
        assert a1 == pytest.approx(7 / 8, abs=1e-12)
        assert a2 == pytest.approx(1 / 8, abs=1e-12)

    def test_derivatives(self):
        """dA1/dx = nu1, dA2/dx = nu2 by central differences at 50 seeded points."""
        h = 1e-5
        rng = np.random.default_rng(50)
        points = []
        while len(points) < 50:
            x, y = rng.uniform(-1.5, 1.5, size=2)
            if abs(x) > 0.05 and abs(y) > 0.05 and abs(x - y) > 0.05:
                points.append((float(x), float(y)))
        for x, y in points:
            plus = antiderivatives_nu(x + h, y)
            minus = antiderivatives_nu(x - h, y)
            nu1 = 0.5 + 0.5 * g_function(x * y) + g_function((x - y) ** 2 / 4)
            nu2 = 0.5 - 0.5 * g_function(x * y)
            assert (plus[0] - minus[0]) / (2 * h) == pytest.approx(nu1, abs=1e-7)
            assert (plus[1] - minus[1]) / (2 * h) == pytest.approx(nu2, abs=1e-7)

    def test_zero_y_rejected(self):
        """Antiderivatives are taken along lines y != 0."""
        with pytest.raises(ClosedFormError):
            antiderivatives_nu(0.5, 0.0)


class TestBoundaryForm:
    def test_named_points(self):
        """W(0) and W(1) from the edge integrals."""
        assert w_from_boundary(0.0) == pytest.approx(5 / 9, abs=1e-12)
        assert w_from_boundary(1.0) == pytest.approx(15 / 32, abs=1e-12)
        assert w_from_boundary(2.0) == 0.0

    def test_matches_explicit_formula(self):
        """Edge form equals the piecewise formula over [-2, 2]."""
        for delta in np.linspace(-2.0, 2.0, 801):
            assert w_from_boundary(delta) == pytest.approx(w_density(delta), abs=1e-9), delta


class TestTables:
    def test_default_grid(self):
        """803 uniform points plus the two inserted +-sqrt2."""
        grid = default_grid()
        assert grid.size == 805
        assert np.all(np.diff(grid) > 0)
        assert grid[0] == -2.005 and grid[-1] == 2.005
        for bp in (-2.0, -SQRT2, -1.0, 0.0, 1.0, SQRT2, 2.0):
            assert bp in grid

    def test_grid_validation(self):
        """Too few points or a nonpositive limit."""
        with pytest.raises(ClosedFormError):
            default_grid(points=1)
        with pytest.raises(ClosedFormError):
            default_grid(limit=0.0)

    def test_normalized_areas(self):
        """UZ and UR tables integrate to 2 by the trapezoid rule."""
        for kind in ("UZ", "UR"):
            table = tabulate(kind)
            assert table.trapezoid() == pytest.approx(2.0, abs=1e-6), kind

    def test_rows(self):
        """Rows pair each grid point with its value."""
        table = tabulate(DensityKind.V, [-1.0, 0.0, 1.0])
        assert list(table.rows()) == [(-1.0, v_density(1.0)), (0.0, 4.0), (1.0, v_density(1.0))]

    def test_rejects_unsorted_grid(self):
        """Grids must be strictly increasing."""
        with pytest.raises(ClosedFormError):
            tabulate("W", [0.0, 0.0, 1.0])

    def test_table_invariants(self):
        """DensityTable checks shapes and signs."""
        with pytest.raises(ValueError, match="negative"):
            DensityTable(DensityKind.V, np.array([0.0, 1.0]), np.array([1.0, -1.0]))
        with pytest.raises(ValueError):
            DensityTable(DensityKind.V, np.array([0.0, 1.0]), np.array([1.0]))
