"""
Tests for the threshold registry and the verification runner.

Tests verify:
1. The packaged registry loads and validates
2. Loader failures carry the failing step
3. Validator rules (errors block, warnings do not)
4. Suite selection and the step report of the runner
5. small-k and cheap analytic checks pass
"""

import io
from dataclasses import replace

import pytest
import yaml

from eigencount.verification import (
    DEFAULT_THRESHOLDS_PATH,
    SUITE_NAMES,
    AnalyticSuite,
    MonteCarloSuite,
    SmallKSuite,
    ThresholdError,
    ThresholdLoader,
    VerificationRunner,
    build_suites,
    load_thresholds,
    validate_thresholds,
)


@pytest.fixture
def thresholds():
    return load_thresholds()


@pytest.fixture
def raw_registry():
    with open(DEFAULT_THRESHOLDS_PATH, "r", encoding="utf-8") as f:
        return yaml.safe_load(f)


class TestLoading:
    def test_packaged_registry(self, thresholds):
        """Shipped thresholds load with the acceptance values."""
        assert thresholds.version == "1"
        assert thresholds.small_k.max_k == 6
        assert list(thresholds.small_k.anchor_counts) == [33, 27, 19, 55]
        assert thresholds.analytic.argmax == pytest.approx(0.75030751)
        assert thresholds.montecarlo.seed == 4972
        assert thresholds.montecarlo.samples == 10**6

    def test_missing_file(self, tmp_path):
        """A missing file fails at file_load."""
        with pytest.raises(ThresholdError) as exc_info:
            ThresholdLoader(tmp_path / "missing.yaml").load()
        assert exc_info.value.step == "file_load"
        assert "missing.yaml" in exc_info.value.path

    def test_malformed_yaml(self, tmp_path):
        """Unparsable YAML fails at parse."""
        path = tmp_path / "bad.yaml"
        path.write_text("small_k: [unclosed\n", encoding="utf-8")
        with pytest.raises(ThresholdError) as exc_info:
            load_thresholds(path)
        assert exc_info.value.step == "parse"

    def test_missing_section(self, raw_registry):
        """Every section is required."""
        del raw_registry["montecarlo"]
        with pytest.raises(ThresholdError) as exc_info:
            ThresholdLoader().load_from_dict(raw_registry)
        assert exc_info.value.step == "parse"
        assert "montecarlo" in exc_info.value.error_message

    def test_unknown_field(self, raw_registry):
        """Fields outside the schema are rejected."""
        raw_registry["small_k"]["extra"] = 1
        with pytest.raises(ThresholdError) as exc_info:
            ThresholdLoader().load_from_dict(raw_registry)
        assert exc_info.value.step == "parse"

    def test_invalid_value(self, raw_registry):
        """Schema checks run on construction."""
        raw_registry["montecarlo"]["bins"] = 1
        with pytest.raises(ThresholdError) as exc_info:
            ThresholdLoader().load_from_dict(raw_registry)
        assert exc_info.value.step == "parse"
        assert "bins" in str(exc_info.value)

    def test_validation_failure(self, raw_registry):
        """Validator errors surface as a validation step."""
        raw_registry["small_k"]["max_k"] = 100
        with pytest.raises(ThresholdError) as exc_info:
            ThresholdLoader().load_from_dict(raw_registry)
        assert exc_info.value.step == "validation"
        assert "small_k.max_k" in str(exc_info.value)


class TestValidator:
    def test_packaged_registry_is_clean(self, thresholds):
        """No errors or warnings on the shipped values."""
        result = validate_thresholds(thresholds)
        assert result.valid
        assert result.errors == []

    def test_kink_in_derivative_grid(self, thresholds):
        """Grid points next to 1 or sqrt2 are errors."""
        analytic = replace(thresholds.analytic, derivative_grid=[0.5, 1.0])
        result = validate_thresholds(replace(thresholds, analytic=analytic))
        assert not result.valid
        assert result.errors[0].field == "analytic.derivative_grid"

    def test_asymptotic_ks_order(self, thresholds):
        """ks must increase."""
        analytic = replace(thresholds.analytic, asymptotic_ks=[256, 128])
        assert not validate_thresholds(replace(thresholds, analytic=analytic)).valid

    def test_tight_monte_carlo_tolerance_warns(self, thresholds):
        """A tolerance under three standard errors is only a warning."""
        montecarlo = replace(thresholds.montecarlo, real_pair_tol=1e-5)
        result = validate_thresholds(replace(thresholds, montecarlo=montecarlo))
        assert result.valid
        assert not result.has_critical_errors()
        assert [e.severity for e in result.errors] == ["warning"]


class TestSuites:
    def test_suite_selection(self, thresholds):
        """'all' selects every suite in order."""
        assert SUITE_NAMES == ("small-k", "analytic", "montecarlo", "all")
        suites = build_suites("all", thresholds)
        assert [type(s) for s in suites] == [SmallKSuite, AnalyticSuite, MonteCarloSuite]
        assert len(build_suites("analytic", thresholds)) == 1
        with pytest.raises(ValueError):
            build_suites("bogus", thresholds)

    def test_small_k_checks(self, thresholds):
        """Every small-k check passes at max_k = 4."""
        suite = SmallKSuite(replace(thresholds.small_k, max_k=4, mobius_limit=2000))
        for title, check in suite.checks():
            result = check()
            assert result.passed, f"{title}: {result.detail}"

    def test_cheap_analytic_checks(self, thresholds):
        """Closed-form analytic checks pass."""
        suite = AnalyticSuite(thresholds.analytic)
        for check in (
            suite.v_identities,
            suite.w_identities,
            suite.continuity,
            suite.argmax,
            suite.boundary_form,
            suite.product_density,
            suite.partial_sums,
            suite.lattice_bound,
            suite.table_areas,
        ):
            result = check()
            assert result.passed, result.detail

    @pytest.mark.slow
    def test_full_analytic_suite(self, thresholds):
        """Quadrature-heavy checks, including the ratio trend."""
        suite = AnalyticSuite(thresholds.analytic)
        for check in (suite.f_w_endpoints, suite.derivative_consistency, suite.asymptotic_trend):
            result = check()
            assert result.passed, result.detail

    @pytest.mark.slow
    def test_monte_carlo_suite(self, thresholds):
        """Statistical checks at the published seed."""
        suite = MonteCarloSuite(thresholds.montecarlo)
        for title, check in suite.checks():
            result = check()
            assert result.passed, f"{title}: {result.detail}"


class TestRunner:
    def test_step_report(self, thresholds):
        """Each check is printed as a numbered step with a mark."""
        small = replace(thresholds, small_k=replace(thresholds.small_k, max_k=3, mobius_limit=1000))
        stream = io.StringIO()
        report = VerificationRunner(small, stream=stream).run("small-k")

        output = stream.getvalue()
        assert report.passed
        assert len(report.results) == 5
        assert "[verify] suite: small-k (thresholds v1)" in output
        assert "[1/5] small-k: anchor counts at k = 1..." in output
        assert "✓" in output and "✗" not in output
        assert "5/5 checks passed" in output

    def test_failing_check_is_reported(self, thresholds, monkeypatch):
        """A check that raises fails without stopping the run."""

        def broken(self):
            raise RuntimeError("boom")

        monkeypatch.setattr(SmallKSuite, "anchor_counts", broken)
        small = replace(thresholds, small_k=replace(thresholds.small_k, max_k=2, mobius_limit=100))
        stream = io.StringIO()
        report = VerificationRunner(small, stream=stream).run("small-k")

        assert not report.passed
        assert [r.name for r in report.failures] == ["anchor counts at k = 1"]
        assert "raised boom" in report.failures[0].detail
        assert "4/5 checks passed, 1 failed" in stream.getvalue()
