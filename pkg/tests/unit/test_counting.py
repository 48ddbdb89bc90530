"""
Tests for the exact counters.

Tests verify:
1. Anchor counts at k = 1
2. Structural count equals exhaustive enumeration for k <= 6, every lam
3. Repeated-eigenvalue and integer-spectrum counts against enumeration
4. Möbius-inserted form of the quadruple sum
5. Asymptotic main terms and the count report
6. Input validation and the enumeration guard
"""

from math import log, pi

import pytest

from eigencount.closedform import INTEGER_SPECTRUM_CONSTANT
from eigencount.exactcount import (
    CountError,
    CountReport,
    asymptotic_count_lambda,
    brute_force_count_integer_spectrum,
    brute_force_count_lambda,
    brute_force_count_repeated,
    count_integer_spectrum,
    count_repeated,
    count_repeated_integer,
    count_report,
    fast_count_lambda,
    integer_spectrum_main_term,
    mobius_lambda_sum,
    mobius_main_term,
    mobius_sieve,
)
from eigencount.exactcount.counting import coprime_pairs, quadruple_count, zero_entry_count
from eigencount.exactcount.intervals import pair_counts


class TestAnchors:
    def test_lambda_counts_at_one(self):
        """|M2^0(1)| = 33 and |M2^1(1)| = 27 by both methods."""
        assert brute_force_count_lambda(1, 0) == 33
        assert fast_count_lambda(1, 0) == 33
        assert brute_force_count_lambda(1, 1) == 27
        assert fast_count_lambda(1, 1) == 27

    def test_repeated_and_spectrum_at_one(self):
        """19 repeated, 55 with integer spectrum."""
        assert count_repeated_integer(1) == 19
        assert count_integer_spectrum(1) == 55

    def test_k_zero(self):
        """M2(0) holds only the zero matrix."""
        assert count_integer_spectrum(0) == 1
        assert count_repeated(0) == 1


class TestOracleEquivalence:
    def test_fast_equals_brute(self):
        """Exact agreement for k = 1..6 and every lam in [-2k, 2k]."""
        for k in range(1, 7):
            for lam in range(-2 * k, 2 * k + 1):
                assert fast_count_lambda(k, lam) == brute_force_count_lambda(k, lam), (k, lam)

    def test_negation_symmetry(self):
        """|M2^lam(k)| = |M2^-lam(k)|."""
        for lam in range(0, 21):
            assert fast_count_lambda(10, lam) == fast_count_lambda(10, -lam)

    def test_beyond_gershgorin(self):
        """No eigenvalue exceeds 2k in magnitude."""
        assert fast_count_lambda(3, 7) == 0
        assert brute_force_count_lambda(3, 7) == 0
        assert fast_count_lambda(3, -9) == 0

    def test_repeated_counts(self):
        """Closed repeated count equals enumeration for k = 0..6."""
        for k in range(0, 7):
            assert count_repeated_integer(k) == brute_force_count_repeated(k), k
            assert count_repeated(k, integer_only=False) == count_repeated(k)

    def test_repeated_counts_moderate_k(self):
        """k = 20 against enumeration; k = 50 pinned above the 10 k^2 ceiling."""
        assert count_repeated_integer(20) == brute_force_count_repeated(20) == 7361
        assert count_repeated_integer(50) == 54333
        # the a = d class alone already exceeds 10 k^2
        assert (2 * 50 + 1) * (4 * 50 + 1) == 20301
        assert count_repeated_integer(50) > 10 * 50**2

    def test_integer_spectrum_counts(self):
        """|M2^Z(k)| equals enumeration for k = 0..5."""
        for k in range(0, 6):
            assert count_integer_spectrum(k) == brute_force_count_integer_spectrum(k), k


class TestStructure:
    def test_coprime_pairs(self):
        """1 <= a < b <= 4 with gcd 1."""
        a, b = coprime_pairs(4)
        assert sorted(zip(a.tolist(), b.tolist())) == [(1, 2), (1, 3), (1, 4), (2, 3), (3, 4)]

    def test_zero_entry_count(self):
        """lam > k leaves no zero on the shifted diagonal."""
        n = 2 * 3 + 1
        assert zero_entry_count(3, 0) == (n * n - (n - 1) ** 2) ** 2
        assert zero_entry_count(3, 4) == 0

    def test_quadruples_even(self):
        """Each singular shifted matrix without zeros has two quadruples."""
        for k in range(1, 30):
            for lam in (0, k // 3, k, 2 * k):
                assert quadruple_count(k, lam) % 2 == 0

    def test_mobius_form_of_quadruple_sum(self):
        """fast = Z + 2 N(1, 1) + 4 sum_d mu(d) sum N(d alpha, d beta)."""
        for k in (1, 5, 12, 40):
            for lam in range(0, 2 * k + 1, max(1, k // 4)):
                expected = zero_entry_count(k, lam) + 2 * int(pair_counts(k, lam, 1, 1))
                assert fast_count_lambda(k, lam) == expected + mobius_lambda_sum(k, lam)

    def test_mobius_main_term_at_zero(self):
        """At lam = 0, C = D = 2/beta for every alpha < beta."""
        k = 60
        mu = mobius_sieve(k)
        expected = 16 * k * k * sum(
            mu[d] / d**2 * sum((beta - 1) / beta**2 for beta in range(2, k // d + 1))
            for d in range(1, k + 1)
        )
        assert mobius_main_term(k, 0) == pytest.approx(expected, rel=1e-12)
        assert mobius_main_term(k, 2 * k + 1) == 0.0


class TestAsymptotics:
    def test_main_term_example(self):
        """(100, 0) -> (96/pi^2) 10^4 log 100 ~ 4.479e5."""
        value = asymptotic_count_lambda(100, 0)
        assert value == pytest.approx(96 / pi**2 * 1e4 * log(100))
        assert value == pytest.approx(4.479e5, rel=1e-3)

    def test_main_term_edges(self):
        """V(2) = 0 at the Gershgorin edge; beyond it the formula is refused."""
        assert asymptotic_count_lambda(10, 20) == 0.0
        with pytest.raises(CountError):
            asymptotic_count_lambda(10, 21)

    def test_integer_spectrum_main_term(self):
        """16 C k^3 log k."""
        assert INTEGER_SPECTRUM_CONSTANT == pytest.approx(0.55873957, abs=1e-8)
        assert integer_spectrum_main_term(8) == pytest.approx(
            16 * INTEGER_SPECTRUM_CONSTANT * 512 * log(8)
        )

    @pytest.mark.slow
    def test_ratio_trend(self):
        """|ratio - 1| decreases over k = 128, 256, 512 and ends under 0.35."""
        deviations = [
            abs(fast_count_lambda(k, 0) / asymptotic_count_lambda(k, 0) - 1.0)
            for k in (128, 256, 512)
        ]
        assert deviations[0] > deviations[1] > deviations[2]
        assert deviations[2] <= 0.35


class TestCountReport:
    def test_both_methods(self):
        """brute and fast agree; ratio = fast / main_term."""
        report = count_report(1, 0)
        assert (report.brute, report.fast) == (33, 33)
        assert report.main_term == 0.0  # log 1 = 0
        assert report.ratio is None

    def test_fast_only(self):
        """brute stays None when not requested."""
        report = count_report(20, 3, methods=["fast"])
        assert report.brute is None
        assert report.ratio == pytest.approx(report.fast / report.main_term)

    def test_out_of_range_lambda(self):
        """|lam| > 2k: zero count, no main term."""
        report = count_report(3, 7)
        assert report.fast == 0
        assert report.ratio is None

    def test_unknown_method(self):
        """Only brute and fast are methods."""
        with pytest.raises(CountError) as exc_info:
            count_report(2, 0, methods=["exact"])
        assert exc_info.value.step == "validation"

    def test_report_rejects_disagreement(self):
        """A report cannot hold two different counts."""
        with pytest.raises(ValueError, match="disagree"):
            CountReport(k=1, lam=0, brute=32, fast=33, main_term=0.0, ratio=None)


class TestValidation:
    def test_k_must_be_positive(self):
        """k = 0 is rejected by the lambda counters."""
        with pytest.raises(CountError) as exc_info:
            fast_count_lambda(0, 0)
        assert exc_info.value.step == "validation"
        assert "k = 0" in str(exc_info.value)

    def test_enumeration_guard(self):
        """Brute force refuses (2k+1)^4 above the limit."""
        with pytest.raises(CountError) as exc_info:
            brute_force_count_lambda(20, 0, limit=10**6)
        assert exc_info.value.step == "enumeration_guard"
        with pytest.raises(CountError):
            count_repeated(2000, limit=10**6)
