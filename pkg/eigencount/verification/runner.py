"""
Verification runner.

Runs the selected suites check by check and reports each step as it goes.
A check that raises is reported as failed; the remaining checks still run.
"""

import sys
import time
from dataclasses import dataclass, field
from typing import List, Optional, TextIO

from eigencount.verification.loader import load_thresholds
from eigencount.verification.schema import Thresholds
from eigencount.verification.suites import CheckResult, build_suites


@dataclass
class VerificationReport:
    """Results of one `verify` invocation."""

    suite: str
    results: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> List[CheckResult]:
        return [r for r in self.results if not r.passed]


class VerificationRunner:
    """Run verification suites and print a step report."""

    def __init__(self, thresholds: Optional[Thresholds] = None, stream: Optional[TextIO] = None):
        self.thresholds = thresholds or load_thresholds()
        self.stream = stream or sys.stdout

    def _print(self, line: str = "") -> None:
        print(line, file=self.stream)

    def run(self, suite: str) -> VerificationReport:
        """
        Run `suite` ("small-k", "analytic", "montecarlo" or "all").

        Raises:
            ValueError: On an unknown suite name
        """
        suites = build_suites(suite, self.thresholds)
        checks = [(s.name, title, run) for s in suites for title, run in s.checks()]
        report = VerificationReport(suite=suite)

        self._print(f"[verify] suite: {suite} (thresholds v{self.thresholds.version})")
        self._print("=" * 60)
        for i, (suite_name, title, run) in enumerate(checks, start=1):
            self._print(f"[{i}/{len(checks)}] {suite_name}: {title}...")
            started = time.perf_counter()
            try:
                result = run()
            except Exception as e:
                result = CheckResult(name=title, passed=False, detail=f"raised {e}")
            elapsed = time.perf_counter() - started
            mark = "✓" if result.passed else "✗"
            self._print(f"      {mark} {result.detail} ({elapsed:.1f}s)")
            report.results.append(result)

        self._print("=" * 60)
        failed = len(report.failures)
        self._print(
            f"[verify] {len(checks) - failed}/{len(checks)} checks passed"
            + ("" if report.passed else f", {failed} failed")
        )
        return report
