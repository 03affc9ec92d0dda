import logging
import time
from typing import Any, Dict, List, Optional

from ..base import CaseResult, VerificationCase, VerificationSuite
from ..models import CaseFailure, Discrepancy, VerificationReport
from ..utils.metrics import MetricsAggregator

logger = logging.getLogger(__name__)


class CaseCollector:
    """Runs verification suites case by case and collects their reports"""

    def __init__(self, suites: List[VerificationSuite],
                 metrics: Optional[MetricsAggregator] = None):
        self.suites = suites
        self.metrics = metrics or MetricsAggregator()

    def collect_reports(self, only: Optional[List[str]] = None) -> List[VerificationReport]:
        """Run every suite; a crashing case is recorded, never fatal"""
        reports = []
        for suite in self.suites:
            if only and suite.name not in only:
                continue
            reports.append(self.run_suite(suite))
        return reports

    def run_suite(self, suite: VerificationSuite) -> VerificationReport:
        report = VerificationReport(suite=suite.name, seed=suite.seed)
        start = time.perf_counter()
        for case in suite.cases():
            result = self._run_case(suite, case)
            report.cases_run += 1
            report.checks[case.check] = report.checks.get(case.check, 0) + 1
            self.metrics.add_case(f"{suite.name}.{case.check}", result.elapsed, result.passed)
            if not result.passed:
                report.failures.append(CaseFailure(
                    case_id=case.case_id,
                    check=case.check,
                    inputs=case.inputs,
                    reason=result.detail,
                    error_type=result.error_type
                ))
            if result.oracle is not None:
                report.discrepancies.append(Discrepancy(
                    case_id=case.case_id,
                    exact=result.exact or "",
                    numeric=result.numeric,
                    oracle=result.oracle,
                    tolerance=result.tolerance
                ))
        report.wall_time = time.perf_counter() - start
        report.canonicalize()
        logger.debug("suite %s: %d cases, %d failures in %.2fs", suite.name,
                     report.cases_run, len(report.failures), report.wall_time)
        return report

    def _run_case(self, suite: VerificationSuite, case: VerificationCase) -> CaseResult:
        start = time.perf_counter()
        try:
            result = suite.run_case(case)
        except Exception as e:
            logger.debug("case %s raised %s", case.case_id, e)
            result = CaseResult(case, False, f"raised {type(e).__name__}: {e}",
                                error_type=type(e).__name__)
        result.elapsed = time.perf_counter() - start
        return result

    def get_report_stats(self, reports: List[VerificationReport]) -> Dict[str, Any]:
        """Get statistics about collected reports"""
        cases = sum(report.cases_run for report in reports)
        failures = sum(len(report.failures) for report in reports)
        return {
            "suites": len(reports),
            "total_cases": cases,
            "total_failures": failures,
            "pass_rate": (cases - failures) / cases if cases else 0.0,
            "wall_time": sum(report.wall_time for report in reports),
            "checks": self.metrics.summary()
        }
