from typing import Any, Dict
import json

from ..base import ReportEmitter
from ..models import VerificationReport


class ConsoleEmitter(ReportEmitter):
    """Emits verification reports and verb results to the console"""

    def __init__(self, pretty_print: bool = True):
        self.pretty_print = pretty_print

    def _print_json(self, data: Dict[str, Any]) -> None:
        if self.pretty_print:
            print(json.dumps(data, indent=2, default=str))
        else:
            print(json.dumps(data, default=str))

    def emit_report(self, report: VerificationReport) -> str:
        """Print a suite report to console"""
        status = "passed" if report.passed else f"{len(report.failures)} failures"
        print(f"\n=== Verification Report: {report.suite} ({status}) ===")
        self._print_json(report.to_dict())
        return f"report:{report.suite}/{report.seed}"

    def emit_result(self, name: str, payload: Dict[str, Any]) -> str:
        """Print a named result document to console"""
        print(f"\n=== {name} ===")
        self._print_json(payload)
        return f"result:{name}"
