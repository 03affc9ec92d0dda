from dataclasses import dataclass, field
from datetime import datetime
from typing import Any, Dict, List, Optional


@dataclass
class Discrepancy:
    """Exact value against its numeric oracle for one case"""
    case_id: str
    exact: str
    numeric: float
    oracle: float
    tolerance: float

    @property
    def error(self) -> float:
        return abs(self.numeric - self.oracle)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "case_id": self.case_id,
            "exact": self.exact,
            "numeric": self.numeric,
            "oracle": self.oracle,
            "error": self.error,
            "tolerance": self.tolerance
        }


@dataclass
class CaseFailure:
    """A failing or crashing case with its reproduction input"""
    case_id: str
    check: str
    inputs: Dict[str, Any]
    reason: str
    error_type: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "case_id": self.case_id,
            "check": self.check,
            "inputs": self.inputs,
            "reason": self.reason,
            "error_type": self.error_type
        }


@dataclass
class VerificationReport:
    """Outcome of one suite run"""
    suite: str
    seed: int
    cases_run: int = 0
    failures: List[CaseFailure] = field(default_factory=list)
    discrepancies: List[Discrepancy] = field(default_factory=list)
    checks: Dict[str, int] = field(default_factory=dict)
    wall_time: float = 0.0
    started_at: datetime = field(default_factory=datetime.now)

    @property
    def passed(self) -> bool:
        return not self.failures

    def canonicalize(self) -> None:
        """Sort failures and discrepancies by case id"""
        self.failures.sort(key=lambda failure: failure.case_id)
        self.discrepancies.sort(key=lambda record: record.case_id)
        self.checks = dict(sorted(self.checks.items()))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "started_at": self.started_at.isoformat(),
            "wall_time": self.wall_time,
            "cases_run": self.cases_run,
            "checks": self.checks,
            "passed": self.passed,
            "failures": [failure.to_dict() for failure in self.failures],
            "discrepancies": [record.to_dict() for record in self.discrepancies]
        }
