from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Dict, List, Optional


@dataclass
class VerificationCase:
    """One seeded property check with everything needed to reproduce it"""
    suite: str
    case_id: str
    check: str
    inputs: Dict[str, Any]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "suite": self.suite,
            "case_id": self.case_id,
            "check": self.check,
            "inputs": self.inputs
        }


@dataclass
class CaseResult:
    """Outcome of a single verification case"""
    case: VerificationCase
    passed: bool
    detail: str = ""
    elapsed: float = 0.0
    exact: Optional[str] = None
    numeric: Optional[float] = None
    oracle: Optional[float] = None
    tolerance: Optional[float] = None
    error_type: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "case": self.case.to_dict(),
            "passed": self.passed,
            "detail": self.detail,
            "elapsed": self.elapsed,
            "exact": self.exact,
            "numeric": self.numeric,
            "oracle": self.oracle,
            "tolerance": self.tolerance,
            "error_type": self.error_type
        }


class VerificationSuite(ABC):
    """Base interface for seeded property suites"""

    name: str = ""

    def __init__(self, config: Dict[str, Any]):
        self.config = config
        self.seed = config.get("seed", 42)
        self.counts = config.get("counts", {})
        self.inject_fault = config.get("inject_fault", False)

    @abstractmethod
    def cases(self) -> List[VerificationCase]:
        """Generate the cases for this suite's seed, in case-id order"""
        pass

    @abstractmethod
    def run_case(self, case: VerificationCase) -> CaseResult:
        """Run one case; exceptions propagate to the collector"""
        pass


class ReportEmitter(ABC):
    """Base interface for emitting verification reports"""

    @abstractmethod
    def emit_report(self, report) -> str:
        """Emit a verification report"""
        pass

    @abstractmethod
    def emit_result(self, name: str, payload: Dict[str, Any]) -> str:
        """Emit the result document of a single verb"""
        pass
