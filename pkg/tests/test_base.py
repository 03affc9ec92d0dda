import pytest
from datetime import datetime

from src.base import CaseResult, VerificationCase
from src.models import CaseFailure, Discrepancy, VerificationReport

@pytest.fixture
def sample_case():
    return VerificationCase(
        suite="opalg",
        case_id="opalg.mehler.0002",
        check="mehler",
        inputs={"seed": 99, "index": 2, "shape": None}
    )

def test_verification_case(sample_case):
    data = sample_case.to_dict()

    assert data["case_id"] == "opalg.mehler.0002"
    assert data["inputs"]["seed"] == 99

def test_case_result(sample_case):
    result = CaseResult(sample_case, False, "Td mismatch", elapsed=0.25)
    data = result.to_dict()

    assert data["case"]["check"] == "mehler"
    assert data["passed"] is False
    assert data["oracle"] is None

def test_discrepancy():
    record = Discrepancy("residue.oracle.0003", "(2/1)", 2.0, 2.0000005, 1e-6)

    assert record.error == pytest.approx(5e-7)
    assert record.to_dict()["error"] == record.error

def test_verification_report():
    report = VerificationReport(
        suite="crossed",
        seed=1,
        cases_run=3,
        failures=[
            CaseFailure("crossed.kappa.0002", "kappa", {}, "kappa drifted"),
            CaseFailure("crossed.hochschild.0000", "hochschild", {}, "raised ValueError: x",
                        "ValueError"),
        ],
        checks={"kappa": 2, "hochschild": 1},
        started_at=datetime(2024, 1, 1)
    )
    report.canonicalize()

    assert not report.passed
    assert [failure.case_id for failure in report.failures] == [
        "crossed.hochschild.0000", "crossed.kappa.0002"]
    assert list(report.checks) == ["hochschild", "kappa"]
    assert report.to_dict()["started_at"] == "2024-01-01T00:00:00"
    assert VerificationReport("symbols", 1).passed
