import json

import pytest
from freezegun import freeze_time

from src.emitters.console import ConsoleEmitter
from src.emitters.json_emitter import JSONEmitter
from src.models import CaseFailure, Discrepancy, VerificationReport

@pytest.fixture
def sample_report():
    with freeze_time("2024-01-01 12:00:00"):
        return VerificationReport(
            suite="residue",
            seed=7,
            cases_run=2,
            failures=[CaseFailure("residue.oracle.0001", "oracle", {"seed": 11, "index": 1},
                                  "sphere moment (2,) on (1,0): off by 0.1")],
            discrepancies=[Discrepancy("residue.oracle.0000", "(2/1)", 2.0, 2.0, 1e-6)],
            checks={"oracle": 2},
        )

def test_console_emitter(capsys, sample_report):
    emitter = ConsoleEmitter()
    result = emitter.emit_report(sample_report)

    captured = capsys.readouterr()
    assert "Verification Report: residue (1 failures)" in captured.out
    assert "residue.oracle.0001" in captured.out
    assert result == "report:residue/7"

def test_console_emitter_compact(capsys):
    emitter = ConsoleEmitter(pretty_print=False)
    assert emitter.emit_result("summary", {"total_cases": 3}) == "result:summary"

    captured = capsys.readouterr()
    assert '{"total_cases": 3}' in captured.out

def test_json_emitter(tmp_path, sample_report):
    emitter = JSONEmitter(tmp_path / "reports")
    path = emitter.emit_report(sample_report)

    assert path.endswith("report_residue_7.json")
    with open(path) as f:
        data = json.load(f)
    assert data["started_at"] == "2024-01-01T12:00:00"
    assert data["passed"] is False
    assert data["discrepancies"][0]["error"] == 0.0
    assert list(data) == sorted(data)

def test_json_emitter_results(tmp_path):
    emitter = JSONEmitter(tmp_path)
    path = emitter.emit_result("summary", {"pass_rate": 1.0, "checks": {}})

    assert path == str(tmp_path / "summary.json")
    with open(path) as f:
        assert json.load(f) == {"checks": {}, "pass_rate": 1.0}
