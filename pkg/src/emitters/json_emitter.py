import json
from pathlib import Path
from typing import Any, Dict

from ..base import ReportEmitter
from ..models import VerificationReport


class JSONEmitter(ReportEmitter):
    """Writes reports and results as JSON files, keys sorted"""

    def __init__(self, output_dir: Path):
        self.output_dir = Path(output_dir)

    def emit(self, data: Dict[str, Any], filename: str) -> str:
        self.output_dir.mkdir(parents=True, exist_ok=True)
        file_path = self.output_dir / filename
        with open(file_path, 'w', encoding='utf-8') as f:
            json.dump(data, f, indent=2, sort_keys=True, default=str)
            f.write("\n")
        return str(file_path)

    def emit_report(self, report: VerificationReport) -> str:
        filename = f"report_{report.suite}_{report.seed}.json"
        return self.emit(report.to_dict(), filename)

    def emit_result(self, name: str, payload: Dict[str, Any]) -> str:
        return self.emit(payload, f"{name}.json")
