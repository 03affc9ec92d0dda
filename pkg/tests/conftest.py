import pytest
from pathlib import Path

from src.config import EngineConfig
from src.documents import serialize_symbol
from src.symbols.builders import rho_power
from src.symbols.shape import FoliationShape
from src.utils.generators import make_rng


@pytest.fixture
def line():
    return FoliationShape(1, 0)


@pytest.fixture
def plane():
    """One leaf and one transverse direction"""
    return FoliationShape(1, 1)


@pytest.fixture
def rng():
    return make_rng(1234)


@pytest.fixture
def mock_config(tmp_path):
    """EngineConfig with tiny case counts for fast suite runs"""
    config = EngineConfig()
    config.cases_scale = 0.01
    config.report_dir = str(tmp_path / "reports")
    config.default_emitter = "console"
    return config


@pytest.fixture
def write_doc(tmp_path):
    """Write a document into tmp_path and return its path"""
    def _write(name: str, text: str) -> Path:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path
    return _write


@pytest.fixture
def rho_quarter_doc(write_doc, line):
    """ρ^{−1/4} on shape (1,0), whose residue is 1/π"""
    return write_doc("rho.json", serialize_symbol(rho_power(line, -1, floor=-3)))
