import pytest
from click.testing import CliRunner

from src.cli.main import cli
from src.errors import (
    DocumentError,
    DomainError,
    HeisenbergError,
    ShapeMismatch,
    TruncationTooShallow,
    VerificationFailure,
)

@pytest.fixture
def runner():
    return CliRunner()

def test_exit_codes():
    assert VerificationFailure("x").exit_code == 1
    assert DocumentError("x").exit_code == 2
    assert DomainError("x").exit_code == 3
    assert TruncationTooShallow("x").exit_code == 3
    assert isinstance(ShapeMismatch("x"), ValueError)
    assert not isinstance(DocumentError("x"), ValueError)
    assert issubclass(DocumentError, HeisenbergError)

def test_document_error_location():
    error = DocumentError("unexpected token", line=3, column=7)
    assert str(error) == "line 3, column 7: unexpected token"
    assert str(DocumentError("empty")) == "empty"

def test_malformed_document_exits_2(runner, write_doc):
    path = write_doc("bad.json", "{")
    result = runner.invoke(cli, ["residue", str(path)])

    assert result.exit_code == 2
    assert "error: line 1" in result.output

def test_missing_document_exits_2(runner, tmp_path):
    result = runner.invoke(cli, ["residue", str(tmp_path / "nowhere.json")])

    assert result.exit_code == 2
    assert "cannot read" in result.output

def test_shape_mismatch_exits_3(runner, rho_quarter_doc):
    result = runner.invoke(cli, ["residue", str(rho_quarter_doc), "--shape", "1,1"])

    assert result.exit_code == 3
    assert "shapes differ" in result.output

def test_domain_errors_exit_3(runner):
    result = runner.invoke(cli, ["oracle", "--shape", "1,0", "--gamma", "0,0"])
    assert result.exit_code == 3

    result = runner.invoke(cli, ["oracle", "--gamma", "x"])
    assert result.exit_code == 3
    assert "gamma must read" in result.output

    result = runner.invoke(cli, ["mehler", "--R", "[[1, 2]]"])
    assert result.exit_code == 2

def test_injected_fault_exits_1(runner, tmp_path):
    result = runner.invoke(cli, ["verify", "--suite", "symbols", "--scale", "0.01",
                                 "--report-dir", str(tmp_path), "--inject-fault"])

    assert result.exit_code == 1
    assert "failing cases" in result.output
