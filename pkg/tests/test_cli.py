from fractions import Fraction

import pytest
from click.testing import CliRunner

from src.cli.main import cli
from src.crossed.isometry import IsometryElement
from src.crossed.pairing import winding_pair, winding_symbol
from src.documents import GroupDocument, dumps, element_to_dict, parse_symbol, serialize_symbol, symbol_to_dict
from src.scalars.exact import ExactScalar
from src.symbols.builders import momentum, rho_power
from src.symbols.symbol import star

@pytest.fixture
def runner():
    return CliRunner()

def test_residue(runner, rho_quarter_doc):
    result = runner.invoke(cli, ["residue", str(rho_quarter_doc)])

    assert result.exit_code == 0
    assert result.output == "(1/1)·pi^(-2/2)\n"

def test_residue_numeric(runner, rho_quarter_doc):
    result = runner.invoke(cli, ["residue", str(rho_quarter_doc), "--numeric", "--digits", "20"])

    assert result.exit_code == 0
    assert result.output.splitlines()[1].startswith("0.3183098861837906")

def test_star(runner, write_doc, line):
    a, b = momentum(line, 1), rho_power(line, -1, floor=-3)
    left = write_doc("a.json", serialize_symbol(a))
    right = write_doc("b.json", serialize_symbol(b))

    result = runner.invoke(cli, ["star", str(left), str(right), "--shape", "1,0"])
    assert result.exit_code == 0
    assert parse_symbol(result.output) == star(a, b)

def test_mehler(runner):
    result = runner.invoke(cli, ["mehler", "--R", "[[1]]", "--eps-order", "4"])

    assert result.exit_code == 0
    assert result.output.splitlines() == [
        "eps^0: (1/1)",
        "eps^1: (-1/2)",
        "eps^2: (1/12)",
        "eps^3: 0",
        "eps^4: (-1/720)",
    ]

def test_pairing_and_toeplitz(runner, write_doc):
    a0, a1 = winding_pair(1)
    left = write_doc("a0.json", serialize_symbol(a0))
    right = write_doc("a1.json", serialize_symbol(a1))

    result = runner.invoke(cli, ["pairing", str(left), str(right)])
    assert result.exit_code == 0
    assert result.output.splitlines() == [
        f"pairing: {ExactScalar.i().render()}",
        f"kappa: {(-ExactScalar.i()).render()}",
        f"radul: {ExactScalar.one().render()}",
    ]

    winding = write_doc("w.json", serialize_symbol(winding_symbol(1)))
    result = runner.invoke(cli, ["toeplitz", str(winding)])
    assert result.exit_code == 0
    assert result.output == "-1\n"

def test_radul_off_inverse_pair(runner, write_doc, line):
    half = IsometryElement.create(line, trans=[Fraction(1, 2)])
    a = symbol_to_dict(rho_power(line, -1, floor=-3))
    group = write_doc("group.json", dumps(GroupDocument(line, 8, [half]).to_dict()))
    left = write_doc("left.json", dumps({"formatVersion": 1, "components": [
        {"element": element_to_dict(half), "symbol": a}]}))
    right = write_doc("right.json", dumps({"formatVersion": 1, "components": [
        {"element": element_to_dict(IsometryElement.identity(line)), "symbol": a}]}))

    result = runner.invoke(cli, ["radul", str(left), str(right), "--group", str(group)])
    assert result.exit_code == 0
    assert result.output == "0\n"

def test_trs(runner, rho_quarter_doc):
    result = runner.invoke(cli, ["trs", str(rho_quarter_doc)])

    assert result.exit_code == 0
    assert result.output == "(1/1)·pi^(-2/2)\n"

def test_dirac(runner):
    result = runner.invoke(cli, ["dirac", "--shape", "1,1", "--kind", "affine", "--seed", "3"])

    assert result.exit_code == 0
    assert result.output.splitlines()[-1] == "generalized laplacian: yes"

def test_dirac_random_uses_verify_seed(runner, monkeypatch):
    monkeypatch.setenv("HEISENBERG_VERIFY_SEED", "3")
    seeded = runner.invoke(cli, ["dirac", "--shape", "1,1", "--kind", "affine", "--seed", "3"])
    result = runner.invoke(cli, ["dirac", "--shape", "1,1", "--kind", "affine", "--random"])

    assert result.exit_code == 0
    assert result.output == seeded.output

def test_dirac_flat(runner):
    result = runner.invoke(cli, ["dirac", "--shape", "1,0", "--flat"])

    assert result.exit_code == 0
    assert result.output.splitlines()[-1] == "generalized laplacian: yes"

def test_oracle(runner):
    result = runner.invoke(cli, ["oracle", "--shape", "1,0", "--gamma", "0"])

    assert result.exit_code == 0
    assert "exact: (2/1)" in result.output
    assert "oracle: 2" in result.output
