import json
from fractions import Fraction

import pytest

from src.crossed.crossed import CrossedSymbol
from src.crossed.isometry import IsometryElement
from src.documents import (
    GroupDocument,
    canonicalize,
    dumps,
    element_to_dict,
    parse_crossed,
    parse_group,
    parse_matrix,
    parse_symbol,
    read_text,
    serialize_symbol,
    symbol_to_dict,
)
from src.errors import DocumentError
from src.scalars.exact import ExactScalar
from src.scalars.fourier import FourierFunction
from src.scalars.series import EpsSeries
from src.symbols.builders import rho_power
from src.symbols.symbol import HSymbol
from src.utils.generators import random_symbol


@pytest.fixture
def half(line):
    return IsometryElement.create(line, trans=[Fraction(1, 2)])


@pytest.fixture
def group_text(line, half):
    return dumps(GroupDocument(line, 8, [half]).to_dict())


def test_symbol_round_trip(plane, rng):
    a = random_symbol(rng, plane, 1, 3, word=True)
    text = serialize_symbol(a)
    assert parse_symbol(text) == a
    assert canonicalize(text) == text


def test_serialization_is_canonical(line):
    coeff = FourierFunction(1, {(1,): ExactScalar.pi(-1), (0,): Fraction(1, 3)})
    a = HSymbol.monomial(line, rho_quarter=-1, coeff=coeff, floor=-3)
    doc = symbol_to_dict(a)
    assert doc["shape"] == [1, 0]
    assert doc["terms"][0]["degree"] == -1
    shuffled = json.dumps(doc, indent=4)
    assert canonicalize(shuffled) == serialize_symbol(a)


def test_empty_terms_is_zero(line):
    doc = symbol_to_dict(HSymbol.zero(line, 0, -2))
    assert doc["terms"] == []
    assert parse_symbol(dumps(doc)).is_zero()


def test_invalid_json_has_position():
    with pytest.raises(DocumentError) as exc:
        parse_symbol('{\n  "formatVersion": 1,\n  "shape": [1, 0\n}')
    assert exc.value.line == 4
    assert exc.value.exit_code == 2


def test_degree_mismatch(line):
    doc = symbol_to_dict(rho_power(line, -1, floor=-3))
    doc["terms"][0]["degree"] = 0
    with pytest.raises(DocumentError) as exc:
        parse_symbol(dumps(doc))
    assert "disagrees" in str(exc.value)
    assert exc.value.line is not None
    assert exc.value.column is not None


def test_unknown_and_missing_fields(line):
    doc = symbol_to_dict(rho_power(line, -1, floor=-3))
    doc["terms"][0]["colour"] = "red"
    with pytest.raises(DocumentError, match="unknown field 'colour'"):
        parse_symbol(dumps(doc))
    doc = symbol_to_dict(rho_power(line, -1, floor=-3))
    del doc["floor"]
    with pytest.raises(DocumentError, match="missing field 'floor'"):
        parse_symbol(dumps(doc))


@pytest.mark.parametrize("field,value", [
    ("formatVersion", 2),
    ("modulus", 12),
    ("shape", [0, 1]),
    ("top", "zero"),
])
def test_rejects_bad_header(line, field, value):
    doc = symbol_to_dict(rho_power(line, -1, floor=-3))
    doc[field] = value
    with pytest.raises(DocumentError):
        parse_symbol(dumps(doc))


def test_parse_group(group_text, half):
    group = parse_group(group_text)
    assert group.generators == [half]
    assert len(group.elements()) == 2


def test_parse_crossed(line, half, group_text):
    a = rho_power(line, -1, floor=-3)
    text = dumps({"formatVersion": 1, "components": [
        {"element": element_to_dict(half), "symbol": symbol_to_dict(a)},
    ]})
    assert parse_crossed(text, parse_group(group_text)) == CrossedSymbol.at(half, a)


def test_parse_crossed_rejects_foreign_elements(line, group_text):
    quarter = IsometryElement.create(line, trans=[Fraction(1, 4)])
    a = rho_power(line, -1, floor=-3)
    text = dumps({"formatVersion": 1, "components": [
        {"element": element_to_dict(quarter), "symbol": symbol_to_dict(a)},
    ]})
    with pytest.raises(DocumentError, match="not generated"):
        parse_crossed(text, parse_group(group_text))
    with pytest.raises(DocumentError):
        parse_crossed(dumps({"formatVersion": 1, "components": []}), parse_group(group_text))


def test_parse_matrix():
    R = parse_matrix('[[1, "1/2"], [0, -3]]', 3)
    assert R[0][1] == EpsSeries.eps(3, Fraction(1, 2))
    assert R[1][1] == EpsSeries.eps(3, -3)
    with pytest.raises(DocumentError):
        parse_matrix("[[1, 2]]", 3)
    with pytest.raises(DocumentError):
        parse_matrix('[["x"]]', 3)


def test_read_text(write_doc, tmp_path):
    path = write_doc("doc.json", "{}")
    assert read_text(path) == "{}"
    with pytest.raises(DocumentError, match="cannot read"):
        read_text(tmp_path / "missing.json")
