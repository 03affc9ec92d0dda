"""JSON interchange for symbols, isometry groups, crossed symbols and matrices.

Symbol document (formatVersion 1)::

    {
      "formatVersion": 1,
      "shape": [v, h],
      "modulus": 8,
      "top": 0,
      "floor": -6,
      "terms": [
        {"degree": -1, "gamma": [0], "rhoQuarter": -1, "logPow": 0,
         "psiSet": [], "psiBarSet": [],
         "fourierCoeffs": [
           {"k": [0], "value": [
             {"piHalfExp": 0, "gammaQuarterExp": 0, "cyclotomic": ["1", "0", "0", "0"]}
           ]}
         ]}
      ]
    }

Cyclotomic values are coefficient vectors in the power basis of ζ_N, N the
document modulus; rationals are strings "a/b". Indices in psiSet/psiBarSet
are 1-based. Serialization is canonical: sorted keys, terms in symbol order.
"""
import json
import logging
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple, Union

from .crossed.crossed import CrossedSymbol
from .crossed.isometry import IsometryElement, generate_group
from .errors import DocumentError, HeisenbergError
from .scalars.cyclotomic import CyclotomicNumber, euler_phi
from .scalars.exact import ExactScalar
from .scalars.fourier import FourierFunction
from .scalars.series import EpsSeries
from .symbols.clifford import CliffordWord
from .symbols.shape import FoliationShape
from .symbols.symbol import HSymbol
from .symbols.terms import Monomial

logger = logging.getLogger(__name__)

FORMAT_VERSION = 1

SYMBOL_FIELDS = {"formatVersion", "shape", "modulus", "top", "floor", "terms"}
TERM_FIELDS = {"degree", "gamma", "rhoQuarter", "logPow", "psiSet", "psiBarSet",
               "fourierCoeffs"}
COEFF_FIELDS = {"k", "value"}
SCALAR_FIELDS = {"piHalfExp", "gammaQuarterExp", "cyclotomic"}
GROUP_FIELDS = {"formatVersion", "shape", "modulus", "generators"}
ELEMENT_FIELDS = {"matrix", "translation"}
CROSSED_FIELDS = {"formatVersion", "components"}
COMPONENT_FIELDS = {"element", "symbol"}

Source = Union[str, Path]


def _locate(text: str, token: str) -> Tuple[Optional[int], Optional[int]]:
    """Line and column of the first occurrence of a JSON key"""
    index = text.find(f'"{token}"')
    if index < 0:
        return None, None
    line = text.count("\n", 0, index) + 1
    column = index - (text.rfind("\n", 0, index) + 1) + 1
    return line, column


class _Reader:
    """Schema checks over a decoded JSON value, with source positions"""

    def __init__(self, text: str):
        self.text = text
        try:
            self.data = json.loads(text)
        except json.JSONDecodeError as e:
            raise DocumentError(f"invalid JSON: {e.msg}", e.lineno, e.colno)

    def fail(self, message: str, token: Optional[str] = None) -> DocumentError:
        line, column = _locate(self.text, token) if token else (None, None)
        return DocumentError(message, line, column)

    def record(self, value: Any, fields: set, where: str,
               optional: Sequence[str] = ()) -> Dict[str, Any]:
        if not isinstance(value, dict):
            raise self.fail(f"{where} must be an object")
        unknown = sorted(set(value) - fields)
        if unknown:
            raise self.fail(f"unknown field {unknown[0]!r} in {where}", unknown[0])
        missing = sorted(fields - set(value) - set(optional))
        if missing:
            raise self.fail(f"missing field {missing[0]!r} in {where}")
        return value

    def integer(self, value: Any, name: str) -> int:
        if isinstance(value, bool) or not isinstance(value, int):
            raise self.fail(f"{name} must be an integer", name)
        return value

    def integers(self, value: Any, name: str, length: Optional[int] = None) -> List[int]:
        if not isinstance(value, list):
            raise self.fail(f"{name} must be a list of integers", name)
        out = [self.integer(v, name) for v in value]
        if length is not None and len(out) != length:
            raise self.fail(f"{name} must have {length} entries, got {len(out)}", name)
        return out

    def rational(self, value: Any, name: str) -> Fraction:
        if isinstance(value, bool):
            raise self.fail(f"{name} must be a rational", name)
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, str):
            try:
                return Fraction(value)
            except (ValueError, ZeroDivisionError):
                pass
        raise self.fail(f"{name} entry {value!r} is not a rational string", name)

    def check_version(self, doc: Mapping[str, Any]) -> None:
        version = self.integer(doc["formatVersion"], "formatVersion")
        if version != FORMAT_VERSION:
            raise self.fail(f"unsupported formatVersion {version}", "formatVersion")

    def shape(self, value: Any) -> FoliationShape:
        v, h = self.integers(value, "shape", 2)
        try:
            return FoliationShape(v, h)
        except HeisenbergError as e:
            raise self.fail(str(e), "shape")

    def modulus(self, value: Any) -> int:
        modulus = self.integer(value, "modulus")
        if modulus < 1 or modulus % 8:
            raise self.fail(f"modulus must be a positive multiple of 8, got {modulus}",
                            "modulus")
        return modulus


# scalars


def scalar_to_json(value: ExactScalar, modulus: int) -> List[Dict[str, Any]]:
    out = []
    for (pi_half, gamma_quarter), coeff in value.items():
        if modulus % coeff.modulus:
            raise DocumentError(f"coefficient in Q(zeta_{coeff.modulus}) does not fit "
                                f"document modulus {modulus}")
        out.append({
            "piHalfExp": pi_half,
            "gammaQuarterExp": gamma_quarter,
            "cyclotomic": [f"{c.numerator}/{c.denominator}"
                           for c in coeff.embed(modulus).coeffs],
        })
    return out


def _scalar_from_json(reader: _Reader, value: Any, modulus: int) -> ExactScalar:
    if not isinstance(value, list):
        raise reader.fail("value must be a list of scalar terms", "value")
    phi = euler_phi(modulus)
    total = ExactScalar.zero()
    seen = set()
    for entry in value:
        entry = reader.record(entry, SCALAR_FIELDS, "scalar term")
        key = (reader.integer(entry["piHalfExp"], "piHalfExp"),
               reader.integer(entry["gammaQuarterExp"], "gammaQuarterExp"))
        if key in seen:
            raise reader.fail(f"repeated scalar exponents {key}", "piHalfExp")
        seen.add(key)
        vector = entry["cyclotomic"]
        if not isinstance(vector, list) or len(vector) != phi:
            raise reader.fail(f"cyclotomic must list {phi} coefficients for N={modulus}",
                              "cyclotomic")
        coeffs = [reader.rational(c, "cyclotomic") for c in vector]
        total = total + ExactScalar.from_cyclotomic(CyclotomicNumber(modulus, coeffs), *key)
    return total


# symbols


def symbol_to_dict(a: HSymbol, modulus: int = 8) -> Dict[str, Any]:
    terms = []
    for (mono, word), f in a.items():
        terms.append({
            "degree": mono.degree(a.shape),
            "gamma": list(mono.gamma),
            "rhoQuarter": mono.rho_quarter,
            "logPow": mono.log_pow,
            "psiSet": [i + 1 for i in word.psi],
            "psiBarSet": [j + 1 for j in word.psibar],
            "fourierCoeffs": [{"k": list(k), "value": scalar_to_json(c, modulus)}
                              for k, c in f.items()],
        })
    return {
        "formatVersion": FORMAT_VERSION,
        "shape": [a.shape.v, a.shape.h],
        "modulus": modulus,
        "top": a.top,
        "floor": a.floor,
        "terms": terms,
    }


def _symbol_from_dict(reader: _Reader, doc: Any) -> Tuple[HSymbol, int]:
    doc = reader.record(doc, SYMBOL_FIELDS, "symbol document")
    reader.check_version(doc)
    shape = reader.shape(doc["shape"])
    modulus = reader.modulus(doc["modulus"])
    top = reader.integer(doc["top"], "top")
    floor = reader.integer(doc["floor"], "floor")
    if floor > top:
        raise reader.fail(f"floor {floor} above top {top}", "floor")
    if not isinstance(doc["terms"], list):
        raise reader.fail("terms must be a list", "terms")

    terms: Dict[Tuple[Monomial, CliffordWord], FourierFunction] = {}
    for term in doc["terms"]:
        term = reader.record(term, TERM_FIELDS, "term")
        gamma = reader.integers(term["gamma"], "gamma", shape.n)
        if any(g < 0 for g in gamma):
            raise reader.fail(f"negative exponent in gamma {gamma}", "gamma")
        mono = Monomial(tuple(gamma), reader.integer(term["rhoQuarter"], "rhoQuarter"),
                        reader.integer(term["logPow"], "logPow"))
        if mono.log_pow < 0:
            raise reader.fail("logPow must be non-negative", "logPow")
        degree = reader.integer(term["degree"], "degree")
        if degree != mono.degree(shape):
            raise reader.fail(f"term degree {degree} disagrees with <gamma> + rhoQuarter = "
                              f"{mono.degree(shape)}", "degree")
        if not floor <= degree <= top:
            raise reader.fail(f"term degree {degree} outside [{floor}, {top}]", "degree")
        try:
            word = CliffordWord(tuple(i - 1 for i in reader.integers(term["psiSet"], "psiSet")),
                                tuple(j - 1 for j in reader.integers(term["psiBarSet"],
                                                                     "psiBarSet")))
        except ValueError as e:
            raise reader.fail(str(e), "psiSet")
        if word.max_index() >= shape.n or any(i < 0 for i in word.psi + word.psibar):
            raise reader.fail(f"Clifford index out of range 1..{shape.n}", "psiSet")
        if not isinstance(term["fourierCoeffs"], list):
            raise reader.fail("fourierCoeffs must be a list", "fourierCoeffs")
        coeffs = {}
        for entry in term["fourierCoeffs"]:
            entry = reader.record(entry, COEFF_FIELDS, "Fourier coefficient")
            k = tuple(reader.integers(entry["k"], "k", shape.n))
            if k in coeffs:
                raise reader.fail(f"repeated frequency {list(k)}", "k")
            coeffs[k] = _scalar_from_json(reader, entry["value"], modulus)
        key = (mono, word)
        if key in terms:
            raise reader.fail(f"repeated term {mono.render()} {word.render()}", "gamma")
        terms[key] = FourierFunction(shape.n, coeffs)
    try:
        return HSymbol(shape, terms, top, floor), modulus
    except HeisenbergError as e:
        raise reader.fail(str(e))


def parse_symbol(text: str) -> HSymbol:
    """Parse a symbol document; DocumentError carries line and column"""
    reader = _Reader(text)
    symbol, _ = _symbol_from_dict(reader, reader.data)
    logger.debug("parsed symbol on %s with %d terms", symbol.shape, len(symbol.terms))
    return symbol


def dumps(data: Any) -> str:
    return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def serialize_symbol(a: HSymbol, modulus: int = 8) -> str:
    return dumps(symbol_to_dict(a, modulus))


def canonicalize(text: str) -> str:
    """serialize ∘ parse, keeping the document modulus"""
    reader = _Reader(text)
    symbol, modulus = _symbol_from_dict(reader, reader.data)
    return serialize_symbol(symbol, modulus)


# groups and crossed symbols


def _element_from_json(reader: _Reader, value: Any, shape: FoliationShape,
                       modulus: int) -> IsometryElement:
    value = reader.record(value, ELEMENT_FIELDS, "group element")
    if not isinstance(value["matrix"], list):
        raise reader.fail("matrix must be a list of rows", "matrix")
    matrix = [reader.integers(row, "matrix", shape.n) for row in value["matrix"]]
    if not isinstance(value["translation"], list):
        raise reader.fail("translation must be a list", "translation")
    trans = [reader.rational(b, "translation") for b in value["translation"]]
    try:
        return IsometryElement.create(shape, matrix, trans, modulus)
    except HeisenbergError as e:
        raise reader.fail(str(e), "matrix")


def element_to_dict(g: IsometryElement) -> Dict[str, Any]:
    return {
        "matrix": [list(row) for row in g.matrix],
        "translation": [f"{b.numerator}/{b.denominator}" for b in g.trans],
    }


class GroupDocument:
    """Tier-E group sample: shape, modulus and generators"""

    def __init__(self, shape: FoliationShape, modulus: int,
                 generators: Sequence[IsometryElement]):
        self.shape = shape
        self.modulus = modulus
        self.generators = list(generators)

    def elements(self, limit: int = 256) -> List[IsometryElement]:
        return generate_group(self.generators, limit)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "formatVersion": FORMAT_VERSION,
            "shape": [self.shape.v, self.shape.h],
            "modulus": self.modulus,
            "generators": [element_to_dict(g) for g in self.generators],
        }


def parse_group(text: str) -> GroupDocument:
    reader = _Reader(text)
    doc = reader.record(reader.data, GROUP_FIELDS, "group document")
    reader.check_version(doc)
    shape = reader.shape(doc["shape"])
    modulus = reader.modulus(doc["modulus"])
    if not isinstance(doc["generators"], list) or not doc["generators"]:
        raise reader.fail("generators must be a non-empty list", "generators")
    generators = [_element_from_json(reader, g, shape, modulus) for g in doc["generators"]]
    return GroupDocument(shape, modulus, generators)


def parse_crossed(text: str, group: GroupDocument) -> CrossedSymbol:
    """Crossed symbol as a list of (element, symbol document) pairs over a group"""
    reader = _Reader(text)
    doc = reader.record(reader.data, CROSSED_FIELDS, "crossed document")
    reader.check_version(doc)
    if not isinstance(doc["components"], list):
        raise reader.fail("components must be a list", "components")
    elements = group.elements()
    total = None
    for component in doc["components"]:
        component = reader.record(component, COMPONENT_FIELDS, "crossed component")
        g = _element_from_json(reader, component["element"], group.shape, group.modulus)
        if g not in elements:
            raise reader.fail(f"element {g.render()} is not generated by the group",
                              "element")
        symbol, _ = _symbol_from_dict(reader, component["symbol"])
        if symbol.shape != group.shape:
            raise reader.fail(f"symbol shape {symbol.shape} differs from group shape "
                              f"{group.shape}", "shape")
        term = CrossedSymbol.at(g, symbol)
        total = term if total is None else total + term
    if total is None:
        raise reader.fail("a crossed document needs at least one component", "components")
    return total


def parse_matrix(text: str, order: int) -> List[List[EpsSeries]]:
    """Rational matrix R_0 given as nested JSON lists; returns ε·R_0"""
    reader = _Reader(text)
    rows = reader.data
    if not isinstance(rows, list) or not rows or any(
            not isinstance(row, list) or len(row) != len(rows) for row in rows):
        raise reader.fail("matrix must be a non-empty square list of rows")
    return [[EpsSeries.eps(order, reader.rational(v, "matrix")) for v in row] for row in rows]


def read_text(source: Source) -> str:
    path = Path(source)
    try:
        return path.read_text(encoding="utf-8")
    except OSError as e:
        raise DocumentError(f"cannot read {path}: {e.strerror}")
