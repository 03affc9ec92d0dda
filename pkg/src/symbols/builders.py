from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

from ..errors import BadIndex
from ..scalars.exact import Coercible
from ..scalars.fourier import FourierFunction
from .shape import FoliationShape
from .symbol import HSymbol

DEFAULT_FLOOR_DEPTH = 6

KINDS = ("rho", "q1", "chiPlus", "subLaplacian")


def _floor(top: int, floor: Optional[int]) -> int:
    return top - DEFAULT_FLOOR_DEPTH if floor is None else floor


def rho(shape: FoliationShape, floor: Optional[int] = None) -> HSymbol:
    """|p|′^4 = Σ_{leaf} p_i^4 + Σ_{transverse} p_j^2"""
    return HSymbol.monomial(shape, rho_quarter=4, floor=_floor(4, floor))


def q1(shape: FoliationShape, floor: Optional[int] = None) -> HSymbol:
    """ρ^{1/4}, the Heisenberg norm |p|′"""
    return HSymbol.monomial(shape, rho_quarter=1, floor=_floor(1, floor))


def chi_plus(shape: FoliationShape, i: int, floor: Optional[int] = None) -> HSymbol:
    """(1 + p_i ρ^{−⟨e_i⟩/4})/2 for 1 ≤ i ≤ n, the degree-0 indicator of p_i > 0"""
    if not 1 <= i <= shape.n:
        raise BadIndex(f"chiPlus index {i} outside 1..{shape.n}")
    axis = i - 1
    half = Fraction(1, 2)
    fl = _floor(0, floor)
    return (HSymbol.constant(shape, half, floor=fl)
            + HSymbol.monomial(shape, shape.unit(axis), -shape.weights[axis], coeff=half,
                               top=0, floor=fl))


def sub_laplacian(shape: FoliationShape, floor: Optional[int] = None) -> HSymbol:
    """Full symbol of Δ_H on the flat torus; constant coefficients make it ρ exactly"""
    return rho(shape, floor)


def builders(kind: str, shape: FoliationShape, i: Optional[int] = None,
             floor: Optional[int] = None) -> HSymbol:
    if kind == "rho":
        return rho(shape, floor)
    if kind == "q1":
        return q1(shape, floor)
    if kind == "chiPlus":
        if i is None:
            raise BadIndex("chiPlus needs an index")
        return chi_plus(shape, i, floor)
    if kind == "subLaplacian":
        return sub_laplacian(shape, floor)
    raise ValueError(f"unknown builder {kind!r}, expected one of {', '.join(KINDS)}")


def constant(shape: FoliationShape, value: Coercible = 1, floor: Optional[int] = None) -> HSymbol:
    return HSymbol.constant(shape, value, floor=_floor(0, floor))


def character(shape: FoliationShape, k: Sequence[int], value: Coercible = 1,
              floor: Optional[int] = None) -> HSymbol:
    """value·e^{2πi k·x} as a degree-0 symbol"""
    return HSymbol.constant(shape, FourierFunction.character(k, value), floor=_floor(0, floor))


def momentum(shape: FoliationShape, i: int, floor: Optional[int] = None) -> HSymbol:
    """The coordinate p_i (1-based), of degree ⟨e_i⟩"""
    if not 1 <= i <= shape.n:
        raise BadIndex(f"momentum index {i} outside 1..{shape.n}")
    w = shape.weights[i - 1]
    return HSymbol.monomial(shape, shape.unit(i - 1), floor=_floor(w, floor))


def rho_power(shape: FoliationShape, quarter: int, coeff=1,
              floor: Optional[int] = None) -> HSymbol:
    """coeff·ρ^{quarter/4}"""
    return HSymbol.monomial(shape, rho_quarter=quarter, coeff=coeff,
                            floor=_floor(quarter, floor))


def log_rho_quarter(shape: FoliationShape, floor: int) -> HSymbol:
    """L = (1/4)·log ρ, the symbol of log Δ_H^{1/4}"""
    return HSymbol.monomial(shape, coeff=Fraction(1, 4), log_pow=1, top=0, floor=floor)
