"""Contraction of operator series against the flat heat kernel.

⟨∂_x^α ∂_p^β⟩ pairs each x-derivative with a p-derivative on the same axis;
every pairing contributes i/ε, so the bracket is (i/ε)^{|α|} α! when α = β and
zero otherwise.
"""
from __future__ import annotations

import logging
from math import factorial
from typing import (
    TYPE_CHECKING, Dict, Iterator, Mapping, NamedTuple, Optional, Sequence, Tuple, Union,
)

from ..scalars.exact import ExactScalar
from ..scalars.series import EpsSeries
from ..symbols.clifford import right_contraction
from ..symbols.shape import FoliationShape
from ..symbols.symbol import HSymbol
from ..symbols.terms import Monomial
from .series import OpSeries

if TYPE_CHECKING:
    from .trace import TraceClassElement

logger = logging.getLogger(__name__)


class Contraction(NamedTuple):
    coeff: ExactScalar
    eps: int

    def is_zero(self) -> bool:
        return self.coeff.is_zero()


def bracket(dx: Sequence[int], dp: Sequence[int]) -> Contraction:
    """⟨∂_x^α ∂_p^β⟩ = coeff · ε^eps"""
    dx, dp = tuple(dx), tuple(dp)
    if len(dx) != len(dp):
        raise ValueError(f"derivative indices of different lengths: {dx}, {dp}")
    if dx != dp:
        return Contraction(ExactScalar.zero(), 0)
    matchings = 1
    for a in dx:
        matchings *= factorial(a)
    order = sum(dx)
    return Contraction(ExactScalar.i() ** order * matchings, -order)


class SymbolSeries:
    """Σ_j ε^j σ_j with symbol coefficients; powers above ``order`` are unknown"""

    __slots__ = ("_shape", "_coeffs", "_order")

    def __init__(self, shape: FoliationShape, coeffs: Mapping[int, HSymbol],
                 order: Optional[int] = None) -> None:
        clean: Dict[int, HSymbol] = {}
        for power, sym in coeffs.items():
            shape.check(sym.shape)
            if order is not None and power > order:
                continue
            if not sym.is_zero():
                clean[power] = sym
        self._shape = shape
        self._coeffs = clean
        self._order = order

    @property
    def shape(self) -> FoliationShape:
        return self._shape

    @property
    def order(self) -> Optional[int]:
        return self._order

    def powers(self) -> Tuple[int, ...]:
        return tuple(sorted(self._coeffs))

    def items(self) -> Iterator[Tuple[int, HSymbol]]:
        return iter(sorted(self._coeffs.items()))

    def is_zero(self) -> bool:
        return not self._coeffs

    def __getitem__(self, power: int) -> HSymbol:
        if self._order is not None and power > self._order:
            raise IndexError(f"coefficient of ε^{power} is beyond the truncation "
                             f"ε^{self._order}")
        return self._coeffs.get(power) or HSymbol.zero(self._shape, 0, -self._shape.Q)

    def scalar_series(self, order: Optional[int] = None) -> EpsSeries:
        """The coefficients as exact scalars; each must be a constant symbol"""
        if order is None:
            order = self._order if self._order is not None else max(self._coeffs, default=0)
        if any(power < 0 for power in self._coeffs):
            raise ValueError("series has negative powers of ε")
        unit = Monomial(self._shape.zero_index(), 0, 0)
        values = []
        for power in range(order + 1):
            sym = self[power]
            value = ExactScalar.zero()
            for (mono, word), f in sym.terms.items():
                if mono != unit or not word.is_identity() or not f.is_constant():
                    raise ValueError(f"coefficient of ε^{power} is not a constant: "
                                     f"{sym.render()}")
                value = f.coeff(self._shape.zero_index())
            values.append(value)
        return EpsSeries(values, order)

    def render(self) -> str:
        if not self._coeffs:
            return "0"
        return " + ".join(f"[{sym.render()}]·eps^{power}" for power, sym in self.items())


def double_bracket(t: Union[OpSeries, TraceClassElement], graded: bool = True) -> SymbolSeries:
    """⟨⟨t⟩⟩: contract every term against the heat kernel.

    graded: right words contract with ⟨w⟩ = (−1)^n str(w), the pairing behind
    the supertrace. Otherwise right words must be trivial and the plain scalar
    bracket with ⟨⟨exp Δ⟩⟩ = 1 is returned.
    """
    op = t.prefactor if hasattr(t, "prefactor") else t
    shape = op.shape
    n = shape.n
    out: Dict[int, HSymbol] = {}
    for key, sym in op.items():
        c = bracket(key.dx, key.dp)
        if c.is_zero():
            continue
        if graded:
            weight = right_contraction(key.word, n)
            if weight.is_zero():
                continue
        elif not key.word.is_identity():
            raise ValueError(f"plain bracket of a term with right word {key.word.render()}")
        else:
            weight = ExactScalar.one()
        power = key.eps + c.eps
        term = sym.scale(c.coeff * weight)
        out[power] = out[power] + term if power in out else term
    order = op.contracted_order if op.contracted_order is not None else op.eps_order
    logger.debug("double_bracket: powers %s", sorted(out))
    return SymbolSeries(shape, out, order)
