"""The heat flow on operators, σ^t(s) = e^{tΔ} s e^{−tΔ}.

For a generalized Laplacian ad(Δ) raises the filtration index, so the flow is
a polynomial in t once a truncation is fixed.
"""
from __future__ import annotations

import logging
from fractions import Fraction
from math import factorial
from typing import List, Optional, Sequence

from ..errors import NotInFiltration
from ..scalars.exact import Coercible
from .laplacian import LaplacianLike, as_operator
from .series import OpSeries, op_compose

logger = logging.getLogger(__name__)

MAX_FLOW_DEGREE = 64


class FlowPolynomial:
    """Σ_j t^j c_j with operator coefficients"""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Sequence[OpSeries]) -> None:
        if not coeffs:
            raise ValueError("a flow polynomial needs at least one coefficient")
        self._coeffs = tuple(coeffs)

    @property
    def coeffs(self):
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    def __getitem__(self, j: int) -> OpSeries:
        if 0 <= j < len(self._coeffs):
            return self._coeffs[j]
        return OpSeries.zero(self._coeffs[0].shape)

    def at(self, t: Coercible) -> OpSeries:
        total = self._coeffs[-1]
        for c in reversed(self._coeffs[:-1]):
            total = total.scale(t) + c
        return total


def adjoint(delta: OpSeries, s: OpSeries) -> OpSeries:
    """ad(Δ)(s) for even Δ"""
    return op_compose(delta, s) - op_compose(s, delta)


def sigma_conj(delta: LaplacianLike, s: OpSeries,
               max_power: Optional[int] = None) -> FlowPolynomial:
    """σ^t(s) = Σ_j t^j ad(Δ)^j(s)/j!.

    Terms of s beyond its ε-truncation stay dropped, which makes the sum finite.
    With max_power the polynomial is cut at t^max_power; without it the
    expansion must close on its own.
    """
    delta = as_operator(delta)
    limit = MAX_FLOW_DEGREE if max_power is None else max_power
    coeffs: List[OpSeries] = [s]
    current = s
    for j in range(1, limit + 2):
        current = adjoint(delta, current)
        if s.eps_order is not None:
            current = current.restrict(s.eps_order)
        if current.is_zero():
            break
        if j > limit:
            if max_power is None:
                raise NotInFiltration(
                    f"heat flow did not close after {MAX_FLOW_DEGREE} commutators")
            break
        coeffs.append(current.scale(Fraction(1, factorial(j))))
    logger.debug("sigma_conj: flow polynomial of degree %d", len(coeffs) - 1)
    return FlowPolynomial(coeffs)