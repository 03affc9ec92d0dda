"""Trace-class elements P·exp(Δ) and the supertrace Tr_s = ∮ ⟨⟨·⟩⟩_n."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Mapping, Optional

from ..crossed.isometry import IsometryElement
from ..errors import TruncationTooShallow
from ..residue.wres import wres
from ..scalars.exact import Coercible, ExactScalar
from ..symbols.shape import FoliationShape
from .bracket import double_bracket
from .flow import sigma_conj
from .laplacian import flat_laplacian
from .series import OpSeries, op_compose

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TraceClassElement:
    """prefactor · exp(Δ_flat)"""

    prefactor: OpSeries

    @classmethod
    def heat(cls, shape: FoliationShape, contracted_order: Optional[int] = None
             ) -> TraceClassElement:
        return cls(OpSeries.identity(shape, contracted_order=contracted_order))

    @property
    def shape(self) -> FoliationShape:
        return self.prefactor.shape

    def parity(self) -> Optional[int]:
        return self.prefactor.parity()

    def __add__(self, other: TraceClassElement) -> TraceClassElement:
        return TraceClassElement(self.prefactor + other.prefactor)

    def __sub__(self, other: TraceClassElement) -> TraceClassElement:
        return TraceClassElement(self.prefactor - other.prefactor)

    def scale(self, factor: Coercible) -> TraceClassElement:
        return TraceClassElement(self.prefactor.scale(factor))

    def left_act(self, d: OpSeries) -> TraceClassElement:
        """d·(P e^Δ) = (d∘P) e^Δ"""
        return TraceClassElement(op_compose(d, self.prefactor))

    def right_act(self, d: OpSeries) -> TraceClassElement:
        """(P e^Δ)·d = (P∘σ^1(d)) e^Δ"""
        bound = self.prefactor.contracted_order
        if bound is not None:
            low = self.prefactor.min_contracted() or 0
            d = d.prune(bound - low)
        moved = sigma_conj(flat_laplacian(self.shape), d).at(1)
        return TraceClassElement(op_compose(self.prefactor, moved))


def trace_commutator(d: OpSeries, t: TraceClassElement) -> TraceClassElement:
    """[d, t] = d·t − (−1)^{|d||t|} t·d for homogeneous d and t"""
    pd, pt = d.parity(), t.parity()
    if pd is None or pt is None:
        raise ValueError("graded commutator needs homogeneous elements")
    sign = -1 if pd and pt else 1
    return t.left_act(d) - t.right_act(d).scale(sign)


def tr_s(t: TraceClassElement) -> ExactScalar:
    """wres of the ε^n coefficient of ⟨⟨t⟩⟩, left words traced with τ"""
    n = t.shape.n
    series = double_bracket(t)
    try:
        top = series[n]
    except IndexError:
        raise TruncationTooShallow(
            f"supertrace needs the bracket to order ε^{n}, the element is known to "
            f"ε^{series.order}") from None
    value = wres(top)
    logger.debug("tr_s on shape %s: %s", t.shape, value.render())
    return value


def tr_s_localized(elements: Mapping[IsometryElement, TraceClassElement]) -> ExactScalar:
    """Tr_s of the identity component of Σ_g t_g U_g"""
    for g, t in elements.items():
        if g.is_identity():
            return tr_s(t)
    return ExactScalar.zero()
