from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from ..errors import NotInFiltration
from ..scalars.exact import ExactScalar
from ..symbols.shape import FoliationShape
from .series import OpSeries

logger = logging.getLogger(__name__)


def flat_laplacian_series(shape: FoliationShape) -> OpSeries:
    """iε Σ_i ∂_{x_i}∂_{p_i}"""
    out = OpSeries.zero(shape)
    for axis in range(shape.n):
        unit = shape.unit(axis)
        out = out + OpSeries.derivative(shape, dx=unit, dp=unit, coeff=ExactScalar.i(), eps=1)
    return out


def is_generalized_laplacian(s: OpSeries) -> bool:
    """Even, in 𝒟^{1/2}_1, and equal to the flat Laplacian modulo 𝒟^0_1"""
    if s.parity() != 0:
        return False
    if s.is_zero() or not s.in_filtration(Fraction(1, 2), 1):
        return False
    return (s - flat_laplacian_series(s.shape)).in_filtration(0, 1)


@dataclass(frozen=True)
class GeneralizedLaplacian:
    operator: OpSeries

    def __post_init__(self) -> None:
        if not is_generalized_laplacian(self.operator):
            raise NotInFiltration(
                f"operator of order {self.operator.filtration_order()} is not a generalized "
                "Laplacian")

    @property
    def shape(self) -> FoliationShape:
        return self.operator.shape


def flat_laplacian(shape: FoliationShape) -> GeneralizedLaplacian:
    return GeneralizedLaplacian(flat_laplacian_series(shape))


LaplacianLike = Union[GeneralizedLaplacian, OpSeries]


def as_operator(delta: LaplacianLike) -> OpSeries:
    if isinstance(delta, GeneralizedLaplacian):
        return delta.operator
    return delta
