"""Mehler-type brackets: ⟨⟨exp(Δ + p·R·∂_p)⟩⟩ is the Todd series of R."""
from __future__ import annotations

import logging
from typing import Sequence

from ..scalars.exact import ExactScalar
from ..scalars.series import EpsSeries
from ..symbols.shape import FoliationShape
from .bracket import double_bracket
from .duhamel import duhamel_exp
from .laplacian import flat_laplacian
from .series import OpSeries, left_momentum, op_compose
from .todd import check_curvature_matrix

logger = logging.getLogger(__name__)


def mehler_shape(R: Sequence[Sequence[EpsSeries]]) -> FoliationShape:
    return FoliationShape(len(R), 0)


def mehler_perturbation(R: Sequence[Sequence[EpsSeries]]) -> OpSeries:
    """s = Σ_{i,j} p_i R^i_j ∂_{p_j}.

    Only the known coefficients of R enter; anything built from R beyond its
    truncation lands above that order after contraction.
    """
    order = check_curvature_matrix(R)
    shape = mehler_shape(R)
    out = OpSeries.zero(shape)
    for i, row in enumerate(R):
        for j, entry in enumerate(row):
            for m in range(1, order + 1):
                if entry[m].is_zero():
                    continue
                out = out + OpSeries.single(left_momentum(shape, i, entry[m]),
                                            dp=shape.unit(j), eps=m)
    return out


def _heat_prefactor(R: Sequence[Sequence[EpsSeries]], order: int) -> OpSeries:
    shape = mehler_shape(R)
    return duhamel_exp(flat_laplacian(shape), mehler_perturbation(R), order)


def mehler_bracket(R: Sequence[Sequence[EpsSeries]], order: int) -> EpsSeries:
    """⟨⟨exp(Δ + p_L·R·∂_p)⟩⟩ modulo ε^{order+1}"""
    order = min(order, check_curvature_matrix(R))
    prefactor = _heat_prefactor(R, order)
    result = double_bracket(prefactor, graded=False).scalar_series(order)
    logger.debug("mehler_bracket: %s", result.render())
    return result


def mehler_vanishing(alpha: Sequence[int], R: Sequence[Sequence[EpsSeries]],
                     order: int) -> EpsSeries:
    """⟨⟨(iε∂_x + p_L·R)^α exp(Δ + p_L·R·∂_p)⟩⟩, zero for every α"""
    order = min(order, check_curvature_matrix(R))
    shape = mehler_shape(R)
    if len(alpha) != shape.n or any(a < 0 for a in alpha):
        raise ValueError(f"multi-index {tuple(alpha)} does not fit a {shape.n}x{shape.n} matrix")
    prefix = OpSeries.identity(shape)
    for j, power in enumerate(alpha):
        factor = OpSeries.derivative(shape, dx=shape.unit(j), coeff=ExactScalar.i(), eps=1)
        for i in range(shape.n):
            entry = R[i][j]
            for m in range(1, order + 1):
                if not entry[m].is_zero():
                    factor = factor + OpSeries.single(left_momentum(shape, i, entry[m]), eps=m)
        for _ in range(power):
            prefix = op_compose(prefix, factor)
    body = op_compose(prefix, _heat_prefactor(R, order))
    return double_bracket(body, graded=False).scalar_series(order)
