"""Todd series of a curvature-type matrix with ε-series entries."""
from __future__ import annotations

import logging
from typing import List, Optional, Sequence

from ..scalars.exact import Coercible
from ..scalars.series import EpsSeries, todd_log_coefficients

logger = logging.getLogger(__name__)

Matrix = List[List[EpsSeries]]


def check_curvature_matrix(R: Sequence[Sequence[EpsSeries]]) -> int:
    """Square, no ε^0 term; returns the common truncation order"""
    size = len(R)
    if size == 0 or any(len(row) != size for row in R):
        raise ValueError("curvature matrix must be square and non-empty")
    for row in R:
        for entry in row:
            if not entry[0].is_zero():
                raise ValueError("curvature matrix entries must start at ε^1")
    return min(entry.order for row in R for entry in row)


def eps_matrix(rows: Sequence[Sequence[Coercible]], order: int) -> Matrix:
    """ε·R_0 for an exact matrix R_0"""
    return [[EpsSeries.eps(order, value) for value in row] for row in rows]


def matrix_product(A: Sequence[Sequence[EpsSeries]],
                   B: Sequence[Sequence[EpsSeries]], order: int) -> Matrix:
    size = len(A)
    out: Matrix = []
    for i in range(size):
        row = []
        for j in range(size):
            total = EpsSeries.zero(order)
            for k in range(size):
                total = total + A[i][k] * B[k][j]
            row.append(total.truncate(order))
        out.append(row)
    return out


def matrix_trace(A: Sequence[Sequence[EpsSeries]], order: int) -> EpsSeries:
    total = EpsSeries.zero(order)
    for i in range(len(A)):
        total = total + A[i][i]
    return total.truncate(order)


def todd_series(R: Sequence[Sequence[EpsSeries]], order: Optional[int] = None) -> EpsSeries:
    """det(R/(e^R − 1)) = exp(Σ_k c_k tr R^k), c_k from log(x/(e^x − 1))"""
    available = check_curvature_matrix(R)
    order = available if order is None else min(order, available)
    coeffs = todd_log_coefficients(order)
    total = EpsSeries.zero(order)
    power = [[entry.truncate(order) for entry in row] for row in R]
    for k in range(1, order + 1):
        if coeffs[k]:
            total = total + matrix_trace(power, order) * coeffs[k]
        power = matrix_product(power, R, order)
    logger.debug("todd_series: log-series %s", total.render())
    return total.exp()
