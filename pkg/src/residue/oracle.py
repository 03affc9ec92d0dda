"""Numeric cross-checks for the closed-form sphere moments."""
from __future__ import annotations

import logging
import math
from typing import Sequence, Tuple

from scipy import integrate

from ..errors import CubatureNoConvergence, DimensionMismatch
from ..symbols.shape import FoliationShape

logger = logging.getLogger(__name__)

ANNULUS_OUTER = math.exp(4.0)


def annulus_oracle(gamma: Sequence[int], shape: FoliationShape, tol: float = 1e-9) -> float:
    """∫ p^γ ρ^{−(⟨γ⟩+Q)/4} dp over {1 ≤ ρ ≤ e^4}, by nested adaptive quadrature.

    The integrand is homogeneous of degree −Q, so the annulus integral equals the
    cosphere moment times ∫_1^e dr/r = 1.
    """
    if shape.n > 3:
        raise DimensionMismatch(f"annulus cubature supports n <= 3, got n={shape.n}")
    if tol < 1e-10:
        raise ValueError(f"tolerance {tol} below 1e-10")
    gamma = tuple(int(g) for g in gamma)
    if len(gamma) != shape.n:
        raise DimensionMismatch(f"multi-index {gamma} does not fit shape {shape}")
    if any(g % 2 for g in gamma):
        # f(p) + f(−p) = 0 along the odd coordinate
        return 0.0
    exps = shape.rho_exponents
    power = -(shape.weight(gamma) + shape.Q) / 4.0
    inner_tol = tol / (10.0 * 2 ** shape.n)
    errors = []

    def level(j: int, s: float) -> float:
        k = exps[j]
        upper = max(ANNULUS_OUTER - s, 0.0) ** (1.0 / k)
        if j == shape.n - 1:
            lower = max(1.0 - s, 0.0) ** (1.0 / k)
            value, err = integrate.quad(
                lambda p: p ** gamma[j] * (s + p ** k) ** power,
                lower, upper, epsabs=inner_tol, epsrel=1e-12, limit=200)
            if j == 0:
                errors.append(err)
            return value
        breaks = [0.0]
        if s < 1.0:
            breaks.append((1.0 - s) ** (1.0 / k))
        breaks.append(upper)
        total = 0.0
        for a, b in zip(breaks, breaks[1:]):
            if b <= a:
                continue
            value, err = integrate.quad(
                lambda p: p ** gamma[j] * level(j + 1, s + p ** k),
                a, b, epsabs=inner_tol, epsrel=1e-12, limit=200)
            if j == 0:
                errors.append(err)
            total += value
        return total

    # positive orthant, doubled along every (even) axis
    value = level(0, 0.0) * 2 ** shape.n
    estimate = sum(errors) * 2 ** shape.n
    logger.debug("annulus oracle %s on %s: %.12g (error estimate %.3g)",
                 gamma, shape, value, estimate)
    if estimate > tol:
        raise CubatureNoConvergence(
            f"cubature error estimate {estimate:.3g} exceeds tolerance {tol:.3g}")
    return value


def gaussian_factor_oracle(g: int, leaf: bool) -> Tuple[float, float]:
    """∫_ℝ p^g e^{−p^k} dp with k = 4 on leaves and 2 transversally; (value, error)"""
    k = 4 if leaf else 2
    if g % 2:
        return 0.0, 0.0
    value, err = integrate.quad(lambda p: p ** g * math.exp(-p ** k), 0.0, math.inf,
                                epsabs=1e-13, epsrel=1e-12)
    return 2.0 * value, 2.0 * err
