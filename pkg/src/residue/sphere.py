"""Moments of the Heisenberg cosphere {ρ = 1} in closed form."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

from ..scalars.exact import ExactScalar
from ..symbols.shape import FoliationShape


@dataclass(frozen=True)
class SphereMoment:
    shape: FoliationShape
    gamma: Tuple[int, ...]
    value: ExactScalar


def _check(gamma: Sequence[int], shape: FoliationShape) -> Tuple[int, ...]:
    gamma = tuple(int(g) for g in gamma)
    if len(gamma) != shape.n or any(g < 0 for g in gamma):
        raise ValueError(f"multi-index {gamma} does not fit shape {shape}")
    return gamma


def gaussian_moment(gamma: Sequence[int], shape: FoliationShape) -> ExactScalar:
    """∫_{ℝ^n} p^γ e^{−ρ} dp = Π_{leaf} ½Γ((γ_i+1)/4) · Π_{transverse} Γ((γ_j+1)/2)"""
    gamma = _check(gamma, shape)
    if any(g % 2 for g in gamma):
        return ExactScalar.zero()
    value = ExactScalar.one()
    for axis, g in enumerate(gamma):
        if shape.is_leaf(axis):
            value = value * ExactScalar.gamma_quarter(g + 1) * Fraction(1, 2)
        else:
            value = value * ExactScalar.gamma_quarter(2 * g + 2)
    return value


def sphere_moment(gamma: Sequence[int], shape: FoliationShape) -> ExactScalar:
    """∫_{S_H} p^γ dσ_H with dσ_H = ι_L(dp) on {ρ = 1}.

    For f of Heisenberg degree d, ∫ f e^{−ρ} dp = ¼Γ((d+Q)/4)·∫_{S_H} f dσ_H.
    """
    gamma = _check(gamma, shape)
    if any(g % 2 for g in gamma):
        return ExactScalar.zero()
    radial = ExactScalar.gamma_quarter(shape.weight(gamma) + shape.Q)
    return gaussian_moment(gamma, shape) * 4 / radial


def moment_record(gamma: Sequence[int], shape: FoliationShape) -> SphereMoment:
    gamma = _check(gamma, shape)
    return SphereMoment(shape, gamma, sphere_moment(gamma, shape))
