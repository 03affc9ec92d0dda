"""Monomials p^γ ρ^{q/4} (log ρ)^L and their p-derivatives in canonical form.

Canonical basis: with n ≥ 2 the leading exponent satisfies γ_1 < 4 (p_1^4 is
rewritten as ρ − Σ_{i>1} p_i^{k_i}); on the shape (1,0) p^2 = ρ^{1/2}, so
γ_1 < 2. Every symbol coefficient class has exactly one expansion in this basis.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Dict, NamedTuple, Tuple

from ..errors import NotClassical
from .shape import FoliationShape

Gamma = Tuple[int, ...]


class Monomial(NamedTuple):
    gamma: Gamma
    rho_quarter: int
    log_pow: int = 0

    def degree(self, shape: FoliationShape) -> int:
        return shape.weight(self.gamma) + self.rho_quarter

    def render(self) -> str:
        parts = []
        for i, g in enumerate(self.gamma):
            if g:
                parts.append(f"p{i + 1}^{g}" if g > 1 else f"p{i + 1}")
        if self.rho_quarter:
            parts.append(f"rho^({self.rho_quarter}/4)")
        if self.log_pow:
            parts.append("log(rho)")
        return "·".join(parts) if parts else "1"


MonomialSum = Dict[Monomial, Fraction]


def _accumulate(out: MonomialSum, key: Monomial, coeff: Fraction) -> None:
    value = out.get(key, Fraction(0)) + coeff
    if value:
        out[key] = value
    else:
        out.pop(key, None)


@lru_cache(maxsize=None)
def canonical(shape: FoliationShape, mono: Monomial) -> Tuple[Tuple[Monomial, Fraction], ...]:
    """Expansion of a monomial in the canonical basis"""
    gamma = mono.gamma
    if shape.n == 1:
        g = gamma[0]
        return ((Monomial((g % 2,), mono.rho_quarter + 2 * (g // 2), mono.log_pow),
                 Fraction(1)),)
    if gamma[0] < 4:
        return ((mono, Fraction(1)),)
    out: MonomialSum = {}
    lowered = (gamma[0] - 4,) + gamma[1:]
    # p_1^4 = ρ − Σ_{i>1} p_i^{k_i}
    for key, c in canonical(shape, Monomial(lowered, mono.rho_quarter + 4, mono.log_pow)):
        _accumulate(out, key, c)
    for i in range(1, shape.n):
        bumped = list(lowered)
        bumped[i] += shape.rho_exponents[i]
        for key, c in canonical(shape, Monomial(tuple(bumped), mono.rho_quarter, mono.log_pow)):
            _accumulate(out, key, -c)
    return tuple(sorted(out.items()))


def canonicalize(shape: FoliationShape, raw: MonomialSum) -> MonomialSum:
    out: MonomialSum = {}
    for mono, c in raw.items():
        for key, k in canonical(shape, mono):
            _accumulate(out, key, c * k)
    return out


def multiply(shape: FoliationShape, a: Monomial, b: Monomial) -> Tuple[Tuple[Monomial, Fraction], ...]:
    """Pointwise product; at most one log factor survives"""
    if a.log_pow + b.log_pow > 1:
        raise NotClassical("products with (log ρ)^2 leave the symbol class")
    gamma = tuple(x + y for x, y in zip(a.gamma, b.gamma))
    return canonical(shape, Monomial(gamma, a.rho_quarter + b.rho_quarter,
                                     a.log_pow + b.log_pow))


@lru_cache(maxsize=None)
def dp(shape: FoliationShape, mono: Monomial, axis: int) -> Tuple[Tuple[Monomial, Fraction], ...]:
    """∂/∂p_axis of a canonical monomial, again canonical"""
    k = shape.rho_exponents[axis]
    raw: MonomialSum = {}
    gamma = mono.gamma
    if gamma[axis]:
        lowered = list(gamma)
        lowered[axis] -= 1
        _accumulate(raw, Monomial(tuple(lowered), mono.rho_quarter, mono.log_pow),
                    Fraction(gamma[axis]))
    raised = list(gamma)
    raised[axis] += k - 1
    raised_t = tuple(raised)
    if mono.rho_quarter:
        # ∂ρ^{q/4} = (q/4)·k·p^{k−1}·ρ^{(q−4)/4}
        _accumulate(raw, Monomial(raised_t, mono.rho_quarter - 4, mono.log_pow),
                    Fraction(mono.rho_quarter * k, 4))
    if mono.log_pow:
        # ∂ log ρ = k·p^{k−1}·ρ^{−1}
        _accumulate(raw, Monomial(raised_t, mono.rho_quarter - 4, 0), Fraction(k))
    return tuple(sorted(canonicalize(shape, raw).items()))


@lru_cache(maxsize=None)
def dp_multi(shape: FoliationShape, mono: Monomial,
             alpha: Tuple[int, ...]) -> Tuple[Tuple[Monomial, Fraction], ...]:
    """∂_p^α of a canonical monomial, built from the memoized first derivatives"""
    if not any(alpha):
        return ((mono, Fraction(1)),)
    axis = max(i for i, a in enumerate(alpha) if a)
    previous = list(alpha)
    previous[axis] -= 1
    out: MonomialSum = {}
    for key, c in dp_multi(shape, mono, tuple(previous)):
        for key2, c2 in dp(shape, key, axis):
            _accumulate(out, key2, c * c2)
    return tuple(sorted(out.items()))


def sphere_representative(shape: FoliationShape, mono: Monomial) -> Monomial:
    """The degree-0 monomial p^γ ρ^{−⟨γ⟩/4} agreeing with mono on ρ = 1"""
    return Monomial(mono.gamma, -shape.weight(mono.gamma), 0)
