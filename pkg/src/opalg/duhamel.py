"""Duhamel expansion of exp(Δ + s) around the heat operator exp(Δ).

exp(Δ + s) = P · exp(Δ) with P = Σ_k ∫_{0<t_1<…<t_k<1} σ^{t_1}(s)…σ^{t_k}(s).
``order`` bounds the ε-power left after contraction; every term of s must
carry at least one power of it, so the k-sum stops at k = order.
"""
from __future__ import annotations

import logging
from fractions import Fraction
from math import factorial
from typing import Dict, Iterator, Sequence, Tuple

from ..errors import NotInFiltration
from .flow import FlowPolynomial, sigma_conj
from .laplacian import LaplacianLike, as_operator
from .series import OpSeries, op_compose

logger = logging.getLogger(__name__)

Exponents = Tuple[int, ...]


def simplex_integral(exponents: Sequence[int]) -> Fraction:
    """∫ over {t_0 + … + t_k = 1, t_i ≥ 0} of Π t_i^{a_i} = Π a_i! / (k + Σ a_i)!"""
    k = len(exponents) - 1
    if k < 0 or any(a < 0 for a in exponents):
        raise ValueError(f"bad simplex exponents {tuple(exponents)}")
    num = 1
    for a in exponents:
        num *= factorial(a)
    return Fraction(num, factorial(k + sum(exponents)))


def _check_perturbation(s: OpSeries, order: int) -> None:
    if order < 0:
        raise ValueError(f"expansion order must be non-negative, got {order}")
    if s.is_zero():
        return
    if not s.in_filtration(0, 1):
        raise NotInFiltration(f"perturbation of order {s.filtration_order()} is not in D^0_1")
    if s.min_contracted() < 1:
        raise NotInFiltration("every perturbation term needs a net power of ε after contraction")


def _flow(delta: OpSeries, s: OpSeries, order: int) -> FlowPolynomial:
    return sigma_conj(delta, s.prune(order))


def duhamel_exp(delta: LaplacianLike, s: OpSeries, order: int) -> OpSeries:
    """P with exp(Δ + s) = P·exp(Δ), by iterated integration.

    W_0 = 1, W_k(τ) = ∫_0^τ W_{k−1}(u) σ^u(s) du, P = Σ_k W_k(1).
    """
    delta = as_operator(delta)
    _check_perturbation(s, order)
    shape = delta.shape
    identity = OpSeries.identity(shape, contracted_order=order)
    total = identity
    if s.is_zero():
        return total
    flow = _flow(delta, s, order)
    current: Dict[int, OpSeries] = {0: identity}
    for k in range(1, order + 1):
        nxt: Dict[int, OpSeries] = {}
        for a, w in current.items():
            for j, c in enumerate(flow.coeffs):
                term = op_compose(w, c).prune(order)
                if term.is_zero():
                    continue
                power = a + j + 1
                term = term.scale(Fraction(1, power))
                nxt[power] = nxt[power] + term if power in nxt else term
        if not nxt:
            break
        for w in nxt.values():
            total = total + w
        current = nxt
        logger.debug("duhamel_exp: level %d has %d t-powers", k, len(nxt))
    return total


def _compositions(m: int, parts: int) -> Iterator[Tuple[int, ...]]:
    if parts == 1:
        yield (m,)
        return
    for first in range(m + 1):
        for rest in _compositions(m - first, parts - 1):
            yield (first,) + rest


def _multinomial(parts: Sequence[int]) -> int:
    out = factorial(sum(parts))
    for a in parts:
        out //= factorial(a)
    return out


def duhamel_first_form(delta: LaplacianLike, s: OpSeries, order: int) -> OpSeries:
    """P from the symmetric simplex form Σ_k ∫_{Δ_k} e^{t_0Δ} s e^{t_1Δ} … s e^{t_kΔ}.

    Moving every heat factor to the left gives e^{Δ} Π_j σ^{−(t_j+…+t_k)}(s), so
    P = σ^1(Σ_k ∫_{Δ_k} Π_j σ^{−(t_j+…+t_k)}(s)), each monomial integrated with
    simplex_integral.
    """
    delta = as_operator(delta)
    _check_perturbation(s, order)
    shape = delta.shape
    identity = OpSeries.identity(shape, contracted_order=order)
    if s.is_zero():
        return identity
    flow = _flow(delta, s, order)
    backward = [c.scale((-1) ** m) for m, c in enumerate(flow.coeffs)]
    inner = identity
    for k in range(1, order + 1):
        poly: Dict[Exponents, OpSeries] = {(0,) * (k + 1): identity}
        for j in range(1, k + 1):
            step: Dict[Exponents, OpSeries] = {}
            for exps, op in poly.items():
                for m, c in enumerate(backward):
                    term = op_compose(op, c).prune(order)
                    if term.is_zero():
                        continue
                    for parts in _compositions(m, k - j + 1):
                        new = list(exps)
                        for offset, a in enumerate(parts):
                            new[j + offset] += a
                        key = tuple(new)
                        piece = term.scale(_multinomial(parts))
                        step[key] = step[key] + piece if key in step else piece
            poly = step
        if not poly:
            break
        for exps, op in poly.items():
            inner = inner + op.scale(simplex_integral(exps))
    return sigma_conj(delta, inner).at(1)


def op_exp_series(s: OpSeries, eps_order: int) -> OpSeries:
    """Σ_k s^k/k! modulo ε^{eps_order+1}; s must sit in 𝒟_1"""
    if not s.is_zero() and s.min_eps() < 1:
        raise NotInFiltration("the exponential series needs an operator in D_1")
    shape = s.shape
    s = s.restrict(eps_order)
    total = OpSeries.identity(shape, eps_order=eps_order)
    power = total
    for k in range(1, eps_order + 1):
        power = op_compose(power, s).restrict(eps_order).scale(Fraction(1, k))
        if power.is_zero():
            break
        total = total + power
    return total


def exp_factorization_defect(delta: LaplacianLike, s: OpSeries, eps_order: int) -> OpSeries:
    """P·exp(Δ) − exp(Δ + s) modulo ε^{eps_order+1}; zero when the expansion is right"""
    delta = as_operator(delta)
    prefactor = duhamel_exp(delta, s, eps_order)
    lhs = op_compose(prefactor, op_exp_series(delta, eps_order)).restrict(eps_order)
    rhs = op_exp_series(delta + s, eps_order)
    return _strip(lhs, eps_order) - _strip(rhs, eps_order)


def _strip(op: OpSeries, eps_order: int) -> OpSeries:
    """Raw ε-truncation without the contracted bookkeeping"""
    return OpSeries(op.shape, {k: v for k, v in op.items() if k.eps <= eps_order},
                    eps_order=eps_order, symbol_floor=op.symbol_floor)
