"""Heisenberg ellipticity and Neumann-series parametrices."""
from __future__ import annotations

import logging
from typing import Tuple

from ..errors import NotElliptic, TruncationTooShallow, UnsupportedLeading
from ..scalars.exact import ExactScalar
from ..scalars.fourier import FourierFunction
from .clifford import CliffordWord
from .symbol import HSymbol, leading, star
from .terms import Monomial

logger = logging.getLogger(__name__)


def _leading_data(a: HSymbol) -> Tuple[Tuple[int, ...], ExactScalar, Monomial]:
    """(frequency k, scalar c, monomial m) with leading(a) = c·e^{2πik·x}·m"""
    a.check_classical()
    lead = leading(a)
    if lead.is_zero():
        raise NotElliptic(f"degree-{a.top} component vanishes")
    if not lead.is_scalar_type():
        raise UnsupportedLeading("leading component carries Clifford words")
    if len(lead.terms) > 1:
        raise UnsupportedLeading(
            "leading component is a sum of several p-monomials; invertibility is not decided")
    ((mono, _), f), = lead.terms.items()
    if len(f.support) > 1:
        raise UnsupportedLeading(
            f"leading coefficient {f.render()} is a multi-term trigonometric polynomial")
    if not f.is_character():
        raise UnsupportedLeading(f"leading coefficient {f.render()} is not a monomial scalar")
    (k, c), = f.items()
    return k, c, mono


def _vanishes_on_sphere(a: HSymbol, mono: Monomial) -> bool:
    # on n = 1 the sphere is {p = ±1}, where p never vanishes
    return a.shape.n > 1 and any(mono.gamma)


def is_heisenberg_elliptic(a: HSymbol) -> bool:
    try:
        _, _, mono = _leading_data(a)
    except NotElliptic:
        return False
    return not _vanishes_on_sphere(a, mono)


def leading_inverse(a: HSymbol, floor: int) -> HSymbol:
    """Exact inverse of the leading component, of degree −a.top"""
    k, c, mono = _leading_data(a)
    if _vanishes_on_sphere(a, mono):
        raise NotElliptic(f"leading symbol {mono.render()} vanishes on the cosphere")
    shape = a.shape
    coeff = FourierFunction.character(tuple(-x for x in k), c.inverse())
    if any(mono.gamma):
        # n = 1: (p·ρ^{q/4})^{-1} = p·ρ^{−(q+2)/4}
        inv = Monomial(mono.gamma, -mono.rho_quarter - 2)
    else:
        inv = Monomial(mono.gamma, -mono.rho_quarter)
    return HSymbol(shape, {(inv, CliffordWord()): coeff}, -a.top, floor)


def parametrix(a: HSymbol, floor: int) -> HSymbol:
    """b with a⋆b = b⋆a = 1 on all degrees ≥ floor"""
    m = a.top
    if a.floor - m > floor:
        raise TruncationTooShallow(
            f"symbol known down to degree {a.floor}, parametrix to degree {floor} needs "
            f"{floor + m}")
    target = floor - m
    b0 = leading_inverse(a, target)
    one = HSymbol.constant(a.shape, 1, floor=floor)
    r = (one - star(a, b0)).truncate(floor)
    if not r.component(0).is_zero():
        raise NotElliptic("leading product does not reduce to 1")
    r = r.with_top(-1) if floor <= -1 else HSymbol.zero(a.shape, 0, floor)
    series = one
    term = one
    steps = 0
    for _ in range(max(0, -floor)):
        term = star(term, r).truncate(floor)
        if term.is_zero():
            break
        series = series + term.with_top(0)
        steps += 1
    logger.debug("parametrix: %d Neumann steps down to degree %d", steps, floor)
    return star(b0, series.with_floor(floor))
