"""The equivariant Radul cocycle φ(aU_g, bU_h) = ∮ aU_g [log Δ_H^{1/4}, bU_h]."""
from __future__ import annotations

import logging
from typing import Callable, Optional

from ..errors import NotDegreeZero
from ..scalars.exact import ExactScalar
from ..symbols.symbol import HSymbol, star
from ..symbols.logcomm import log_commutator
from ..residue.wres import wres
from .crossed import CrossedSymbol, crossed_star

logger = logging.getLogger(__name__)

Cochain = Callable[[CrossedSymbol, CrossedSymbol], ExactScalar]


def radul_pair(g, a: HSymbol, h, b: HSymbol) -> ExactScalar:
    """φ(aU_g, bU_h); zero unless gh = e. Tier-E actions fix log ρ, so the
    integrand is a ⋆ α_g([L, b]) and stays classical."""
    if not (g * h).is_identity():
        return ExactScalar.zero()
    integrand = star(a, g.act_on_symbol(log_commutator(b)))
    return wres(integrand)


def radul_cocycle(A: CrossedSymbol, B: CrossedSymbol) -> ExactScalar:
    total = ExactScalar.zero()
    for g, a in A.items():
        for h, b in B.items():
            total = total + radul_pair(g, a, h, b)
    logger.debug("radul cocycle: %s", total.render())
    return total


def hochschild_coboundary(phi: Cochain, A: CrossedSymbol, B: CrossedSymbol,
                          C: CrossedSymbol) -> ExactScalar:
    """bφ(A, B, C) = φ(AB, C) − φ(A, BC) + φ(CA, B)"""
    return (phi(crossed_star(A, B), C) - phi(A, crossed_star(B, C))
            + phi(crossed_star(C, A), B))


def leading_lift(f: HSymbol, floor: Optional[int] = None) -> HSymbol:
    """The canonical splitting of degree-0 leading data: f itself, trusted down to floor"""
    if not f.is_classical() or any(d != 0 for d in f.degrees()):
        raise NotDegreeZero("leading data must be a classical degree-0 homogeneous symbol")
    floor = -f.shape.Q - 1 if floor is None else floor
    return f.component(0).with_top(0).with_floor(floor)


def lift_crossed(F: CrossedSymbol, floor: Optional[int] = None) -> CrossedSymbol:
    return CrossedSymbol(F.shape, {g: leading_lift(f, floor) for g, f in F.items()})


def lifted_radul(F0: CrossedSymbol, F1: CrossedSymbol, floor: Optional[int] = None) -> ExactScalar:
    """φ on canonical leading lifts, the tensor-algebra representative of the cocycle"""
    return radul_cocycle(lift_crossed(F0, floor), lift_crossed(F1, floor))
