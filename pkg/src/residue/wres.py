from __future__ import annotations

import logging
from fractions import Fraction

from ..errors import LogResidueUnsupported, TruncationTooShallow
from ..scalars.exact import ExactScalar
from ..symbols.clifford import normalized_trace
from ..symbols.symbol import HSymbol
from .sphere import sphere_moment

logger = logging.getLogger(__name__)


def residue_prefactor(n: int) -> ExactScalar:
    """(2π)^{−n}"""
    return ExactScalar.pi(-n) * Fraction(1, 2 ** n)


def wres(a: HSymbol) -> ExactScalar:
    """Wodzicki residue: (2π)^{−n} Σ ∫_{T^n} c · τ(w) · ∫_{S_H} p^γ over the degree −Q terms.

    τ is the fiber trace normalized to τ(1) = 1.
    """
    shape = a.shape
    target = -shape.Q
    if a.floor > target:
        raise TruncationTooShallow(
            f"degree {target} lies below the floor {a.floor}; the residue is unknown")
    total = ExactScalar.zero()
    for (mono, word), f in a.terms.items():
        if mono.degree(shape) != target:
            continue
        if mono.log_pow:
            raise LogResidueUnsupported(f"log term {mono.render()} at the residue degree")
        c = f.torus_integral()
        if c.is_zero():
            continue
        tau = normalized_trace(word, shape.n)
        if tau.is_zero():
            continue
        total = total + c * tau * sphere_moment(mono.gamma, shape)
    result = total * residue_prefactor(shape.n)
    logger.debug("wres on shape %s: %s", shape, result.render())
    return result
