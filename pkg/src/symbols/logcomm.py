from __future__ import annotations

from ..errors import NotClassical
from .builders import log_rho_quarter
from .symbol import HSymbol, star


def log_commutator(b: HSymbol) -> HSymbol:
    """[L, b]_⋆ with L = (1/4)·log ρ, the symbol of log Δ_H^{1/4} on the flat torus.

    Only ∂_p^α log ρ with |α| ≥ 1 survives, so the result is classical.
    """
    if not b.is_classical():
        raise NotClassical("log_commutator needs a classical symbol")
    log_sym = log_rho_quarter(b.shape, floor=b.floor - b.top)
    result = star(log_sym, b) - star(b, log_sym)
    if not result.is_classical():
        raise NotClassical("log terms failed to cancel in [log ρ, b]")
    return result
