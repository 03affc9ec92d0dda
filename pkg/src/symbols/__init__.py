from .builders import builders, character, chi_plus, constant, momentum, q1, rho, rho_power
from .clifford import CliffordWord, clifford_mul, clifford_traces
from .elliptic import is_heisenberg_elliptic, parametrix
from .logcomm import log_commutator
from .shape import FoliationShape
from .symbol import (
    HSymbol,
    commutator,
    dilate,
    leading,
    pointwise,
    restrict_to_sphere,
    star,
    star_direct,
)

__all__ = [
    "CliffordWord",
    "FoliationShape",
    "HSymbol",
    "builders",
    "character",
    "chi_plus",
    "clifford_mul",
    "clifford_traces",
    "commutator",
    "constant",
    "dilate",
    "is_heisenberg_elliptic",
    "leading",
    "log_commutator",
    "momentum",
    "parametrix",
    "pointwise",
    "q1",
    "restrict_to_sphere",
    "rho",
    "rho_power",
    "star",
    "star_direct",
]
