from .crossed import CrossedSymbol, crossed_commutator, crossed_star, localized_residue
from .isometry import IsometryElement, act_on_symbol, generate_group
from .pairing import (
    determine_kappa,
    fundamental_pairing_1d,
    toeplitz_index_oracle_1d,
    winding_pair,
    winding_symbol,
)
from .radul import hochschild_coboundary, leading_lift, lifted_radul, radul_cocycle

__all__ = [
    "CrossedSymbol",
    "IsometryElement",
    "act_on_symbol",
    "crossed_commutator",
    "crossed_star",
    "determine_kappa",
    "fundamental_pairing_1d",
    "generate_group",
    "hochschild_coboundary",
    "leading_lift",
    "lifted_radul",
    "localized_residue",
    "radul_cocycle",
    "toeplitz_index_oracle_1d",
    "winding_pair",
    "winding_symbol",
]
