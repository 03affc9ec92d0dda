"""Randomized property suites, one per engine area."""
from .crossed import CrossedSuite
from .opalg import OpalgSuite
from .residue import ResidueSuite
from .symbols import SymbolsSuite

SUITES = {
    "symbols": SymbolsSuite,
    "residue": ResidueSuite,
    "crossed": CrossedSuite,
    "opalg": OpalgSuite,
}

__all__ = ["SUITES", "SymbolsSuite", "ResidueSuite", "CrossedSuite", "OpalgSuite"]
