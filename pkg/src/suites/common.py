import logging
from fractions import Fraction
from typing import Any, Callable, Dict, List, Sequence, Tuple

import numpy as np

from ..base import CaseResult, VerificationCase, VerificationSuite
from ..opalg.series import OpSeries
from ..scalars.exact import ExactScalar
from ..scalars.series import EpsSeries
from ..symbols.shape import FoliationShape
from ..symbols.symbol import HSymbol
from ..utils.generators import case_seed, make_rng

logger = logging.getLogger(__name__)


def render(value: Any) -> str:
    if hasattr(value, "render"):
        return value.render()
    return str(value)


def shifted(value: Any) -> Any:
    """The value off by one unit, as produced by a wrong normalization"""
    if isinstance(value, bool):
        return not value
    if isinstance(value, (int, Fraction)):
        return value + 1
    if isinstance(value, ExactScalar):
        return value + 1
    if isinstance(value, EpsSeries):
        return value + EpsSeries.one(value.order)
    if isinstance(value, HSymbol):
        return value + HSymbol.monomial(value.shape, rho_quarter=value.top,
                                        top=value.top, floor=value.floor)
    if isinstance(value, OpSeries):
        return value + OpSeries.identity(value.shape)
    raise TypeError(f"no shifted form for {type(value).__name__}")


class PropertySuite(VerificationSuite):
    """Suite whose checks are methods check_<name>(rng, shape, index).

    Cases are laid out per check in sorted order, shapes taken round-robin from
    SHAPES[check]. With inject_fault set, every exact comparison is made
    against an expected value shifted by one unit; a negative control that
    must fail every comparing case.
    """

    SHAPES: Dict[str, Sequence[FoliationShape]] = {}

    def check_names(self) -> List[str]:
        return sorted(self.counts)

    def case_count(self, check: str) -> int:
        return int(self.counts.get(check, 0))

    def cases(self) -> List[VerificationCase]:
        out = []
        for check in self.check_names():
            shapes = self.SHAPES.get(check) or (None,)
            for index in range(self.case_count(check)):
                shape = shapes[index % len(shapes)]
                inputs = {
                    "seed": case_seed(self.seed, check, index),
                    "index": index,
                    "shape": f"{shape.v},{shape.h}" if shape is not None else None,
                }
                out.append(VerificationCase(self.name, f"{self.name}.{check}.{index:04d}",
                                            check, inputs))
        return out

    def run_case(self, case: VerificationCase) -> CaseResult:
        check: Callable = getattr(self, f"check_{case.check}")
        shape = FoliationShape.parse(case.inputs["shape"]) if case.inputs["shape"] else None
        rng = make_rng(case.inputs["seed"])
        result = check(rng, shape, case.inputs["index"])
        if isinstance(result, CaseResult):
            result.case = case
            return result
        passed, detail = result
        return CaseResult(case, passed, detail)

    # comparisons

    def compare(self, actual: Any, expected: Any, what: str) -> Tuple[bool, str]:
        if self.inject_fault:
            expected = shifted(expected)
        if actual == expected:
            return True, what
        return False, f"{what}: got {render(actual)}, expected {render(expected)}"

    def all_of(self, *results: Tuple[bool, str]) -> Tuple[bool, str]:
        for passed, detail in results:
            if not passed:
                return False, detail
        return True, "; ".join(detail for _, detail in results)

    def numeric_case(self, exact: ExactScalar, oracle: float, tolerance: float,
                     what: str, digits: int = 30) -> CaseResult:
        if self.inject_fault:
            exact = shifted(exact)
        value = complex(exact.numeric(digits))
        error = abs(value - oracle)
        passed = error <= tolerance
        detail = f"{what}: |{value.real:.12g} - {oracle:.12g}| = {error:.3g}"
        return CaseResult(None, passed, detail, exact=exact.render(), numeric=value.real,
                          oracle=float(oracle), tolerance=tolerance)


def integers(rng: np.random.Generator, low: int, high: int) -> int:
    return int(rng.integers(low, high + 1))
