"""Property checks for the residue trace and its numeric oracles."""
import logging
from itertools import product
from typing import List, Tuple

from ..residue.oracle import annulus_oracle, gaussian_factor_oracle
from ..residue.sphere import gaussian_moment, sphere_moment
from ..residue.wres import wres
from ..symbols.shape import FoliationShape
from ..symbols.symbol import HSymbol, commutator
from ..utils.generators import SHAPES, random_function, random_gamma, random_symbol
from .common import PropertySuite, integers

logger = logging.getLogger(__name__)

MAX_ORACLE_WEIGHT = 8


def even_moments(max_weight: int = MAX_ORACLE_WEIGHT) -> List[Tuple[FoliationShape, tuple]]:
    """Every (shape, γ) with γ even and ⟨γ⟩ ≤ max_weight, in a fixed order"""
    out = []
    for shape in SHAPES:
        for gamma in product(range(0, max_weight + 1, 2), repeat=shape.n):
            if shape.weight(gamma) <= max_weight:
                out.append((shape, gamma))
    return out


class ResidueSuite(PropertySuite):
    name = "residue"

    SHAPES = {
        "trace_property": SHAPES,
        "locality": SHAPES,
        "gaussian_factor": SHAPES,
    }

    def __init__(self, config):
        super().__init__(config)
        self.tol = config.get("cubature_tol", 1e-9)
        self.oracle_tol = config.get("oracle_tol", 1e-6)
        self.moments = even_moments()

    def case_count(self, check: str) -> int:
        count = super().case_count(check)
        if check == "oracle":
            return min(count, len(self.moments))
        return count

    def check_trace_property(self, rng, shape, index):
        top = integers(rng, 0, 1)
        a = random_symbol(rng, shape, top, shape.Q + 2 + top, components=3)
        b = random_symbol(rng, shape, 0, shape.Q + 2, components=3)
        return self.compare(wres(commutator(a, b)), 0, "wres(a*b - b*a) = 0")

    def check_locality(self, rng, shape, index):
        a = random_symbol(rng, shape, 0, shape.Q + 2, components=3)
        # perturb every degree except −Q
        noise = HSymbol.zero(shape, 0, a.floor)
        for degree in range(a.floor, 1):
            if degree == -shape.Q:
                continue
            gamma = random_gamma(rng, shape)
            noise = noise + HSymbol.monomial(shape, gamma, degree - shape.weight(gamma),
                                             random_function(rng, shape.n), top=0,
                                             floor=a.floor)
        return self.compare(wres(a + noise), wres(a), "wres sees only the degree -Q part")

    def check_oracle(self, rng, shape, index):
        shape, gamma = self.moments[index]
        exact = sphere_moment(gamma, shape)
        oracle = annulus_oracle(gamma, shape, self.tol)
        return self.numeric_case(exact, oracle, self.oracle_tol,
                                 f"sphere moment {gamma} on {shape}")

    def check_gaussian_factor(self, rng, shape, index):
        gamma = tuple(2 * g for g in random_gamma(rng, shape))
        expected = 1.0
        for axis, g in enumerate(gamma):
            value, _ = gaussian_factor_oracle(g, shape.is_leaf(axis))
            expected *= value
        exact = gaussian_moment(gamma, shape)
        return self.numeric_case(exact, expected, 1e-8 * max(1.0, expected),
                                 f"Gaussian moment {gamma} on {shape}")
