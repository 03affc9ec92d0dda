"""Property checks for exact scalars, the star product and the symbol codec."""
import logging
from fractions import Fraction

import mpmath
import numpy as np

from ..documents import canonicalize, parse_symbol, serialize_symbol
from ..scalars.cyclotomic import CyclotomicNumber, euler_phi
from ..scalars.exact import ExactScalar
from ..symbols.clifford import clifford_mul, fiber_matrix
from ..symbols.elliptic import parametrix
from ..symbols.shape import FoliationShape
from ..symbols.symbol import (
    HSymbol,
    commutator,
    dilate,
    leading,
    pointwise,
    star,
    star_direct,
    star_floor,
)
from ..utils.generators import (
    SHAPES,
    random_elliptic,
    random_function,
    random_rational,
    random_symbol,
    random_word,
)
from .common import PropertySuite, integers

logger = logging.getLogger(__name__)

MODULI = (8, 24)


def random_exact(rng: np.random.Generator) -> ExactScalar:
    """Cyclotomic coefficient times a π^{a/2}Γ(1/4)^b monomial, summed twice"""
    total = ExactScalar.zero()
    for _ in range(2):
        modulus = MODULI[integers(rng, 0, len(MODULI) - 1)]
        coeffs = [random_rational(rng) for _ in range(euler_phi(modulus))]
        total = total + ExactScalar.from_cyclotomic(
            CyclotomicNumber(modulus, coeffs), integers(rng, -2, 2), integers(rng, -1, 1))
    return total


class SymbolsSuite(PropertySuite):
    name = "symbols"

    SHAPES = {
        "associativity": SHAPES,
        "leibniz": SHAPES,
        "leading": SHAPES,
        "completeness": SHAPES[:2],
        "parametrix": SHAPES,
        "dilation": SHAPES,
        "documents": SHAPES,
    }

    def __init__(self, config):
        super().__init__(config)
        self.depth = min(config.get("floor_depth", 6), 3)
        self.digits = config.get("digits", 30)

    # scalars

    def check_field_axioms(self, rng, shape, index):
        a, b, c = random_exact(rng), random_exact(rng), random_exact(rng)
        return self.all_of(
            self.compare((a * b) * c, a * (b * c), "associativity"),
            self.compare(a * (b + c), a * b + a * c, "distributivity"),
        )

    def check_numeric_hom(self, rng, shape, index):
        a, b = random_exact(rng), random_exact(rng)
        digits = self.digits
        with mpmath.workdps(digits + 10):
            lhs = mpmath.mpc((a * b if index % 2 else a + b).numeric(digits))
            na, nb = mpmath.mpc(a.numeric(digits)), mpmath.mpc(b.numeric(digits))
            rhs = na * nb if index % 2 else na + nb
            scale = max(abs(rhs), mpmath.mpf(1))
            close = abs(lhs - rhs) <= scale * mpmath.mpf(10) ** (2 - digits)
        return self.compare(close, True, "numeric evaluation is a ring map")

    def check_parseval(self, rng, shape, index):
        dim = integers(rng, 1, 3)
        f, g = random_function(rng, dim, terms=3), random_function(rng, dim, terms=3)
        expected = ExactScalar.zero()
        for k, c in f.items():
            expected = expected + c * g.coeff(k).conjugate()
        return self.compare((f * g.conjugate()).torus_integral(), expected, "Parseval")

    # Clifford words

    def check_clifford(self, rng, shape, index):
        n = 1 + index % 3
        fiber = FoliationShape(n, 0)
        u, w = random_word(rng, fiber), random_word(rng, fiber)
        expected = fiber_matrix(u, n) @ fiber_matrix(w, n)
        actual = np.zeros_like(expected)
        for word, c in clifford_mul(u, w).items():
            actual = actual + c * fiber_matrix(word, n)
        return self.compare(bool(np.array_equal(actual, expected)), True,
                            f"{u.render()}·{w.render()} on Λ(C^{n})")

    # star product

    def _symbol(self, rng, shape, top=0):
        return random_symbol(rng, shape, top, self.depth, components=3)

    def check_associativity(self, rng, shape, index):
        a, b, c = (self._symbol(rng, shape) for _ in range(3))
        return self.compare(star(star(a, b), c), star(a, star(b, c)), "(a*b)*c = a*(b*c)")

    def check_leibniz(self, rng, shape, index):
        a, b, c = (self._symbol(rng, shape) for _ in range(3))
        lhs = commutator(a, star(b, c))
        rhs = star(commutator(a, b), c) + star(b, commutator(a, c))
        return self.compare(lhs, rhs, "[a, b*c] = [a, b]*c + b*[a, c]")

    def check_leading(self, rng, shape, index):
        a = self._symbol(rng, shape, integers(rng, 0, 2))
        b = self._symbol(rng, shape, integers(rng, -1, 1))
        return self.compare(leading(star(a, b)), pointwise(leading(a), leading(b)),
                            "leading(a*b) = leading(a)·leading(b)")

    def check_completeness(self, rng, shape, index):
        a, b = self._symbol(rng, shape), self._symbol(rng, shape)
        cutoff = a.top + b.top - star_floor(a, b) + 1
        return self.compare(star(a, b), star_direct(a, b, cutoff),
                            f"star against direct expansion to |alpha| <= {cutoff}")

    def check_parametrix(self, rng, shape, index):
        a = random_elliptic(rng, shape, top=integers(rng, 1, 2), depth=4)
        floor = -2
        b = parametrix(a, floor)
        one = HSymbol.constant(shape, 1, floor=floor)
        return self.all_of(
            self.compare(star(a, b).truncate(floor), one, "a*b = 1"),
            self.compare(star(b, a).truncate(floor), one, "b*a = 1"),
        )

    def check_dilation(self, rng, shape, index):
        a = self._symbol(rng, shape, integers(rng, -1, 1))
        t = Fraction(integers(rng, 1, 4), integers(rng, 1, 3))
        b = self._symbol(rng, shape, integers(rng, -1, 1))
        return self.compare(dilate(pointwise(a, b), t), pointwise(dilate(a, t), dilate(b, t)),
                            f"dilation by {t} is multiplicative")

    # interchange format

    def check_documents(self, rng, shape, index):
        a = random_symbol(rng, shape, integers(rng, -1, 1), self.depth, components=3,
                          word=bool(index % 2))
        text = serialize_symbol(a)
        return self.all_of(
            self.compare(canonicalize(text) == text, True, "serialize(parse(d)) = d"),
            self.compare(parse_symbol(text), a, "parse(serialize(a)) = a"),
        )
