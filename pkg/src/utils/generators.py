"""Seeded random inputs for the verification suites.

Every generator takes a numpy Generator; a case is reproducible from its
(seed, check, index) triple through case_seed.
"""
import zlib
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

import numpy as np

from ..crossed.crossed import CrossedSymbol
from ..crossed.isometry import IsometryElement, generate_group
from ..opalg.dirac import DiracDescriptor
from ..opalg.series import OpSeries, left_function, left_momentum
from ..scalars.exact import ExactScalar
from ..scalars.fourier import FourierFunction
from ..symbols.clifford import CliffordWord
from ..symbols.shape import FoliationShape
from ..symbols.symbol import HSymbol

SHAPES = (FoliationShape(1, 0), FoliationShape(1, 1), FoliationShape(2, 1))
LINE = SHAPES[0]


def case_seed(seed: int, check: str, index: int) -> int:
    sequence = np.random.SeedSequence([seed, zlib.crc32(check.encode("utf-8")), index])
    return int(sequence.generate_state(1)[0])


def make_rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)


def pick(rng: np.random.Generator, values: Sequence):
    return values[int(rng.integers(len(values)))]


def random_rational(rng: np.random.Generator, bound: int = 3, nonzero: bool = False) -> Fraction:
    while True:
        value = Fraction(int(rng.integers(-bound, bound + 1)), int(rng.integers(1, 4)))
        if value or not nonzero:
            return value


def random_scalar(rng: np.random.Generator, bound: int = 3, complex_part: bool = True
                  ) -> ExactScalar:
    value = ExactScalar.from_rational(random_rational(rng, bound))
    if complex_part and rng.random() < 0.5:
        value = value + ExactScalar.i() * random_rational(rng, bound)
    return value


def random_function(rng: np.random.Generator, dim: int, max_freq: int = 1, terms: int = 2,
                    constant: bool = False) -> FourierFunction:
    coeffs: Dict[tuple, ExactScalar] = {}
    for _ in range(terms):
        if constant:
            k = (0,) * dim
        else:
            k = tuple(int(x) for x in rng.integers(-max_freq, max_freq + 1, size=dim))
        coeffs[k] = random_scalar(rng)
    return FourierFunction(dim, coeffs)


def random_gamma(rng: np.random.Generator, shape: FoliationShape, max_exp: int = 2) -> tuple:
    return tuple(int(x) for x in rng.integers(0, max_exp + 1, size=shape.n))


def random_symbol(rng: np.random.Generator, shape: FoliationShape, top: int = 0,
                  depth: int = 4, components: int = 3, max_freq: int = 1,
                  word: bool = False) -> HSymbol:
    """Classical symbol with terms of degree top..top−depth, trusted down to top−depth"""
    floor = top - depth
    total = HSymbol.zero(shape, top, floor)
    for index in range(components):
        degree = top if index == 0 else int(rng.integers(floor, top + 1))
        gamma = random_gamma(rng, shape)
        rho_quarter = degree - shape.weight(gamma)
        clifford = random_word(rng, shape) if word else None
        coeff = random_function(rng, shape.n, max_freq)
        total = total + HSymbol.monomial(shape, gamma, rho_quarter, coeff, clifford,
                                         top=top, floor=floor)
    return total


def random_word(rng: np.random.Generator, shape: FoliationShape) -> CliffordWord:
    psi = tuple(i for i in range(shape.n) if rng.random() < 0.5)
    psibar = tuple(i for i in range(shape.n) if rng.random() < 0.5)
    return CliffordWord(psi, psibar)


def random_elliptic(rng: np.random.Generator, shape: FoliationShape, top: int = 2,
                    depth: int = 4) -> HSymbol:
    """Leading part c·e^{2πik·x}·ρ^{top/4} plus random lower-order terms"""
    k = tuple(int(x) for x in rng.integers(-1, 2, size=shape.n))
    c = ExactScalar.from_rational(random_rational(rng, nonzero=True))
    lead = HSymbol.monomial(shape, rho_quarter=top, coeff=FourierFunction.character(k, c),
                            top=top, floor=top - depth)
    lower = random_symbol(rng, shape, top - 1, depth - 1, components=2)
    return lead + lower.with_top(top).with_floor(top - depth)


def random_order_zero(rng: np.random.Generator) -> HSymbol:
    """Degree-0 homogeneous symbol f0(x) + f1(x)·p·ρ^{−1/4} on the line"""
    f0 = random_function(rng, 1)
    f1 = random_function(rng, 1)
    return (HSymbol.monomial(LINE, coeff=f0, top=0, floor=0)
            + HSymbol.monomial(LINE, (1,), -1, f1, top=0, floor=0))


def random_matrix(rng: np.random.Generator, size: int, bound: int = 2) -> List[List[Fraction]]:
    return [[random_rational(rng, bound) for _ in range(size)] for _ in range(size)]


# groups


def group_samples(shape: FoliationShape) -> Dict[str, List[IsometryElement]]:
    """A rational translation, a reflection of the first leaf axis, and both"""
    n = shape.n
    half = IsometryElement.create(shape, trans=[Fraction(1, 2)] + [0] * (n - 1))
    quarter = IsometryElement.create(shape, trans=[Fraction(1, 4)] + [0] * (n - 1))
    flip = [[(-1 if i == 0 else 1) if i == j else 0 for i in range(n)] for j in range(n)]
    reflection = IsometryElement.create(shape, matrix=flip)
    return {
        "translation": generate_group([half]),
        "reflection": generate_group([reflection]),
        "both": generate_group([quarter, reflection]),
    }


def random_crossed(rng: np.random.Generator, shape: FoliationShape,
                   elements: Sequence[IsometryElement], components: int = 2,
                   depth: Optional[int] = None) -> CrossedSymbol:
    depth = shape.Q + 2 if depth is None else depth
    total = None
    for _ in range(components):
        g = pick(rng, list(elements))
        term = CrossedSymbol.at(g, random_symbol(rng, shape, 0, depth, components=2))
        total = term if total is None else total + term
    return total


# operators


def random_perturbation(rng: np.random.Generator, shape: FoliationShape,
                        terms: int = 2) -> OpSeries:
    """Random element of D^0_1 with a net power of ε after contraction"""
    out = OpSeries.zero(shape)
    for _ in range(terms):
        axis = int(rng.integers(shape.n))
        f = random_function(rng, shape.n, constant=rng.random() < 0.5)
        kind = int(rng.integers(3))
        if kind == 0:
            # ε·f(x)·p_i ∂_{p_j}; a transverse p_i needs a transverse ∂_{p_j}
            j = int(rng.integers(shape.n)) if shape.is_leaf(axis) else axis
            out = out + OpSeries.single(left_momentum(shape, axis, f), dp=shape.unit(j),
                                        eps=1)
        elif kind == 1:
            # ε·f(x)
            out = out + OpSeries.single(left_function(shape, f), eps=1)
        else:
            # ε³·f(x)·∂_{x_i}
            out = out + OpSeries.single(left_function(shape, f), dx=shape.unit(axis), eps=3)
    return out


def random_operator(rng: np.random.Generator, shape: FoliationShape, terms: int = 2,
                    words: bool = False) -> OpSeries:
    """Random operator from functions, momenta, derivatives and right words"""
    out = OpSeries.zero(shape)
    for _ in range(terms):
        axis = int(rng.integers(shape.n))
        f = random_function(rng, shape.n)
        word = random_word(rng, shape) if words else None
        kind = int(rng.integers(4))
        if kind == 0:
            out = out + OpSeries.single(left_function(shape, f), word)
        elif kind == 1:
            out = out + OpSeries.single(left_momentum(shape, axis, f), word, eps=1)
        elif kind == 2:
            out = out + OpSeries.single(left_function(shape, f), word, dp=shape.unit(axis))
        else:
            out = out + OpSeries.single(left_function(shape, f), word, dx=shape.unit(axis),
                                        eps=1)
    return out


def random_descriptor(rng: np.random.Generator, shape: FoliationShape,
                      kind: str = "deRham", constant: bool = False) -> DiracDescriptor:
    """Descriptor with trigonometric data respecting the foliation"""
    n = shape.n
    corrections = {}
    if rng.random() < 0.5:
        i = int(rng.integers(n))
        alpha = [0] * n
        if shape.is_leaf(i):
            alpha[int(rng.integers(shape.v))] = 2
        else:
            alpha[int(rng.integers(n))] += 1
            alpha[n - 1] += 1
        corrections[(i, tuple(alpha))] = random_function(rng, n)
    if kind == "deRham":
        return DiracDescriptor(shape, kind, corrections)

    zero = FourierFunction.zero(n)
    gamma = [[[zero for _ in range(n)] for _ in range(n)] for _ in range(n)]
    for k in range(n):
        for i in range(n):
            for j in range(i, n):
                if not shape.is_leaf(k) and (shape.is_leaf(i) or shape.is_leaf(j)):
                    continue
                if rng.random() < 0.4:
                    f = random_function(rng, n, terms=1, constant=constant)
                    gamma[k][i][j] = f
                    gamma[k][j][i] = f
    shift = [random_function(rng, n, terms=1) if rng.random() < 0.3 else zero
             for _ in range(n)]
    return DiracDescriptor(shape, kind, corrections, gamma, shift)
