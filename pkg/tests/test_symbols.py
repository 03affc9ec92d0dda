from fractions import Fraction

import pytest

from src.errors import BadIndex, NotClassical, TruncationTooShallow, UnsupportedLeading
from src.scalars.exact import ExactScalar
from src.scalars.fourier import FourierFunction
from src.symbols.builders import (
    builders,
    character,
    chi_plus,
    constant,
    log_rho_quarter,
    momentum,
    q1,
    rho,
    rho_power,
)
from src.symbols.clifford import (
    CliffordWord,
    clifford_mul,
    clifford_traces,
    normalized_trace,
    right_contraction,
)
from src.symbols.elliptic import is_heisenberg_elliptic, parametrix
from src.symbols.logcomm import log_commutator
from src.symbols.shape import FoliationShape
from src.symbols.symbol import (
    HSymbol,
    commutator,
    dilate,
    leading,
    power,
    star,
    star_direct,
    star_floor,
)
from src.utils.generators import random_symbol


def test_shape_parse(plane):
    assert FoliationShape.parse("1,1") == plane
    assert plane.n == 2
    assert plane.Q == 3
    assert plane.weights == (1, 2)


def test_star_unit(line, rng):
    a = random_symbol(rng, line, 0, 3)
    one = constant(line, 1, floor=-3)
    assert star(a, one) == a
    assert star(one, a) == a


def test_momentum_character_commutator(line):
    p = momentum(line, 1)
    e = character(line, (1,))
    expected = character(line, (1,), ExactScalar.pi(1) * 2)
    assert star(p, e) - star(e, p) == expected
    assert commutator(p, e) == expected


def test_canonical_basis_on_line(line):
    # p^2 = ρ^{1/2} when v = 1, h = 0
    p = momentum(line, 1)
    assert star(p, p) == rho_power(line, 2)
    assert power(q1(line), 4) == rho(line)


def test_star_associativity(plane, rng):
    a, b, c = (random_symbol(rng, plane, 0, 3, components=2) for _ in range(3))
    assert star(star(a, b), c) == star(a, star(b, c))


def test_star_matches_direct_expansion(line, rng):
    a, b = random_symbol(rng, line, 1, 3), random_symbol(rng, line, 0, 3)
    cutoff = a.top + b.top - star_floor(a, b) + 1
    assert star(a, b) == star_direct(a, b, cutoff)


def test_clifford_anticommutator():
    psi = CliffordWord((0,), ())
    psibar = CliffordWord((), (0,))
    number = CliffordWord((0,), (0,))
    assert clifford_mul(psibar, psi) == {CliffordWord(): 1, number: -1}
    assert clifford_mul(psi, psi) == {}
    assert clifford_mul(number, number) == {number: 1}


def test_clifford_word_order():
    with pytest.raises(ValueError):
        CliffordWord((1, 0), ())
    assert CliffordWord.top(2).render() == "psi^1psi^2psibar_1psibar_2"


def test_clifford_traces():
    tr, graded = clifford_traces(CliffordWord(), 2)
    assert tr == 4
    assert graded == 0
    assert normalized_trace(CliffordWord(), 3) == 1
    for n in (1, 2, 3):
        assert right_contraction(CliffordWord.top(n), n) == 1
    with pytest.raises(ValueError):
        clifford_traces(CliffordWord((2,), ()), 2)


def test_builders(line, plane):
    assert builders("subLaplacian", plane) == rho(plane)
    half = Fraction(1, 2)
    expected = (constant(line, half)
                + HSymbol.monomial(line, (1,), -1, coeff=half, top=0, floor=-6))
    assert chi_plus(line, 1) == expected
    with pytest.raises(BadIndex):
        chi_plus(line, 2)
    with pytest.raises(BadIndex):
        builders("chiPlus", line)
    with pytest.raises(ValueError):
        builders("sphere", line)


def test_leading_and_dilation(line):
    a = rho(line, floor=-2) + q1(line)
    assert leading(a) == HSymbol.monomial(line, rho_quarter=4)
    assert dilate(rho(line), Fraction(2)) == rho(line).scale(16)
    with pytest.raises(ValueError):
        dilate(rho(line), Fraction(0))


def test_heisenberg_ellipticity(line, plane):
    assert is_heisenberg_elliptic(rho(plane))
    assert is_heisenberg_elliptic(momentum(line, 1))
    # p_1 vanishes on part of the cosphere once n ≥ 2
    assert not is_heisenberg_elliptic(momentum(plane, 1))
    assert not is_heisenberg_elliptic(HSymbol.zero(line))


def test_parametrix_of_heisenberg_norm(line):
    b = parametrix(q1(line), -4)
    assert b == rho_power(line, -1, floor=-5)
    assert star(q1(line), b) == constant(line, 1, floor=-4)


def test_parametrix_errors(line):
    with pytest.raises(TruncationTooShallow):
        parametrix(q1(line, floor=-1), -4)
    mixed = FourierFunction(1, {(0,): 1, (1,): 1})
    with pytest.raises(UnsupportedLeading):
        parametrix(HSymbol.constant(line, mixed, floor=-4), -2)


def test_log_commutator(line):
    assert log_commutator(constant(line, 1)).is_zero()
    assert log_commutator(character(line, (1,))).is_classical()
    with pytest.raises(NotClassical):
        log_commutator(log_rho_quarter(line, -2))
