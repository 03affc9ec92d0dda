from fractions import Fraction

import pytest

from src.crossed.crossed import CrossedSymbol, crossed_commutator, crossed_star, localized_residue
from src.crossed.isometry import IsometryElement, generate_group
from src.crossed.pairing import (
    determine_kappa,
    fundamental_pairing_1d,
    toeplitz_index_oracle_1d,
    winding_pair,
    winding_symbol,
)
from src.crossed.radul import (
    hochschild_coboundary,
    leading_lift,
    lifted_radul,
    radul_cocycle,
    radul_pair,
)
from src.errors import (
    GroupMismatch,
    ModulusMismatch,
    NonInvertibleSymbol,
    NonIsometricAction,
    NotDegreeZero,
    WrongShape,
)
from src.residue.wres import wres
from src.scalars.exact import ExactScalar
from src.scalars.fourier import FourierFunction
from src.symbols.builders import character, constant, momentum, rho, rho_power
from src.symbols.logcomm import log_commutator
from src.symbols.symbol import HSymbol, star
from src.utils.generators import group_samples, random_crossed, random_order_zero, random_symbol


@pytest.fixture
def half(line):
    return IsometryElement.create(line, trans=[Fraction(1, 2)])


@pytest.fixture
def flip(line):
    return IsometryElement.create(line, matrix=[[-1]])


def test_identity_action(plane, rng):
    a = random_symbol(rng, plane, 0, 3)
    identity = IsometryElement.identity(plane)
    assert identity.is_identity()
    assert identity.act_on_symbol(a) == a


def test_translation_and_reflection(line, half, flip):
    e = character(line, (1,))
    assert half.act_on_symbol(e) == character(line, (1,), -1)
    assert flip.act_on_symbol(e) == character(line, (-1,))
    assert flip.act_on_symbol(momentum(line, 1)) == -momentum(line, 1)
    assert flip.act_on_symbol(rho(line)) == rho(line)
    assert half.act_on_point([Fraction(3, 4)]) == (Fraction(1, 4),)


def test_group_law(line, half, flip, rng):
    a = random_symbol(rng, line, 0, 3)
    assert (half * flip).act_on_symbol(a) == half.act_on_symbol(flip.act_on_symbol(a))
    assert (flip * flip.inverse()).is_identity()
    assert (half * half).is_identity()


def test_generate_group(line):
    samples = group_samples(line)
    assert len(samples["translation"]) == 2
    assert len(samples["reflection"]) == 2
    assert len(samples["both"]) == 8
    assert samples["both"][0].is_identity()
    with pytest.raises(GroupMismatch):
        generate_group([])


def test_invalid_elements(line, plane):
    with pytest.raises(NonIsometricAction):
        IsometryElement.create(plane, matrix=[[0, 1], [1, 0]])
    with pytest.raises(NonIsometricAction):
        IsometryElement.create(line, matrix=[[2]])
    with pytest.raises(ModulusMismatch):
        IsometryElement.create(line, trans=[Fraction(1, 3)], modulus=8)
    with pytest.raises(GroupMismatch):
        IsometryElement.identity(line, 8) * IsometryElement.identity(line, 24)


def test_crossed_star_multiplies_group_elements(line, half, flip):
    one = constant(line, 1)
    product = crossed_star(CrossedSymbol.at(half, one), CrossedSymbol.at(flip, one))
    assert product == CrossedSymbol.at(half * flip, one)


def test_crossed_star_twists_the_right_factor(line, half):
    e = character(line, (1,))
    one = constant(line, 1)
    product = crossed_star(CrossedSymbol.at(half, one), CrossedSymbol.untwisted(e))
    assert product[half] == character(line, (1,), -1)


def test_localized_residue(line, half):
    a = rho_power(line, -1, floor=-3)
    assert localized_residue(CrossedSymbol.untwisted(a)) == ExactScalar.pi(-1)
    assert localized_residue(CrossedSymbol.at(half, a)) == 0


def test_localized_residue_is_a_trace(line, rng):
    elements = group_samples(line)["both"]
    A = random_crossed(rng, line, elements)
    B = random_crossed(rng, line, elements)
    assert localized_residue(crossed_commutator(A, B)) == 0


def test_radul_pair_vanishes_off_inverse_pairs(line, half, rng):
    a, b = random_symbol(rng, line, 0, 3), random_symbol(rng, line, 0, 3)
    identity = IsometryElement.identity(line)
    assert radul_pair(half, a, identity, b) == 0
    # half is its own inverse, so this pair contributes
    expected = wres(star(a, half.act_on_symbol(log_commutator(b))))
    assert radul_pair(half, a, half, b) == expected
    assert radul_cocycle(CrossedSymbol.at(half, a), CrossedSymbol.at(half, b)) == expected


def test_radul_cocycle_properties(line, rng):
    elements = group_samples(line)["reflection"]
    A, B, C = (random_crossed(rng, line, elements) for _ in range(3))
    assert radul_cocycle(A, B) == -radul_cocycle(B, A)
    assert hochschild_coboundary(radul_cocycle, A, B, C) == 0


def test_kappa():
    assert determine_kappa() == -ExactScalar.i()


def test_lifted_radul_against_pairing(rng):
    a0, a1 = random_order_zero(rng), random_order_zero(rng)
    phi = lifted_radul(CrossedSymbol.untwisted(a0), CrossedSymbol.untwisted(a1))
    assert phi == -ExactScalar.i() * fundamental_pairing_1d(a0, a1)


def test_winding_pairing():
    assert fundamental_pairing_1d(*winding_pair(1)) == ExactScalar.i()
    assert fundamental_pairing_1d(*winding_pair(2)) == ExactScalar.i() * 2


def test_toeplitz_index():
    assert toeplitz_index_oracle_1d(winding_symbol(1)) == -1
    assert toeplitz_index_oracle_1d(winding_symbol(-2), cutoff=10) == 2
    assert toeplitz_index_oracle_1d(winding_symbol(0)) == 0


def test_pairing_errors(line, plane):
    with pytest.raises(WrongShape):
        fundamental_pairing_1d(constant(plane, 1), constant(plane, 1))
    with pytest.raises(NonInvertibleSymbol):
        toeplitz_index_oracle_1d(HSymbol.zero(line))
    with pytest.raises(NotDegreeZero):
        leading_lift(rho(line))


def shifted_character(line, k, c):
    """e(k) − c as a constant-in-p symbol"""
    return HSymbol.constant(line, FourierFunction(1, {(k,): 1, (0,): -c}))


@pytest.mark.parametrize("k,expected", [(-1, 1), (1, -1)])
@pytest.mark.parametrize("c", [Fraction(1, 2), Fraction(9, 10)])
def test_toeplitz_index_of_perturbed_characters(line, k, expected, c):
    a1 = shifted_character(line, k, c)
    indices = [toeplitz_index_oracle_1d(a1, cutoff) for cutoff in (10, 40, 80)]
    assert indices == [expected] * 3


def test_toeplitz_index_without_dominant_character(line):
    # z + 5/6 + z^{-1}/6 = z^{-1}(z + 1/2)(z + 1/3): winding 1
    inside = HSymbol.constant(line, FourierFunction(
        1, {(1,): 1, (0,): Fraction(5, 6), (-1,): Fraction(1, 6)}))
    # z + 7/3 + 2z^{-1}/3 = z^{-1}(z + 2)(z + 1/3): winding 0
    balanced = HSymbol.constant(line, FourierFunction(
        1, {(1,): 1, (0,): Fraction(7, 3), (-1,): Fraction(2, 3)}))
    for cutoff in (10, 40):
        assert toeplitz_index_oracle_1d(inside, cutoff) == -1
        assert toeplitz_index_oracle_1d(balanced, cutoff) == 0


@pytest.mark.integration
def test_toeplitz_index_near_the_circle(line):
    a1 = shifted_character(line, -1, Fraction(99, 100))
    assert toeplitz_index_oracle_1d(a1, 10) == 1
    assert toeplitz_index_oracle_1d(a1, 80) == 1
