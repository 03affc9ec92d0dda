import math

import pytest

from src.errors import (
    CubatureNoConvergence,
    DimensionMismatch,
    LogResidueUnsupported,
    TruncationTooShallow,
)
from src.residue.oracle import annulus_oracle, gaussian_factor_oracle
from src.residue.sphere import gaussian_moment, moment_record, sphere_moment
from src.residue.wres import wres
from src.scalars.exact import ExactScalar
from src.suites.residue import even_moments
from src.symbols.builders import character, constant, rho_power
from src.symbols.clifford import CliffordWord
from src.symbols.shape import FoliationShape
from src.symbols.symbol import HSymbol, commutator
from src.utils.generators import random_symbol


def test_residue_of_inverse_norm(line):
    assert wres(rho_power(line, -1, floor=-3)) == ExactScalar.pi(-1)


def test_residue_uses_normalized_fiber_trace(line):
    a = HSymbol.monomial(line, rho_quarter=-1, word=CliffordWord.top(1))
    assert wres(a) == ExactScalar.pi(-1) / 2
    odd = HSymbol.monomial(line, rho_quarter=-1, word=CliffordWord((0,), ()))
    assert wres(odd) == 0


def test_residue_ignores_oscillating_and_odd_terms(line, plane):
    e = character(line, (1,), floor=-3)
    assert wres(e) == 0
    # p_1 ρ^{−4/4} on (1,1) has degree −Q but odd γ
    assert wres(HSymbol.monomial(plane, (1, 0), -4)) == 0


def test_residue_errors(line):
    with pytest.raises(TruncationTooShallow):
        wres(constant(line, 1, floor=0))
    with pytest.raises(LogResidueUnsupported):
        wres(HSymbol.monomial(line, rho_quarter=-1, log_pow=1, floor=-2))


def test_residue_vanishes_on_commutators(plane, rng):
    a = random_symbol(rng, plane, 0, plane.Q + 2, components=3)
    b = random_symbol(rng, plane, 0, plane.Q + 2, components=3)
    assert wres(commutator(a, b)) == 0


def test_sphere_moments(line, plane):
    assert sphere_moment((0,), line) == 2
    assert sphere_moment((1, 2), plane) == 0
    gamma = (2, 2)
    radial = ExactScalar.gamma_quarter(plane.weight(gamma) + plane.Q)
    assert gaussian_moment(gamma, plane) == sphere_moment(gamma, plane) * radial / 4
    record = moment_record([2, 0], plane)
    assert record.gamma == (2, 0)
    with pytest.raises(ValueError):
        sphere_moment((0,), plane)


def test_even_moments_cover_all_shapes():
    moments = even_moments()
    assert len(moments) == 36
    assert moments[0] == (FoliationShape(1, 0), (0,))
    assert all(g % 2 == 0 for _, gamma in moments for g in gamma)


def test_gaussian_factor_oracle():
    value, err = gaussian_factor_oracle(0, leaf=False)
    assert value == pytest.approx(math.sqrt(math.pi), rel=1e-12)
    assert err < 1e-10
    assert gaussian_factor_oracle(3, leaf=True) == (0.0, 0.0)
    exact = complex(gaussian_moment((4,), FoliationShape(1, 0)).numeric(30)).real
    assert gaussian_factor_oracle(4, leaf=True)[0] == pytest.approx(exact, rel=1e-10)


def test_annulus_oracle_on_line(line):
    assert annulus_oracle((0,), line) == pytest.approx(2.0, abs=1e-8)
    assert annulus_oracle((1,), line) == 0.0


def test_annulus_oracle_rejects_bad_input(line):
    with pytest.raises(ValueError):
        annulus_oracle((0,), line, tol=1e-12)
    with pytest.raises(DimensionMismatch):
        annulus_oracle((0, 0), line)
    with pytest.raises(DimensionMismatch):
        annulus_oracle((0,) * 4, FoliationShape(2, 2))


def test_annulus_oracle_reports_divergence(mocker, line):
    mocker.patch("src.residue.oracle.integrate.quad", return_value=(1.0, 1.0))
    with pytest.raises(CubatureNoConvergence):
        annulus_oracle((0,), line)


@pytest.mark.integration
@pytest.mark.parametrize("gamma", [(0, 0), (2, 0), (0, 2)])
def test_annulus_oracle_matches_exact_moment(plane, gamma):
    exact = complex(sphere_moment(gamma, plane).numeric(30)).real
    assert annulus_oracle(gamma, plane, 1e-9) == pytest.approx(exact, abs=1e-6)
