import math
from fractions import Fraction

import pytest

from src.errors import InvNotSupported
from src.scalars.cyclotomic import CyclotomicNumber, euler_phi
from src.scalars.exact import ExactScalar, numeric_eval, scalar_arith
from src.scalars.fourier import FourierFunction, torus_integral
from src.scalars.series import EpsSeries, bernoulli_numbers, todd_log_coefficients


def test_roots_of_unity():
    i = ExactScalar.i()
    assert i * i == -1
    assert ExactScalar.zeta(8) ** 8 == 1
    assert ExactScalar.sqrt2() ** 2 == 2
    assert euler_phi(8) == 4
    assert euler_phi(24) == 8


def test_gamma_quarter_reduction():
    assert ExactScalar.gamma_quarter(4) == 1
    assert ExactScalar.gamma_quarter(2) == ExactScalar.pi_half_power(1)
    assert ExactScalar.gamma_quarter(5) == ExactScalar.gamma_one_quarter(1) * Fraction(1, 4)
    # reflection Γ(1/4)Γ(3/4) = √2·π
    product = ExactScalar.gamma_quarter(1) * ExactScalar.gamma_quarter(3)
    assert product == ExactScalar.sqrt2() * ExactScalar.pi(1)

    with pytest.raises(ValueError):
        ExactScalar.gamma_quarter(0)


def test_field_operations():
    a = ExactScalar.from_rational(Fraction(3, 2)) * ExactScalar.pi(1)
    assert a / a == 1
    assert a.inverse() * a == 1
    assert scalar_arith(a, a, "add") == a * 2
    assert scalar_arith(2, 0, "inv") == Fraction(1, 2)
    with pytest.raises(ValueError):
        scalar_arith(a, a, "pow")


def test_sum_inverse_not_supported():
    with pytest.raises(InvNotSupported):
        (ExactScalar.one() + ExactScalar.pi(1)).inverse()


def test_conjugate():
    i = ExactScalar.i()
    assert i.conjugate() == -i
    assert ExactScalar.pi(-1).conjugate() == ExactScalar.pi(-1)


def test_render_normal_form():
    assert ExactScalar.pi(-1).render() == "(1/1)·pi^(-2/2)"
    assert ExactScalar.zero().render() == "0"
    assert ExactScalar.from_rational(Fraction(-1, 2)).render() == "(-1/2)"


def test_numeric_evaluation():
    assert complex(ExactScalar.pi(1).numeric(30)).real == pytest.approx(math.pi, rel=1e-15)
    gamma = complex(ExactScalar.gamma_one_quarter(1).numeric(30)).real
    assert gamma == pytest.approx(math.gamma(0.25), rel=1e-14)
    assert complex(ExactScalar.i().numeric(20)) == pytest.approx(1j)
    with pytest.raises(ValueError):
        numeric_eval(ExactScalar.one(), 10)


def test_rational_value():
    assert ExactScalar.from_rational(Fraction(5, 7)).rational_value() == Fraction(5, 7)
    assert ExactScalar.zero().rational_value() == 0
    with pytest.raises(ValueError):
        ExactScalar.pi(1).rational_value()


def test_cyclotomic_coefficients():
    c = CyclotomicNumber(8, [1, 0, 0, 0])
    assert ExactScalar.from_cyclotomic(c) == 1
    assert CyclotomicNumber.zeta(8, 4).is_rational()


def test_fourier_parseval():
    f = FourierFunction(1, {(1,): 2, (0,): 1})
    g = FourierFunction(1, {(1,): 3, (-1,): 1})
    # ∫ f·ḡ = Σ_k f_k·conj(g_k)
    assert torus_integral(f * g.conjugate()) == 6


def test_fourier_derivative():
    f = FourierFunction.character((2,))
    expected = f.scale(ExactScalar.i() * ExactScalar.pi(1) * 4)
    assert f.deriv(0) == expected
    assert FourierFunction.constant(1, 5).deriv(0).is_zero()


def test_eps_series_arithmetic():
    one, eps = EpsSeries.one(3), EpsSeries.eps(3)
    assert (one + eps) * (one - eps) == EpsSeries([1, 0, -1], 3)
    assert eps ** 4 == EpsSeries.zero(3)
    with pytest.raises(IndexError):
        eps[4]


def test_eps_series_exp_log():
    s = EpsSeries([0, 1, Fraction(1, 3)], 5)
    assert s.exp().log() == s
    assert EpsSeries.eps(3).exp() == EpsSeries([1, 1, Fraction(1, 2), Fraction(1, 6)], 3)
    with pytest.raises(ValueError):
        EpsSeries.one(3).exp()


def test_bernoulli_and_todd_coefficients():
    assert bernoulli_numbers(5) == (1, Fraction(-1, 2), Fraction(1, 6), 0, Fraction(-1, 30))
    coeffs = todd_log_coefficients(4)
    assert coeffs[:5] == (0, Fraction(-1, 2), Fraction(1, 24), 0, Fraction(-1, 2880))
