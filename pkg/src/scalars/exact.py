"""Exact scalars in ℚ(ζ_N)[π^{±1/2}, Γ(1/4)^{±1}].

A scalar is a finite sum of terms c·(π^{1/2})^a·Γ(1/4)^b with c cyclotomic;
π and Γ(1/4) are treated as independent transcendental atoms.
"""
from __future__ import annotations

import logging
from fractions import Fraction
from math import factorial
from typing import Dict, Iterator, Mapping, Tuple, Union

import mpmath

from ..errors import InvNotSupported
from .cyclotomic import DEFAULT_MODULUS, CyclotomicNumber, Rational

logger = logging.getLogger(__name__)

Monomial = Tuple[int, int]
Coercible = Union["ExactScalar", CyclotomicNumber, int, Fraction]


class ExactScalar:
    """Normal form: one cyclotomic coefficient per (piHalfExp, gammaQuarterExp)"""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, CyclotomicNumber] = None) -> None:
        clean: Dict[Monomial, CyclotomicNumber] = {}
        for key, coeff in (terms or {}).items():
            if not coeff.is_zero():
                clean[(int(key[0]), int(key[1]))] = coeff
        self._terms = clean

    # constructors

    @classmethod
    def zero(cls) -> ExactScalar:
        return cls()

    @classmethod
    def one(cls) -> ExactScalar:
        return cls.from_rational(1)

    @classmethod
    def from_rational(cls, value: Rational, modulus: int = DEFAULT_MODULUS) -> ExactScalar:
        return cls({(0, 0): CyclotomicNumber.from_rational(value, modulus)})

    @classmethod
    def from_cyclotomic(cls, value: CyclotomicNumber, pi_half: int = 0,
                        gamma_quarter: int = 0) -> ExactScalar:
        return cls({(pi_half, gamma_quarter): value})

    @classmethod
    def zeta(cls, modulus: int, power: int = 1) -> ExactScalar:
        return cls.from_cyclotomic(CyclotomicNumber.zeta(modulus, power))

    @classmethod
    def i(cls) -> ExactScalar:
        return cls.zeta(DEFAULT_MODULUS, 2)

    @classmethod
    def sqrt2(cls) -> ExactScalar:
        return cls.from_cyclotomic(CyclotomicNumber.sqrt2())

    @classmethod
    def pi(cls, power: int = 1) -> ExactScalar:
        """π^power"""
        return cls.from_cyclotomic(CyclotomicNumber.from_rational(1), pi_half=2 * power)

    @classmethod
    def pi_half_power(cls, power: int = 1) -> ExactScalar:
        """(π^{1/2})^power"""
        return cls.from_cyclotomic(CyclotomicNumber.from_rational(1), pi_half=power)

    @classmethod
    def gamma_one_quarter(cls, power: int = 1) -> ExactScalar:
        return cls.from_cyclotomic(CyclotomicNumber.from_rational(1), gamma_quarter=power)

    @classmethod
    def gamma_quarter(cls, k: int) -> ExactScalar:
        """Γ(k/4) for an integer k ≥ 1, reduced to the (π^{1/2}, Γ(1/4)) basis"""
        if k < 1:
            raise ValueError(f"Γ(k/4) is only reduced for k >= 1, got k={k}")
        m, r = divmod(k, 4)
        if r == 0:
            return cls.from_rational(factorial(m - 1))
        if r == 2:
            # Γ(m + 1/2) = (2m)! / (4^m m!) · π^{1/2}
            ratio = Fraction(factorial(2 * m), 4 ** m * factorial(m))
            return cls.from_rational(ratio) * cls.pi_half_power(1)
        shift = Fraction(r, 4)
        ratio = Fraction(1)
        for j in range(m):
            ratio *= j + shift
        if r == 1:
            return cls.from_rational(ratio) * cls.gamma_one_quarter(1)
        # Γ(3/4) = √2·π / Γ(1/4)
        return (cls.from_rational(ratio) * cls.sqrt2() * cls.pi(1)
                * cls.gamma_one_quarter(-1))

    @classmethod
    def coerce(cls, value: Coercible) -> ExactScalar:
        if isinstance(value, ExactScalar):
            return value
        if isinstance(value, CyclotomicNumber):
            return cls.from_cyclotomic(value)
        if isinstance(value, (int, Fraction)):
            return cls.from_rational(value)
        raise TypeError(f"cannot convert {type(value).__name__} to ExactScalar")

    # structure

    @property
    def terms(self) -> Dict[Monomial, CyclotomicNumber]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Monomial, CyclotomicNumber]]:
        return iter(sorted(self._terms.items()))

    @property
    def modulus(self) -> int:
        modulus = DEFAULT_MODULUS
        for coeff in self._terms.values():
            modulus = max(modulus, coeff.modulus)
        return modulus

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_rational(self) -> bool:
        if self.is_zero():
            return True
        return set(self._terms) == {(0, 0)} and self._terms[(0, 0)].is_rational()

    def rational_value(self) -> Fraction:
        if self.is_zero():
            return Fraction(0)
        if not self.is_rational():
            raise ValueError(f"{self.render()} is not rational")
        return self._terms[(0, 0)].rational_value()

    def normalized(self) -> ExactScalar:
        return ExactScalar(self._terms)

    # arithmetic

    def __eq__(self, other: object) -> bool:
        try:
            other = ExactScalar.coerce(other)  # type: ignore[arg-type]
        except TypeError:
            return False
        return (self - other).is_zero()

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: Coercible) -> ExactScalar:
        other = ExactScalar.coerce(other)
        terms = dict(self._terms)
        for key, coeff in other._terms.items():
            terms[key] = terms[key] + coeff if key in terms else coeff
        return ExactScalar(terms)

    __radd__ = __add__

    def __neg__(self) -> ExactScalar:
        return ExactScalar({key: -coeff for key, coeff in self._terms.items()})

    def __sub__(self, other: Coercible) -> ExactScalar:
        return self + (-ExactScalar.coerce(other))

    def __rsub__(self, other: Coercible) -> ExactScalar:
        return ExactScalar.coerce(other) - self

    def __mul__(self, other: Coercible) -> ExactScalar:
        other = ExactScalar.coerce(other)
        terms: Dict[Monomial, CyclotomicNumber] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                key = (a1 + a2, b1 + b2)
                product = c1 * c2
                terms[key] = terms[key] + product if key in terms else product
        return ExactScalar(terms)

    __rmul__ = __mul__

    def inverse(self) -> ExactScalar:
        if len(self._terms) != 1:
            raise InvNotSupported(
                f"only single-term scalars are invertible, got {len(self._terms)} terms")
        ((a, b), coeff), = self._terms.items()
        return ExactScalar({(-a, -b): coeff.inverse()})

    def __truediv__(self, other: Coercible) -> ExactScalar:
        return self * ExactScalar.coerce(other).inverse()

    def __rtruediv__(self, other: Coercible) -> ExactScalar:
        return ExactScalar.coerce(other) * self.inverse()

    def __pow__(self, exponent: int) -> ExactScalar:
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = ExactScalar.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def conjugate(self) -> ExactScalar:
        return ExactScalar({key: coeff.conjugate() for key, coeff in self._terms.items()})

    # output

    def numeric(self, digits: int = 30) -> mpmath.mpc:
        return numeric_eval(self, digits)

    def render(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (a, b), coeff in self.items():
            text = f"({coeff.render()})"
            if a:
                text += f"·pi^({a}/2)"
            if b:
                text += f"·Gamma(1/4)^({b})"
            parts.append(text)
        return " + ".join(parts)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"ExactScalar({self.render()!r})"


def scalar_arith(a: Coercible, b: Coercible, op: str) -> ExactScalar:
    """Dispatch for the add | mul | inv scalar operations"""
    a = ExactScalar.coerce(a)
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "inv":
        return a.inverse()
    raise ValueError(f"unknown scalar operation: {op}")


def numeric_eval(a: Coercible, digits: int = 30):
    """High-precision value of an exact scalar; real results come back as mpf"""
    if digits < 15:
        raise ValueError("numeric evaluation needs at least 15 digits")
    a = ExactScalar.coerce(a)
    with mpmath.workdps(digits + 10):
        sqrt_pi = mpmath.sqrt(mpmath.pi)
        gamma14 = mpmath.gamma(mpmath.mpf(1) / 4)
        total = mpmath.mpc(0)
        for (pi_half, gamma_q), coeff in a.items():
            total += coeff.to_mpc() * sqrt_pi ** pi_half * gamma14 ** gamma_q
        scale = max(abs(total), mpmath.mpf(1))
        if abs(total.imag) <= scale * mpmath.mpf(10) ** (-(digits + 5)):
            result = +total.real
        else:
            result = +total
    logger.debug("numeric_eval(%s) at %d digits", a.render(), digits)
    with mpmath.workdps(digits):
        return +result
