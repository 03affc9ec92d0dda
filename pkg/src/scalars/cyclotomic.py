from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, List, Sequence, Tuple, Union

import mpmath

Rational = Union[int, Fraction]

DEFAULT_MODULUS = 8


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _poly_divmod(num: List[int], den: Sequence[int]) -> Tuple[List[int], List[int]]:
    """Exact division of integer polynomials (low degree first) by a monic divisor"""
    num = list(num)
    quot = [0] * max(len(num) - len(den) + 1, 1)
    for shift in range(len(num) - len(den), -1, -1):
        lead = num[shift + len(den) - 1]
        if lead:
            quot[shift] = lead
            for i, c in enumerate(den):
                num[shift + i] -= lead * c
    return quot, num[: len(den) - 1]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> Tuple[int, ...]:
    """Integer coefficients of Φ_n, lowest degree first"""
    if n < 1:
        raise ValueError(f"cyclotomic index must be positive, got {n}")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _poly_divmod(poly, cyclotomic_polynomial(d))
            if any(rem):
                raise ArithmeticError(f"Φ_{d} does not divide x^{n} - 1")
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    return tuple(poly)


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


@lru_cache(maxsize=None)
def power_table(n: int) -> Tuple[Tuple[Fraction, ...], ...]:
    """Coordinates of ζ_n^k, 0 <= k < n, in the power basis 1, ζ, …, ζ^{φ(n)-1}"""
    phi = euler_phi(n)
    cyc = cyclotomic_polynomial(n)
    rows = []
    current = [Fraction(0)] * phi
    current[0] = Fraction(1)
    for _ in range(n):
        rows.append(tuple(current))
        # multiply by ζ and fold ζ^phi = -Σ cyc[i] ζ^i
        carry = current[-1]
        shifted = [Fraction(0)] + current[:-1]
        if carry:
            for i in range(phi):
                shifted[i] -= carry * cyc[i]
        current = shifted
    return tuple(rows)


@lru_cache(maxsize=None)
def units_mod(n: int) -> Tuple[int, ...]:
    return tuple(k for k in range(1, n) if gcd(k, n) == 1) or (1,)


class CyclotomicNumber:
    """Element of ℚ(ζ_N) in the power basis of ζ_N, reduced modulo Φ_N.

    Elements with different moduli are combined in ℚ(ζ_lcm).
    """

    __slots__ = ("_modulus", "_coeffs")

    def __init__(self, modulus: int, coeffs: Iterable[Rational]) -> None:
        phi = euler_phi(modulus)
        values = [Fraction(c) for c in coeffs]
        if len(values) > phi:
            values = list(_reduce(modulus, values))
        values.extend([Fraction(0)] * (phi - len(values)))
        self._modulus = modulus
        self._coeffs: Tuple[Fraction, ...] = tuple(values)

    @property
    def modulus(self) -> int:
        return self._modulus

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        return self._coeffs

    @classmethod
    def from_rational(cls, value: Rational, modulus: int = DEFAULT_MODULUS) -> CyclotomicNumber:
        return cls(modulus, [Fraction(value)])

    @classmethod
    def zeta(cls, modulus: int, power: int = 1) -> CyclotomicNumber:
        return cls(modulus, power_table(modulus)[power % modulus])

    @classmethod
    def sqrt2(cls, modulus: int = DEFAULT_MODULUS) -> CyclotomicNumber:
        if modulus % 8:
            raise ValueError("√2 needs 8 | N")
        step = modulus // 8
        return cls.zeta(modulus, step) + cls.zeta(modulus, -step)

    def __repr__(self) -> str:
        return f"CyclotomicNumber({self._modulus}, {[str(c) for c in self._coeffs]})"

    def __str__(self) -> str:
        return self.render()

    def render(self) -> str:
        parts = []
        for power, c in enumerate(self._coeffs):
            if not c:
                continue
            text = f"{c.numerator}/{c.denominator}"
            if power:
                text += f"*zeta{self._modulus}^{power}"
            parts.append(text)
        return " + ".join(parts) if parts else "0"

    def is_zero(self) -> bool:
        return not any(self._coeffs)

    def is_rational(self) -> bool:
        return not any(self._coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self.render()} is not rational")
        return self._coeffs[0]

    def embed(self, modulus: int) -> CyclotomicNumber:
        """The same number as an element of ℚ(ζ_modulus), modulus a multiple of N"""
        if modulus == self._modulus:
            return self
        if modulus % self._modulus:
            raise ValueError(f"cannot embed ℚ(ζ_{self._modulus}) in ℚ(ζ_{modulus})")
        step = modulus // self._modulus
        table = power_table(modulus)
        out = [Fraction(0)] * euler_phi(modulus)
        for power, c in enumerate(self._coeffs):
            if c:
                row = table[(power * step) % modulus]
                for i, r in enumerate(row):
                    if r:
                        out[i] += c * r
        return CyclotomicNumber(modulus, out)

    def _aligned(self, other: CyclotomicNumber) -> Tuple[CyclotomicNumber, CyclotomicNumber]:
        if self._modulus == other._modulus:
            return self, other
        modulus = _lcm(self._modulus, other._modulus)
        return self.embed(modulus), other.embed(modulus)

    def _coerce(self, other: object) -> CyclotomicNumber:
        if isinstance(other, CyclotomicNumber):
            return other
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber.from_rational(other, self._modulus)
        return NotImplemented  # type: ignore[return-value]

    def __eq__(self, other: object) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        a, b = self._aligned(other)
        return a._coeffs == b._coeffs

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: object) -> CyclotomicNumber:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._aligned(other)
        return CyclotomicNumber(a._modulus, [x + y for x, y in zip(a._coeffs, b._coeffs)])

    __radd__ = __add__

    def __neg__(self) -> CyclotomicNumber:
        return CyclotomicNumber(self._modulus, [-c for c in self._coeffs])

    def __sub__(self, other: object) -> CyclotomicNumber:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: object) -> CyclotomicNumber:
        return (-self) + other

    def __mul__(self, other: object) -> CyclotomicNumber:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._aligned(other)
        if b.is_rational():
            s = b._coeffs[0]
            return CyclotomicNumber(a._modulus, [c * s for c in a._coeffs])
        if a.is_rational():
            s = a._coeffs[0]
            return CyclotomicNumber(b._modulus, [c * s for c in b._coeffs])
        product = [Fraction(0)] * (len(a._coeffs) + len(b._coeffs))
        for i, x in enumerate(a._coeffs):
            if x:
                for j, y in enumerate(b._coeffs):
                    if y:
                        product[i + j] += x * y
        return CyclotomicNumber(a._modulus, _reduce(a._modulus, product))

    __rmul__ = __mul__

    def galois(self, k: int) -> CyclotomicNumber:
        """The automorphism ζ ↦ ζ^k, k a unit mod N"""
        table = power_table(self._modulus)
        out = [Fraction(0)] * len(self._coeffs)
        for power, c in enumerate(self._coeffs):
            if c:
                for i, r in enumerate(table[(power * k) % self._modulus]):
                    if r:
                        out[i] += c * r
        return CyclotomicNumber(self._modulus, out)

    def conjugate(self) -> CyclotomicNumber:
        return self.galois(-1)

    def inverse(self) -> CyclotomicNumber:
        if self.is_zero():
            raise ZeroDivisionError("zero has no inverse in ℚ(ζ_N)")
        if self.is_rational():
            return CyclotomicNumber.from_rational(1 / self._coeffs[0], self._modulus)
        others = CyclotomicNumber.from_rational(1, self._modulus)
        for k in units_mod(self._modulus):
            if k != 1:
                others = others * self.galois(k)
        norm = (self * others).rational_value()
        return others * (1 / norm)

    def __pow__(self, exponent: int) -> CyclotomicNumber:
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = CyclotomicNumber.from_rational(1, self._modulus)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def to_mpc(self) -> mpmath.mpc:
        total = mpmath.mpc(0)
        for power, c in enumerate(self._coeffs):
            if c:
                angle = 2 * mpmath.pi * power / self._modulus
                total += mpmath.mpf(c.numerator) / c.denominator * mpmath.expj(angle)
        return total


def _reduce(modulus: int, values: Sequence[Fraction]) -> Tuple[Fraction, ...]:
    table = power_table(modulus)
    phi = euler_phi(modulus)
    out = list(values[:phi]) + [Fraction(0)] * max(0, phi - len(values))
    for power in range(phi, len(values)):
        c = values[power]
        if c:
            for i, r in enumerate(table[power % modulus]):
                if r:
                    out[i] += c * r
    return tuple(out)
