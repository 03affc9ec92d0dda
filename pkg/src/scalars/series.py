"""Truncated power series in ε with exact coefficients."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Sequence, Tuple

import mpmath

from .exact import Coercible, ExactScalar


class EpsSeries:
    """c_0 + c_1 ε + … + c_N ε^N; coefficients beyond N are unknown"""

    __slots__ = ("_coeffs", "_order")

    def __init__(self, coeffs: Sequence[Coercible], order: int) -> None:
        if order < 0:
            raise ValueError(f"series order must be non-negative, got {order}")
        values = [ExactScalar.coerce(c) for c in list(coeffs)[: order + 1]]
        values.extend(ExactScalar.zero() for _ in range(order + 1 - len(values)))
        self._coeffs: Tuple[ExactScalar, ...] = tuple(values)
        self._order = order

    @classmethod
    def zero(cls, order: int) -> EpsSeries:
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> EpsSeries:
        return cls([1], order)

    @classmethod
    def eps(cls, order: int, coeff: Coercible = 1) -> EpsSeries:
        return cls([0, coeff], order)

    @property
    def order(self) -> int:
        return self._order

    @property
    def coeffs(self) -> Tuple[ExactScalar, ...]:
        return self._coeffs

    def __getitem__(self, k: int) -> ExactScalar:
        if k > self._order:
            raise IndexError(f"coefficient of ε^{k} is beyond the truncation ε^{self._order}")
        return self._coeffs[k] if k >= 0 else ExactScalar.zero()

    def truncate(self, order: int) -> EpsSeries:
        return EpsSeries(self._coeffs, min(order, self._order))

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self._coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EpsSeries):
            return False
        order = min(self._order, other._order)
        return all(self._coeffs[k] == other._coeffs[k] for k in range(order + 1))

    __hash__ = None  # type: ignore[assignment]

    def _lift(self, other) -> EpsSeries:
        if isinstance(other, EpsSeries):
            return other
        return EpsSeries([other], self._order)

    def __add__(self, other) -> EpsSeries:
        other = self._lift(other)
        order = min(self._order, other._order)
        return EpsSeries([self._coeffs[k] + other._coeffs[k] for k in range(order + 1)], order)

    __radd__ = __add__

    def __neg__(self) -> EpsSeries:
        return EpsSeries([-c for c in self._coeffs], self._order)

    def __sub__(self, other) -> EpsSeries:
        return self + (-self._lift(other))

    def __rsub__(self, other) -> EpsSeries:
        return self._lift(other) - self

    def __mul__(self, other) -> EpsSeries:
        if not isinstance(other, EpsSeries):
            factor = ExactScalar.coerce(other)
            return EpsSeries([c * factor for c in self._coeffs], self._order)
        order = min(self._order, other._order)
        out = [ExactScalar.zero() for _ in range(order + 1)]
        for i, a in enumerate(self._coeffs[: order + 1]):
            if a.is_zero():
                continue
            for j in range(order + 1 - i):
                b = other._coeffs[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return EpsSeries(out, order)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> EpsSeries:
        result = EpsSeries.one(self._order)
        for _ in range(exponent):
            result = result * self
        return result

    def exp(self) -> EpsSeries:
        """exp of a series without constant term: n·e_n = Σ_k k·s_k·e_{n−k}"""
        if not self._coeffs[0].is_zero():
            raise ValueError("exp needs a series without ε^0 term")
        out = [ExactScalar.one()]
        for n in range(1, self._order + 1):
            total = ExactScalar.zero()
            for k in range(1, n + 1):
                if not self._coeffs[k].is_zero():
                    total = total + self._coeffs[k] * out[n - k] * k
            out.append(total * Fraction(1, n))
        return EpsSeries(out, self._order)

    def log(self) -> EpsSeries:
        """log of a series with constant term 1: n·l_n = n·s_n − Σ_{k<n} k·l_k·s_{n−k}"""
        if self._coeffs[0] != 1:
            raise ValueError("log needs a series with ε^0 term equal to 1")
        out = [ExactScalar.zero()]
        for n in range(1, self._order + 1):
            total = self._coeffs[n] * n
            for k in range(1, n):
                if not out[k].is_zero():
                    total = total - out[k] * self._coeffs[n - k] * k
            out.append(total * Fraction(1, n))
        return EpsSeries(out, self._order)

    def render(self) -> str:
        parts = []
        for k, c in enumerate(self._coeffs):
            if c.is_zero():
                continue
            parts.append(c.render() if k == 0 else f"{c.render()}·eps^{k}")
        return " + ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"EpsSeries({self.render()!r}, order={self._order})"


@lru_cache(maxsize=None)
def bernoulli_numbers(count: int) -> Tuple[Fraction, ...]:
    """B_0..B_{count-1} with B_1 = −1/2, i.e. the coefficients of x/(e^x − 1)"""
    values = []
    for m in range(count):
        p, q = mpmath.bernfrac(m)
        values.append(Fraction(int(p), int(q)))
    return tuple(values)


def todd_log_coefficients(order: int) -> Tuple[Fraction, ...]:
    """Coefficients of log(x/(e^x − 1)) = −x/2 + x²/24 − x⁴/2880 + …"""
    bern = bernoulli_numbers(order + 1)
    todd_gen = EpsSeries(
        [Fraction(b) / factorial(k) for k, b in enumerate(bern)], order)
    return tuple(c.rational_value() for c in todd_gen.log().coeffs)
