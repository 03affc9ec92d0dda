"""Trigonometric polynomials f(x) = Σ_k c_k e^{2πi k·x} on the torus ℝ^n/ℤ^n."""
from __future__ import annotations

from typing import Dict, Iterator, Mapping, Sequence, Tuple, Union

from ..errors import DimensionMismatch
from .exact import Coercible, ExactScalar

Frequency = Tuple[int, ...]


def two_pi_i() -> ExactScalar:
    """2πi = 2·ζ_4·(π^{1/2})^2"""
    return ExactScalar.i() * ExactScalar.pi(1) * 2


class FourierFunction:
    """Finite Fourier series with exact coefficients"""

    __slots__ = ("_dim", "_coeffs")

    def __init__(self, dim: int, coeffs: Mapping[Sequence[int], Coercible] = None) -> None:
        if dim < 1:
            raise DimensionMismatch(f"torus dimension must be positive, got {dim}")
        clean: Dict[Frequency, ExactScalar] = {}
        for k, c in (coeffs or {}).items():
            key = tuple(int(x) for x in k)
            if len(key) != dim:
                raise DimensionMismatch(
                    f"frequency {key} does not live on a {dim}-dimensional torus")
            value = ExactScalar.coerce(c)
            if key in clean:
                value = clean[key] + value
            if value.is_zero():
                clean.pop(key, None)
            else:
                clean[key] = value
        self._dim = dim
        self._coeffs = clean

    @classmethod
    def constant(cls, dim: int, value: Coercible = 1) -> FourierFunction:
        return cls(dim, {(0,) * dim: value})

    @classmethod
    def zero(cls, dim: int) -> FourierFunction:
        return cls(dim)

    @classmethod
    def character(cls, k: Sequence[int], value: Coercible = 1) -> FourierFunction:
        """value·e^{2πi k·x}"""
        return cls(len(k), {tuple(k): value})

    @property
    def dim(self) -> int:
        return self._dim

    @property
    def coeffs(self) -> Dict[Frequency, ExactScalar]:
        return dict(self._coeffs)

    @property
    def support(self) -> Tuple[Frequency, ...]:
        return tuple(sorted(self._coeffs))

    def items(self) -> Iterator[Tuple[Frequency, ExactScalar]]:
        return iter(sorted(self._coeffs.items()))

    def coeff(self, k: Sequence[int]) -> ExactScalar:
        return self._coeffs.get(tuple(k), ExactScalar.zero())

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_constant(self) -> bool:
        return all(not any(k) for k in self._coeffs)

    def is_character(self) -> bool:
        """A single frequency with a single-term scalar coefficient"""
        if len(self._coeffs) != 1:
            return False
        (c,) = self._coeffs.values()
        return c.is_monomial()

    def _check(self, other: FourierFunction) -> None:
        if other._dim != self._dim:
            raise DimensionMismatch(
                f"cannot combine functions on T^{self._dim} and T^{other._dim}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FourierFunction):
            return False
        if other._dim != self._dim or set(other._coeffs) != set(self._coeffs):
            return False
        return all(self._coeffs[k] == other._coeffs[k] for k in self._coeffs)

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: FourierFunction) -> FourierFunction:
        self._check(other)
        merged: Dict[Frequency, ExactScalar] = dict(self._coeffs)
        for k, c in other._coeffs.items():
            merged[k] = merged[k] + c if k in merged else c
        return FourierFunction(self._dim, merged)

    def __neg__(self) -> FourierFunction:
        return FourierFunction(self._dim, {k: -c for k, c in self._coeffs.items()})

    def __sub__(self, other: FourierFunction) -> FourierFunction:
        return self + (-other)

    def __mul__(self, other: Union[FourierFunction, Coercible]) -> FourierFunction:
        if not isinstance(other, FourierFunction):
            return self.scale(other)
        self._check(other)
        product: Dict[Frequency, ExactScalar] = {}
        for k1, c1 in self._coeffs.items():
            for k2, c2 in other._coeffs.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                term = c1 * c2
                product[k] = product[k] + term if k in product else term
        return FourierFunction(self._dim, product)

    def __rmul__(self, other: Coercible) -> FourierFunction:
        return self.scale(other)

    def scale(self, factor: Coercible) -> FourierFunction:
        factor = ExactScalar.coerce(factor)
        if factor.is_zero():
            return FourierFunction(self._dim)
        return FourierFunction(self._dim, {k: c * factor for k, c in self._coeffs.items()})

    def deriv(self, axis: int) -> FourierFunction:
        """∂/∂x_{axis+1}: c_k ↦ 2πi·k_axis·c_k"""
        if not 0 <= axis < self._dim:
            raise DimensionMismatch(f"no coordinate {axis + 1} on T^{self._dim}")
        factor = two_pi_i()
        return FourierFunction(
            self._dim,
            {k: c * factor * k[axis] for k, c in self._coeffs.items() if k[axis]},
        )

    def deriv_multi(self, alpha: Sequence[int]) -> FourierFunction:
        result = self
        for axis, count in enumerate(alpha):
            for _ in range(count):
                result = result.deriv(axis)
        return result

    def conjugate(self) -> FourierFunction:
        """Complex conjugate: c_k ↦ conj(c_{-k})"""
        return FourierFunction(
            self._dim,
            {tuple(-x for x in k): c.conjugate() for k, c in self._coeffs.items()},
        )

    def torus_integral(self) -> ExactScalar:
        return self.coeff((0,) * self._dim)

    def render(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for k, c in self.items():
            if any(k):
                parts.append(f"[{c.render()}]·e({','.join(str(x) for x in k)})")
            else:
                parts.append(f"[{c.render()}]")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"FourierFunction({self._dim}, {self.render()!r})"


def fourier_arith(f: FourierFunction, g: FourierFunction = None, op: str = "add",
                  j: int = 1) -> FourierFunction:
    """Dispatch for add | mul | deriv; deriv takes the 1-based coordinate j"""
    if op == "add":
        return f + g
    if op == "mul":
        return f * g
    if op == "deriv":
        return f.deriv(j - 1)
    raise ValueError(f"unknown Fourier operation: {op}")


def torus_integral(f: FourierFunction) -> ExactScalar:
    return f.torus_integral()
