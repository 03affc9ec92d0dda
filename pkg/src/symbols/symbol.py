"""Truncated Heisenberg symbols and the star product."""
from __future__ import annotations

import logging
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

import mpmath

from ..errors import NotClassical, ShapeMismatch
from ..scalars.exact import Coercible, ExactScalar, numeric_eval
from ..scalars.fourier import FourierFunction
from .clifford import CliffordWord, clifford_mul
from .shape import FoliationShape
from .terms import Monomial, canonical, dp, dp_multi, multiply, sphere_representative

logger = logging.getLogger(__name__)

TermKey = Tuple[Monomial, CliffordWord]
Coefficient = Union[FourierFunction, Coercible]


def _accumulate(out: Dict[TermKey, FourierFunction], key: TermKey, f: FourierFunction) -> None:
    if key in out:
        f = out[key] + f
    if f.is_zero():
        out.pop(key, None)
    else:
        out[key] = f


class HSymbol:
    """Σ_d σ_d for top ≥ d ≥ floor; components below floor are unknown, not zero.

    Terms are stored as (canonical monomial, Clifford word) → Fourier coefficient;
    a log-carrying term sits at the degree of its log-free part.
    """

    __slots__ = ("_shape", "_terms", "_top", "_floor")

    def __init__(self, shape: FoliationShape, terms: Dict[TermKey, FourierFunction],
                 top: int, floor: int) -> None:
        if floor > top:
            raise ValueError(f"floor {floor} above top {top}")
        clean: Dict[TermKey, FourierFunction] = {}
        for (mono, word), f in terms.items():
            if f.is_zero():
                continue
            if f.dim != shape.n:
                raise ShapeMismatch(f"coefficient on T^{f.dim} for shape {shape}")
            for key, c in canonical(shape, mono):
                degree = key.degree(shape)
                if degree > top:
                    raise ValueError(f"term {key.render()} of degree {degree} above top {top}")
                if degree >= floor:
                    _accumulate(clean, (key, word), f.scale(c))
        self._shape = shape
        self._terms = clean
        self._top = top
        self._floor = floor

    # constructors

    @classmethod
    def zero(cls, shape: FoliationShape, top: int = 0, floor: Optional[int] = None) -> HSymbol:
        return cls(shape, {}, top, top if floor is None else floor)

    @classmethod
    def monomial(cls, shape: FoliationShape, gamma: Sequence[int] = None, rho_quarter: int = 0,
                 coeff: Coefficient = 1, word: CliffordWord = None, log_pow: int = 0,
                 top: Optional[int] = None, floor: Optional[int] = None) -> HSymbol:
        gamma = tuple(gamma) if gamma is not None else shape.zero_index()
        mono = Monomial(gamma, rho_quarter, log_pow)
        degree = mono.degree(shape)
        if not isinstance(coeff, FourierFunction):
            coeff = FourierFunction.constant(shape.n, coeff)
        top = degree if top is None else top
        return cls(shape, {(mono, word or CliffordWord()): coeff}, top,
                   degree if floor is None else floor)

    @classmethod
    def constant(cls, shape: FoliationShape, value: Coefficient = 1,
                 floor: int = 0, word: CliffordWord = None) -> HSymbol:
        return cls.monomial(shape, coeff=value, word=word, top=0, floor=floor)

    # structure

    @property
    def shape(self) -> FoliationShape:
        return self._shape

    @property
    def top(self) -> int:
        return self._top

    @property
    def floor(self) -> int:
        return self._floor

    @property
    def terms(self) -> Dict[TermKey, FourierFunction]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[TermKey, FourierFunction]]:
        return iter(sorted(self._terms.items(), key=lambda kv: (
            -kv[0][0].degree(self._shape), kv[0][0], kv[0][1])))

    def degree_of(self, key: TermKey) -> int:
        return key[0].degree(self._shape)

    def degrees(self) -> List[int]:
        return sorted({self.degree_of(key) for key in self._terms}, reverse=True)

    def component(self, degree: int) -> HSymbol:
        terms = {k: f for k, f in self._terms.items() if self.degree_of(k) == degree}
        return HSymbol(self._shape, terms, degree, degree)

    def is_zero(self) -> bool:
        return not self._terms

    def is_classical(self) -> bool:
        return all(mono.log_pow == 0 for mono, _ in self._terms)

    def is_scalar_type(self) -> bool:
        return all(word.is_identity() for _, word in self._terms)

    def is_x_independent(self) -> bool:
        return all(f.is_constant() for f in self._terms.values())

    def parity(self) -> Optional[int]:
        """Common Clifford parity of all terms, None if mixed"""
        parities = {word.parity for _, word in self._terms}
        if len(parities) > 1:
            return None
        return parities.pop() if parities else 0

    def check_classical(self) -> None:
        if not self.is_classical():
            raise NotClassical("symbol carries log ρ terms")

    # truncation

    def truncate(self, floor: int) -> HSymbol:
        floor = max(floor, self._floor)
        return HSymbol(self._shape, self._terms, max(self._top, floor), floor)

    def with_top(self, top: int) -> HSymbol:
        """Re-declare the top degree; raises if terms sit above it"""
        return HSymbol(self._shape, self._terms, top, min(self._floor, top))

    def with_floor(self, floor: int) -> HSymbol:
        """Lower or raise the floor, treating the stored expansion as exact"""
        return HSymbol(self._shape, self._terms, self._top, floor)

    # arithmetic

    def _check(self, other: HSymbol) -> None:
        if not isinstance(other, HSymbol):
            raise TypeError(f"expected HSymbol, got {type(other).__name__}")
        self._shape.check(other._shape)

    def __add__(self, other: HSymbol) -> HSymbol:
        self._check(other)
        out = dict(self._terms)
        for key, f in other._terms.items():
            _accumulate(out, key, f)
        return HSymbol(self._shape, out, max(self._top, other._top),
                       max(self._floor, other._floor))

    def __neg__(self) -> HSymbol:
        return HSymbol(self._shape, {k: -f for k, f in self._terms.items()},
                       self._top, self._floor)

    def __sub__(self, other: HSymbol) -> HSymbol:
        return self + (-other)

    def scale(self, factor: Coercible) -> HSymbol:
        factor = ExactScalar.coerce(factor)
        return HSymbol(self._shape, {k: f.scale(factor) for k, f in self._terms.items()},
                       self._top, self._floor)

    def times_function(self, g: FourierFunction) -> HSymbol:
        """Pointwise product with an x-dependent coefficient"""
        return HSymbol(self._shape, {k: f * g for k, f in self._terms.items()},
                       self._top, self._floor)

    def map_words(self, fn) -> HSymbol:
        """Apply fn(word) -> {word: int} to every Clifford word"""
        out: Dict[TermKey, FourierFunction] = {}
        for (mono, word), f in self._terms.items():
            for new_word, c in fn(word).items():
                _accumulate(out, (mono, new_word), f.scale(c))
        return HSymbol(self._shape, out, self._top, self._floor)

    def __eq__(self, other: object) -> bool:
        """Equality on the jointly trusted degrees"""
        if not isinstance(other, HSymbol) or other._shape != self._shape:
            return False
        return (self - other).is_zero()

    __hash__ = None  # type: ignore[assignment]

    # derivatives

    def dp(self, axis: int) -> HSymbol:
        out: Dict[TermKey, FourierFunction] = {}
        for (mono, word), f in self._terms.items():
            for key, c in dp(self._shape, mono, axis):
                _accumulate(out, (key, word), f.scale(c))
        w = self._shape.weights[axis]
        return HSymbol(self._shape, out, self._top - w, self._floor - w)

    def dx(self, axis: int) -> HSymbol:
        return HSymbol(self._shape, {k: f.deriv(axis) for k, f in self._terms.items()},
                       self._top, self._floor)

    # evaluation

    def evaluate(self, x: Sequence[float], p: Sequence[float], digits: int = 30) -> mpmath.mpc:
        """Numeric value of a scalar-type symbol at (x, p), p ≠ 0"""
        if not self.is_scalar_type():
            raise ValueError("numeric evaluation needs a scalar-type symbol")
        with mpmath.workdps(digits + 5):
            pv = [mpmath.mpf(c) for c in p]
            rho = sum(pv[i] ** k for i, k in enumerate(self._shape.rho_exponents))
            total = mpmath.mpc(0)
            for (mono, _), f in self._terms.items():
                fx = mpmath.mpc(0)
                for k, c in f.items():
                    phase = 2 * mpmath.pi * sum(a * mpmath.mpf(b) for a, b in zip(k, x))
                    fx += numeric_eval(c, digits + 5) * mpmath.expj(phase)
                value = fx * rho ** (mpmath.mpf(mono.rho_quarter) / 4)
                for i, g in enumerate(mono.gamma):
                    value *= pv[i] ** g
                if mono.log_pow:
                    value *= mpmath.log(rho)
                total += value
            return +total

    # output

    def render(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (mono, word), f in self.items():
            text = f"({f.render()})·{mono.render()}"
            if not word.is_identity():
                text += f"·{word.render()}"
            parts.append(text)
        return " + ".join(parts)

    def __repr__(self) -> str:
        return (f"HSymbol(shape={self._shape}, top={self._top}, floor={self._floor}, "
                f"terms={len(self._terms)})")


def star_floor(a: HSymbol, b: HSymbol) -> int:
    return max(a.floor + b.top, a.top + b.floor)


def _alphas(weights: Sequence[int], axes: Sequence[int], reach: int) -> Iterator[Tuple[int, ...]]:
    """Multi-indices supported on axes with weighted size ≤ reach"""
    n = len(weights)

    def walk(pos: int, remaining: int, current: List[int]) -> Iterator[Tuple[int, ...]]:
        if pos == len(axes):
            yield tuple(current)
            return
        axis = axes[pos]
        count = 0
        while count * weights[axis] <= remaining:
            current[axis] = count
            yield from walk(pos + 1, remaining - count * weights[axis], current)
            count += 1
        current[axis] = 0

    yield from walk(0, reach, [0] * n)


def _alpha_factor(alpha: Sequence[int]) -> ExactScalar:
    """(−i)^{|α|}/α!"""
    order = sum(alpha)
    denom = 1
    for a in alpha:
        for j in range(2, a + 1):
            denom *= j
    return (ExactScalar.i() * -1) ** order * Fraction(1, denom)


def pointwise(a: HSymbol, b: HSymbol) -> HSymbol:
    """Fiberwise product (the α = 0 term of the star product)"""
    a._check(b)
    shape = a.shape
    out: Dict[TermKey, FourierFunction] = {}
    for (ma, wa), fa in a._terms.items():
        for (mb, wb), fb in b._terms.items():
            f = fa * fb
            words = clifford_mul(wa, wb)
            for mono, c in multiply(shape, ma, mb):
                for word, s in words.items():
                    _accumulate(out, (mono, word), f.scale(c * s))
    return HSymbol(shape, out, a.top + b.top, star_floor(a, b))


def star(a: HSymbol, b: HSymbol) -> HSymbol:
    """σ = Σ_α ((−i)^{|α|}/α!) ∂_p^α a · ∂_x^α b, complete on degrees ≥ the result floor"""
    a._check(b)
    shape = a.shape
    top = a.top + b.top
    floor = star_floor(a, b)
    if a.is_zero() or b.is_zero():
        return HSymbol.zero(shape, top, floor)
    axes = sorted({i for f in b._terms.values() for k in f.support for i, x in enumerate(k) if x})
    max_a = max(a.degree_of(k) for k in a._terms)
    max_b = max(b.degree_of(k) for k in b._terms)
    reach = max_a + max_b - floor
    out: Dict[TermKey, FourierFunction] = {}
    count = 0
    for alpha in _alphas(shape.weights, axes, reach):
        weight = shape.weight(alpha)
        factor = _alpha_factor(alpha)
        dxb = []
        for (mb, wb), fb in b._terms.items():
            g = fb.deriv_multi(alpha)
            if not g.is_zero():
                dxb.append((mb, wb, g.scale(factor), mb.degree(shape)))
        if not dxb:
            continue
        for (ma, wa), fa in a._terms.items():
            deg_a = ma.degree(shape) - weight
            if deg_a + max_b < floor:
                continue
            derivs = dp_multi(shape, ma, alpha)
            if not derivs:
                continue
            for mb, wb, g, deg_b in dxb:
                if deg_a + deg_b < floor:
                    continue
                f = fa * g
                words = clifford_mul(wa, wb)
                for m1, c1 in derivs:
                    for m2, c2 in multiply(shape, m1, mb):
                        for word, s in words.items():
                            _accumulate(out, (m2, word), f.scale(c1 * c2 * s))
                            count += 1
    logger.debug("star: shape %s top %d floor %d, %d term products", shape, top, floor, count)
    return HSymbol(shape, out, top, floor)


def star_direct(a: HSymbol, b: HSymbol, max_alpha: int) -> HSymbol:
    """Star product by explicit α enumeration |α| ≤ max_alpha, one derivative at a time"""
    a._check(b)
    shape = a.shape
    total = HSymbol.zero(shape, a.top + b.top, star_floor(a, b))
    frontier = [((0,) * shape.n, a, b)]
    seen = {(0,) * shape.n}
    while frontier:
        alpha, da, db = frontier.pop()
        total = total + pointwise(da, db).scale(_alpha_factor(alpha)).with_floor(total.floor)
        if sum(alpha) == max_alpha:
            continue
        for axis in range(shape.n):
            nxt = tuple(x + (1 if i == axis else 0) for i, x in enumerate(alpha))
            if nxt in seen:
                continue
            seen.add(nxt)
            # ∂_p^{α+e} a and ∂_x^{α+e} b from the sorted path through α
            pa, pb = a, b
            for i, count in enumerate(nxt):
                for _ in range(count):
                    pa = pa.dp(i)
                    pb = pb.dx(i)
            frontier.append((nxt, pa, pb))
    return total


def commutator(a: HSymbol, b: HSymbol) -> HSymbol:
    return star(a, b) - star(b, a)


def leading(a: HSymbol) -> HSymbol:
    return a.component(a.top)


def restrict_to_sphere(a: HSymbol, degree: Optional[int] = None) -> HSymbol:
    """Restriction to ρ = 1, as the degree-0 symbol with the same sphere values"""
    shape = a.shape
    out: Dict[TermKey, FourierFunction] = {}
    for (mono, word), f in a._terms.items():
        if mono.log_pow:
            continue
        if degree is not None and mono.degree(shape) != degree:
            continue
        for key, c in canonical(shape, sphere_representative(shape, mono)):
            _accumulate(out, (key, word), f.scale(c))
    return HSymbol(shape, out, 0, 0)


def dilate(a: HSymbol, t: Fraction) -> HSymbol:
    """Heisenberg dilation p ↦ t·p: the degree-d component scales by t^d"""
    t = Fraction(t)
    if t <= 0:
        raise ValueError("dilation factor must be positive")
    out = {key: f.scale(t ** a.degree_of(key)) for key, f in a._terms.items()}
    return HSymbol(a.shape, out, a.top, a.floor)


def power(a: HSymbol, exponent: int) -> HSymbol:
    result = HSymbol.constant(a.shape, 1, floor=a.floor - a.top)
    for _ in range(exponent):
        result = star(result, a)
    return result
