"""Operators on symbols: Σ ε^k (s)_L (w)_R ∂_x^α ∂_p^β in canonical order.

Left factors multiply pointwise, right Clifford words act with the Koszul
sign w_R(σ) = (−1)^{|w||σ|} σ·w, so left and right actions graded-commute.
Two truncations are tracked:

* ``eps_order`` N: coefficients of ε^{>N} are unknown (None when exact);
* ``contracted_order`` M: terms with ε-power minus |α| above M were dropped.
  That difference is the ε-power a term keeps after contraction against the
  flat heat kernel, and composition never lowers it.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb
from typing import Dict, Iterator, List, Mapping, NamedTuple, Optional, Sequence, Tuple

from ..errors import NotInFiltration
from ..scalars.exact import Coercible, ExactScalar
from ..scalars.fourier import FourierFunction
from ..symbols.clifford import CliffordWord, clifford_mul
from ..symbols.shape import FoliationShape
from ..symbols.symbol import HSymbol, pointwise

logger = logging.getLogger(__name__)

DEFAULT_SYMBOL_DEPTH = 8

Index = Tuple[int, ...]


class OpKey(NamedTuple):
    word: CliffordWord
    dx: Index
    dp: Index
    eps: int

    @property
    def contracted(self) -> int:
        return self.eps - sum(self.dx)


@dataclass(frozen=True)
class OpTerm:
    left_sym: HSymbol
    right_word: CliffordWord
    dx: Index
    dp: Index
    eps_pow: int

    @property
    def key(self) -> OpKey:
        return OpKey(self.right_word, self.dx, self.dp, self.eps_pow)


def default_symbol_floor(shape: FoliationShape) -> int:
    return -shape.Q - DEFAULT_SYMBOL_DEPTH


def _min_defined(*values: Optional[int]) -> Optional[int]:
    known = [v for v in values if v is not None]
    return min(known) if known else None


def _combine(order_s: Optional[int], order_t: Optional[int],
             low_s: Optional[int], low_t: Optional[int]) -> Optional[int]:
    """Truncation of a product: unknown parts of one factor times the lowest
    known part of the other"""
    candidates = []
    if order_s is not None and low_t is not None:
        candidates.append(order_s + low_t)
    if order_t is not None and low_s is not None:
        candidates.append(order_t + low_s)
    return min(candidates) if candidates else None


class OpSeries:
    __slots__ = ("_shape", "_terms", "_eps_order", "_contracted_order", "_symbol_floor")

    def __init__(self, shape: FoliationShape, terms: Mapping[Tuple, HSymbol] = None,
                 eps_order: Optional[int] = None, contracted_order: Optional[int] = None,
                 symbol_floor: Optional[int] = None) -> None:
        n = shape.n
        floor = default_symbol_floor(shape) if symbol_floor is None else symbol_floor
        clean: Dict[OpKey, HSymbol] = {}
        for raw, sym in (terms or {}).items():
            key = OpKey(raw[0], tuple(raw[1]), tuple(raw[2]), int(raw[3]))
            if len(key.dx) != n or len(key.dp) != n or key.eps < 0:
                raise ValueError(f"operator key {key} does not fit shape {shape}")
            if key.word.max_index() >= n:
                raise ValueError(f"right word {key.word.render()} needs more than {n} generators")
            shape.check(sym.shape)
            if eps_order is not None and key.eps > eps_order:
                continue
            if contracted_order is not None and key.contracted > contracted_order:
                continue
            if sym.is_zero():
                continue
            sym = sym.truncate(floor)
            if key in clean:
                sym = clean[key] + sym
            if sym.is_zero():
                clean.pop(key, None)
            else:
                clean[key] = sym
        self._shape = shape
        self._terms = clean
        self._eps_order = eps_order
        self._contracted_order = contracted_order
        self._symbol_floor = floor

    # constructors

    @classmethod
    def zero(cls, shape: FoliationShape, **kwargs) -> OpSeries:
        return cls(shape, {}, **kwargs)

    @classmethod
    def single(cls, left: HSymbol, word: CliffordWord = None, dx: Sequence[int] = None,
               dp: Sequence[int] = None, eps: int = 0, **kwargs) -> OpSeries:
        shape = left.shape
        zero = shape.zero_index()
        key = OpKey(word or CliffordWord(), tuple(dx or zero), tuple(dp or zero), eps)
        return cls(shape, {key: left}, **kwargs)

    @classmethod
    def identity(cls, shape: FoliationShape, **kwargs) -> OpSeries:
        return cls.single(left_constant(shape), **kwargs)

    @classmethod
    def right(cls, shape: FoliationShape, word: CliffordWord, coeff: Coercible = 1,
              eps: int = 0) -> OpSeries:
        return cls.single(left_constant(shape, coeff), word, eps=eps)

    @classmethod
    def derivative(cls, shape: FoliationShape, dx: Sequence[int] = None,
                   dp: Sequence[int] = None, coeff: Coercible = 1, eps: int = 0) -> OpSeries:
        return cls.single(left_constant(shape, coeff), dx=dx, dp=dp, eps=eps)

    # structure

    @property
    def shape(self) -> FoliationShape:
        return self._shape

    @property
    def eps_order(self) -> Optional[int]:
        return self._eps_order

    @property
    def contracted_order(self) -> Optional[int]:
        return self._contracted_order

    @property
    def symbol_floor(self) -> int:
        return self._symbol_floor

    def items(self) -> Iterator[Tuple[OpKey, HSymbol]]:
        return iter(sorted(self._terms.items(), key=lambda kv: (kv[0].eps, kv[0].dx, kv[0].dp,
                                                                 kv[0].word)))

    def terms(self) -> List[OpTerm]:
        return [OpTerm(sym, key.word, key.dx, key.dp, key.eps) for key, sym in self.items()]

    def coefficient(self, key: OpKey) -> HSymbol:
        return self._terms.get(key) or HSymbol.zero(self._shape, 0, self._symbol_floor)

    def is_zero(self) -> bool:
        return not self._terms

    def min_eps(self) -> Optional[int]:
        return min((key.eps for key in self._terms), default=None)

    def min_contracted(self) -> Optional[int]:
        return min((key.contracted for key in self._terms), default=None)

    def parity(self) -> Optional[int]:
        """Total Clifford parity (left and right), None if mixed"""
        parities = set()
        for key, sym in self._terms.items():
            left = sym.parity()
            if left is None:
                return None
            parities.add((left + key.word.parity) % 2)
        if len(parities) > 1:
            return None
        return parities.pop() if parities else 0

    def _settings(self, other: Optional[OpSeries] = None) -> Dict[str, Optional[int]]:
        if other is None:
            return dict(eps_order=self._eps_order, contracted_order=self._contracted_order,
                        symbol_floor=self._symbol_floor)
        return dict(eps_order=_min_defined(self._eps_order, other._eps_order),
                    contracted_order=_min_defined(self._contracted_order,
                                                  other._contracted_order),
                    symbol_floor=max(self._symbol_floor, other._symbol_floor))

    # truncation

    def restrict(self, eps_order: int) -> OpSeries:
        """Drop ε^{>eps_order}; the result is known modulo ε^{eps_order+1}"""
        settings = self._settings()
        settings["eps_order"] = _min_defined(eps_order, self._eps_order)
        return OpSeries(self._shape, self._terms, **settings)

    def prune(self, contracted_order: int) -> OpSeries:
        """Drop terms whose contracted ε-power exceeds contracted_order"""
        settings = self._settings()
        settings["contracted_order"] = _min_defined(contracted_order, self._contracted_order)
        return OpSeries(self._shape, self._terms, **settings)

    # linear structure

    def _check(self, other: OpSeries) -> None:
        if not isinstance(other, OpSeries):
            raise TypeError(f"expected OpSeries, got {type(other).__name__}")
        self._shape.check(other._shape)

    def __add__(self, other: OpSeries) -> OpSeries:
        self._check(other)
        out = dict(self._terms)
        for key, sym in other._terms.items():
            out[key] = out[key] + sym if key in out else sym
        return OpSeries(self._shape, out, **self._settings(other))

    def __neg__(self) -> OpSeries:
        return OpSeries(self._shape, {k: -s for k, s in self._terms.items()}, **self._settings())

    def __sub__(self, other: OpSeries) -> OpSeries:
        return self + (-other)

    def scale(self, factor: Coercible) -> OpSeries:
        return OpSeries(self._shape, {k: s.scale(factor) for k, s in self._terms.items()},
                        **self._settings())

    def times_eps(self, power: int) -> OpSeries:
        settings = self._settings()
        if self._eps_order is not None:
            settings["eps_order"] = self._eps_order + power
        if self._contracted_order is not None:
            settings["contracted_order"] = self._contracted_order + power
        return OpSeries(self._shape, {k._replace(eps=k.eps + power): s
                                      for k, s in self._terms.items()}, **settings)

    def __matmul__(self, other: OpSeries) -> OpSeries:
        return op_compose(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OpSeries) or other._shape != self._shape:
            return False
        return (self - other).is_zero()

    __hash__ = None  # type: ignore[assignment]

    # filtration

    def term_order(self, key: OpKey, sym: HSymbol) -> Fraction:
        """ord(s) − (k + ‖β‖ − 3|α|)/2, the least m with the term in 𝒟^m"""
        degree = max(sym.degrees())
        return degree - Fraction(key.eps + self._shape.norm3(key.dp) - 3 * sum(key.dx), 2)

    def filtration_order(self) -> Optional[Fraction]:
        """Least m with the series in 𝒟^m; None for the zero series"""
        orders = [self.term_order(k, s) for k, s in self._terms.items()]
        return max(orders) if orders else None

    def in_filtration(self, m: Fraction, k: int = 0) -> bool:
        if self.is_zero():
            return True
        return self.min_eps() >= k and self.filtration_order() <= Fraction(m)

    def check_filtration(self, m: Fraction, k: int = 0) -> None:
        if not self.in_filtration(m, k):
            raise NotInFiltration(
                f"operator of order {self.filtration_order()} with lowest ε-power "
                f"{self.min_eps()} is not in D^{m}_{k}")

    def render(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for key, sym in self.items():
            text = f"[{sym.render()}]"
            if not key.word.is_identity():
                text += f"·({key.word.render()})_R"
            for name, index in (("dx", key.dx), ("dp", key.dp)):
                for axis, power in enumerate(index):
                    if power:
                        text += f"·{name}{axis + 1}" + (f"^{power}" if power > 1 else "")
            if key.eps:
                text += f"·eps^{key.eps}"
            parts.append(text)
        return " + ".join(parts)

    def __repr__(self) -> str:
        return (f"OpSeries(shape={self._shape}, terms={len(self._terms)}, "
                f"eps_order={self._eps_order}, contracted_order={self._contracted_order})")


# left-symbol builders with floors deep enough for residue extraction

def left_constant(shape: FoliationShape, value: Coercible = 1,
                  word: CliffordWord = None) -> HSymbol:
    return HSymbol.constant(shape, value, floor=default_symbol_floor(shape), word=word)


def left_function(shape: FoliationShape, f: FourierFunction,
                  word: CliffordWord = None) -> HSymbol:
    return HSymbol.constant(shape, f, floor=default_symbol_floor(shape), word=word)


def left_momentum(shape: FoliationShape, axis: int, coeff=1) -> HSymbol:
    """coeff·p_axis (0-based axis)"""
    return HSymbol.monomial(shape, shape.unit(axis), coeff=coeff,
                            floor=default_symbol_floor(shape))


# composition

def _sub_indices(index: Index) -> Iterator[Index]:
    return product(*(range(a + 1) for a in index))


def _binomial(index: Index, sub: Index) -> int:
    out = 1
    for a, b in zip(index, sub):
        out *= comb(a, b)
    return out


def _differentiate(sym: HSymbol, dx: Index, dp: Index) -> HSymbol:
    for axis, power in enumerate(dx):
        for _ in range(power):
            sym = sym.dx(axis)
    for axis, power in enumerate(dp):
        for _ in range(power):
            sym = sym.dp(axis)
    return sym


def _odd_sign(word: CliffordWord) -> Dict[CliffordWord, int]:
    return {word: -1 if word.parity else 1}


def op_compose(s: OpSeries, t: OpSeries) -> OpSeries:
    """s∘t rewritten to canonical order.

    ∂^α b_L = Σ C(α,α′)(∂^{α′}b)_L ∂^{α−α′},  w_R b_L = (−1)^{|w||b|} b_L w_R,
    w_R u_R = (−1)^{|w||u|} (u·w)_R.
    """
    s._check(t)
    shape = s.shape
    settings = s._settings(t)
    settings["eps_order"] = _combine(s.eps_order, t.eps_order, s.min_eps(), t.min_eps())
    settings["contracted_order"] = _combine(s.contracted_order, t.contracted_order,
                                            s.min_contracted(), t.min_contracted())
    eps_order = settings["eps_order"]
    contracted_order = settings["contracted_order"]
    out: Dict[OpKey, HSymbol] = {}
    for kb, b in t._terms.items():
        cache: Dict[Tuple[Index, Index], HSymbol] = {}
        for ka, a in s._terms.items():
            eps = ka.eps + kb.eps
            if eps_order is not None and eps > eps_order:
                continue
            words = clifford_mul(kb.word, ka.word)
            sign = -1 if ka.word.parity and kb.word.parity else 1
            for ax in _sub_indices(ka.dx):
                dx = tuple(a_ - x + y for a_, x, y in zip(ka.dx, ax, kb.dx))
                if contracted_order is not None and eps - sum(dx) > contracted_order:
                    continue
                for bp in _sub_indices(ka.dp):
                    dp = tuple(a_ - x + y for a_, x, y in zip(ka.dp, bp, kb.dp))
                    if (ax, bp) not in cache:
                        cache[(ax, bp)] = _differentiate(b, ax, bp)
                    db = cache[(ax, bp)]
                    if db.is_zero():
                        continue
                    if ka.word.parity:
                        db = db.map_words(_odd_sign)
                    left = pointwise(a, db).scale(_binomial(ka.dx, ax) * _binomial(ka.dp, bp))
                    for word, c in words.items():
                        key = OpKey(word, dx, dp, eps)
                        term = left.scale(sign * c)
                        out[key] = out[key] + term if key in out else term
    result = OpSeries(shape, out, **settings)
    logger.debug("op_compose: %d x %d terms -> %d", len(s._terms), len(t._terms),
                 len(result._terms))
    return result


def graded_commutator(s: OpSeries, t: OpSeries) -> OpSeries:
    """[s, t] = st − (−1)^{|s||t|} ts for homogeneous s, t"""
    ps, pt = s.parity(), t.parity()
    if ps is None or pt is None:
        raise ValueError("graded commutator needs homogeneous operators")
    sign = -1 if ps and pt else 1
    return op_compose(s, t) - op_compose(t, s).scale(sign)


def apply_op(s: OpSeries, sym: HSymbol) -> Dict[int, HSymbol]:
    """Action on a symbol, as {ε-power: symbol}"""
    s.shape.check(sym.shape)
    out: Dict[int, HSymbol] = {}
    for key, a in s._terms.items():
        d = _differentiate(sym, key.dx, key.dp)
        if d.is_zero():
            continue
        if not key.word.is_identity():
            w = key.word

            def right_mul(v: CliffordWord, w: CliffordWord = w) -> Dict[CliffordWord, int]:
                sign = -1 if v.parity and w.parity else 1
                return {x: sign * c for x, c in clifford_mul(v, w).items()}

            d = d.map_words(right_mul)
        term = pointwise(a, d)
        out[key.eps] = out[key.eps] + term if key.eps in out else term
    return out
