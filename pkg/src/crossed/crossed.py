"""The crossed product S_H ⋊ G: finite sums Σ_g a_g U_g."""
from __future__ import annotations

from typing import Dict, Iterator, Mapping, Tuple

from ..errors import GroupMismatch
from ..scalars.exact import Coercible, ExactScalar
from ..symbols.shape import FoliationShape
from ..symbols.symbol import HSymbol, star
from ..residue.wres import wres
from .isometry import IsometryElement


class CrossedSymbol:
    __slots__ = ("_shape", "_support")

    def __init__(self, shape: FoliationShape,
                 support: Mapping[IsometryElement, HSymbol] = None) -> None:
        clean: Dict[IsometryElement, HSymbol] = {}
        for g, a in (support or {}).items():
            shape.check(g.shape)
            shape.check(a.shape)
            if not a.is_zero():
                clean[g] = a
        self._shape = shape
        self._support = clean

    @classmethod
    def at(cls, g: IsometryElement, a: HSymbol) -> CrossedSymbol:
        """a·U_g"""
        return cls(a.shape, {g: a})

    @classmethod
    def untwisted(cls, a: HSymbol) -> CrossedSymbol:
        return cls.at(IsometryElement.identity(a.shape), a)

    @property
    def shape(self) -> FoliationShape:
        return self._shape

    @property
    def support(self) -> Dict[IsometryElement, HSymbol]:
        return dict(self._support)

    def items(self) -> Iterator[Tuple[IsometryElement, HSymbol]]:
        return iter(sorted(self._support.items(), key=lambda kv: kv[0].render()))

    def __getitem__(self, g: IsometryElement) -> HSymbol:
        return self._support.get(g) or HSymbol.zero(self._shape)

    def unit_component(self) -> HSymbol:
        for g, a in self._support.items():
            if g.is_identity():
                return a
        return HSymbol.zero(self._shape, 0, -self._shape.Q)

    def is_zero(self) -> bool:
        return not self._support

    def _check(self, other: CrossedSymbol) -> None:
        self._shape.check(other._shape)
        moduli = {g.modulus for g in self._support} | {g.modulus for g in other._support}
        if len(moduli) > 1:
            raise GroupMismatch("crossed symbols from different group sessions")

    def __add__(self, other: CrossedSymbol) -> CrossedSymbol:
        self._check(other)
        out = dict(self._support)
        for g, a in other._support.items():
            out[g] = out[g] + a if g in out else a
        return CrossedSymbol(self._shape, out)

    def __neg__(self) -> CrossedSymbol:
        return CrossedSymbol(self._shape, {g: -a for g, a in self._support.items()})

    def __sub__(self, other: CrossedSymbol) -> CrossedSymbol:
        return self + (-other)

    def scale(self, factor: Coercible) -> CrossedSymbol:
        return CrossedSymbol(self._shape, {g: a.scale(factor) for g, a in self._support.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CrossedSymbol) or other._shape != self._shape:
            return False
        return all(a.is_zero() for a in (self - other)._support.values())

    __hash__ = None  # type: ignore[assignment]

    def render(self) -> str:
        if not self._support:
            return "0"
        return " + ".join(f"[{a.render()}]·U{g.render()}" for g, a in self.items())


def crossed_star(A: CrossedSymbol, B: CrossedSymbol) -> CrossedSymbol:
    """(a U_g)(b U_h) = (a ⋆ α_g(b)) U_{gh}"""
    A._check(B)
    out: Dict[IsometryElement, HSymbol] = {}
    for g, a in A._support.items():
        for h, b in B._support.items():
            gh = g * h
            term = star(a, g.act_on_symbol(b))
            out[gh] = out[gh] + term if gh in out else term
    return CrossedSymbol(A.shape, out)


def crossed_commutator(A: CrossedSymbol, B: CrossedSymbol) -> CrossedSymbol:
    return crossed_star(A, B) - crossed_star(B, A)


def localized_residue(A: CrossedSymbol) -> ExactScalar:
    """wres of the unit component; other group components are ignored"""
    for g, a in A.support.items():
        if g.is_identity():
            return wres(a)
    return ExactScalar.zero()
