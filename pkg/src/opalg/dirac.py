"""Dirac-type operators on the flat foliated torus and their squares.

Two descriptor kinds:

* ``deRham``: iεψ^i_R∂_{x_i} + ε p_{iL}ψ^i_R + ψ̄_{iR}(∂_{p_i} + Σ_α r^i_{αL}∂_p^α);
* ``affine``: iεψ^i_R(∇_i + s_{iL}) + ψ̄_{iR}(∂_{p_i} + Σ_α r^i_{αL}∂_p^α), with
  ∇_i = ∂_{x_i} + Γ^k_{ij}(p_{kL}∂_{p_j} + (ψ̄_kψ^j)_L − (ψ̄_kψ^j)_R).

Indices are 0-based. The ε² part of −D² for the affine kind is
½(ψ^iψ^j)_R R^k_{lij}(p_k∂_{p_l} + …), R the curvature of Γ.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from ..errors import DescriptorInvalid
from ..scalars.exact import ExactScalar
from ..scalars.fourier import FourierFunction
from ..symbols.clifford import PSI, PSIBAR, CliffordWord, word_from_letters
from ..symbols.shape import FoliationShape
from ..symbols.symbol import HSymbol
from .series import OpKey, OpSeries, left_constant, left_function, left_momentum, op_compose

logger = logging.getLogger(__name__)

KINDS = ("deRham", "affine")

Corrections = Mapping[Tuple[int, Tuple[int, ...]], FourierFunction]
Christoffel = Sequence[Sequence[Sequence[FourierFunction]]]  # [k][i][j]
Curvature = List[List[List[List[FourierFunction]]]]  # [k][l][i][j]


@dataclass(frozen=True)
class DiracDescriptor:
    shape: FoliationShape
    kind: str = "deRham"
    corrections: Corrections = field(default_factory=dict)
    christoffel: Optional[Christoffel] = None
    shift: Optional[Sequence[FourierFunction]] = None

    def __post_init__(self) -> None:
        shape = self.shape
        n = shape.n
        if self.kind not in KINDS:
            raise DescriptorInvalid(f"unknown Dirac kind {self.kind!r}; expected one of {KINDS}")
        for (i, alpha), f in self.corrections.items():
            if not 0 <= i < n or len(alpha) != n or any(a < 0 for a in alpha):
                raise DescriptorInvalid(f"correction index ({i}, {alpha}) does not fit {shape}")
            if sum(alpha) < 2:
                raise DescriptorInvalid(f"correction r^{i + 1}_{alpha} needs |α| ≥ 2")
            if not shape.is_leaf(i) and shape.norm3(alpha) < 3:
                raise DescriptorInvalid(
                    f"transverse correction r^{i + 1}_{alpha} needs ‖α‖ ≥ 3")
            _check_function(f, n, "correction")
        if self.kind == "deRham":
            if self.christoffel is not None or self.shift is not None:
                raise DescriptorInvalid("a deRham descriptor takes no connection data")
            return
        if self.christoffel is None:
            raise DescriptorInvalid("an affine descriptor needs Christoffel symbols")
        gamma = self.christoffel
        if len(gamma) != n or any(len(row) != n or any(len(col) != n for col in row)
                                  for row in gamma):
            raise DescriptorInvalid(f"Christoffel symbols must be {n}x{n}x{n}")
        for k in range(n):
            for i in range(n):
                for j in range(n):
                    f = gamma[k][i][j]
                    _check_function(f, n, "Christoffel symbol")
                    if f != gamma[k][j][i]:
                        raise DescriptorInvalid(
                            f"Γ^{k + 1}_{{{i + 1}{j + 1}}} is not symmetric in its lower indices")
                    if (not f.is_zero() and not shape.is_leaf(k)
                            and (shape.is_leaf(i) or shape.is_leaf(j))):
                        raise DescriptorInvalid(
                            f"Γ^{k + 1}_{{{i + 1}{j + 1}}} moves a leaf direction transversally")
        if self.shift is not None:
            if len(self.shift) != n:
                raise DescriptorInvalid(f"shift needs {n} components")
            for f in self.shift:
                _check_function(f, n, "shift")

    def christoffel_at(self, k: int, i: int, j: int) -> FourierFunction:
        if self.christoffel is None:
            return FourierFunction.zero(self.shape.n)
        return self.christoffel[k][i][j]


def _check_function(f: FourierFunction, n: int, what: str) -> None:
    if not isinstance(f, FourierFunction) or f.dim != n:
        raise DescriptorInvalid(f"{what} must be a Fourier function on T^{n}")


def _word(*letters) -> Dict[CliffordWord, int]:
    return word_from_letters(list(letters))


def _psi(i: int) -> CliffordWord:
    return CliffordWord((i,), ())


def _psibar(i: int) -> CliffordWord:
    return CliffordWord((), (i,))


def _right_words(shape: FoliationShape, words: Mapping[CliffordWord, int],
                 coeff: FourierFunction) -> OpSeries:
    out = OpSeries.zero(shape)
    for word, c in words.items():
        out = out + OpSeries.single(left_function(shape, coeff.scale(c)), word)
    return out


def _left_words(shape: FoliationShape, words: Mapping[CliffordWord, int],
                coeff: FourierFunction) -> OpSeries:
    total = HSymbol.zero(shape, 0, OpSeries.zero(shape).symbol_floor)
    for word, c in words.items():
        total = total + left_function(shape, coeff.scale(c), word)
    return OpSeries.single(total)


def covariant_derivative(desc: DiracDescriptor, i: int) -> OpSeries:
    """∇_i + s_i on the affine kind"""
    shape = desc.shape
    n = shape.n
    out = OpSeries.derivative(shape, dx=shape.unit(i))
    for k in range(n):
        for j in range(n):
            g = desc.christoffel_at(k, i, j)
            if g.is_zero():
                continue
            out = out + OpSeries.single(left_momentum(shape, k, g), dp=shape.unit(j))
            c = _word((PSIBAR, k), (PSI, j))
            out = out + _left_words(shape, c, g) - _right_words(shape, c, g)
    if desc.shift is not None and not desc.shift[i].is_zero():
        out = out + OpSeries.single(left_function(shape, desc.shift[i]))
    return out


def dirac_operator(desc: DiracDescriptor) -> OpSeries:
    shape = desc.shape
    i_unit = ExactScalar.i()
    out = OpSeries.zero(shape)
    for i in range(shape.n):
        unit = shape.unit(i)
        out = out + OpSeries.single(left_constant(shape), _psibar(i), dp=unit)
        if desc.kind == "deRham":
            out = out + OpSeries.single(left_constant(shape, i_unit), _psi(i), dx=unit, eps=1)
            out = out + OpSeries.single(left_momentum(shape, i), _psi(i), eps=1)
        else:
            out = out + op_compose(OpSeries.right(shape, _psi(i), i_unit, eps=1),
                                   covariant_derivative(desc, i))
    for (i, alpha), f in desc.corrections.items():
        out = out + OpSeries.single(left_function(shape, f), _psibar(i), dp=alpha)
    logger.debug("dirac_operator %s on %s: %d terms", desc.kind, shape, len(out.terms()))
    return out


def dirac_square(desc: DiracDescriptor) -> OpSeries:
    """−D²; a generalized Laplacian for every valid descriptor"""
    d = dirac_operator(desc)
    return -op_compose(d, d)


def curvature_tensor(desc: DiracDescriptor) -> Curvature:
    """R^k_{lij} = ∂_iΓ^k_{jl} − ∂_jΓ^k_{il} + Γ^k_{im}Γ^m_{jl} − Γ^k_{jm}Γ^m_{il}"""
    n = desc.shape.n
    g = desc.christoffel_at
    out: Curvature = []
    for k in range(n):
        block = []
        for l in range(n):  # noqa: E741
            rows = []
            for i in range(n):
                row = []
                for j in range(n):
                    value = g(k, j, l).deriv(i) - g(k, i, l).deriv(j)
                    for m in range(n):
                        value = value + g(k, i, m) * g(m, j, l) - g(k, j, m) * g(m, i, l)
                    row.append(value)
                rows.append(row)
            block.append(rows)
        out.append(block)
    return out


def lichnerowicz_coefficient(square: OpSeries, k: int, l: int, i: int,  # noqa: E741
                             j: int) -> FourierFunction:
    """Coefficient of ε²(ψ^iψ^j)_R p_k ∂_{p_l} in −D², antisymmetrized in (i, j)"""
    shape = square.shape
    if i == j:
        return FourierFunction.zero(shape.n)
    a, b = sorted((i, j))
    sign = 1 if i < j else -1
    key = OpKey(CliffordWord((a, b), ()), shape.zero_index(), shape.unit(l), 2)
    sym = square.coefficient(key)
    target = next(iter(left_momentum(shape, k).terms))
    f = sym.terms.get(target, FourierFunction.zero(shape.n))
    return f.scale(sign)
