"""Foliated torus isometries x ↦ Px + b and their pullback action on symbols.

P is a signed permutation matrix preserving the leaf block {1..v} and the
transverse block, b a rational translation mod ℤ^n. Points act on the right,
x·g = P x + b, and symbols pull back: α_g(a)(x, p) = a(Px + b, Pp). With the
product (P_g, b_g)·(P_h, b_h) = (P_h P_g, P_h b_g + b_h) this gives
α_{gh} = α_g ∘ α_h.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ..errors import GroupMismatch, ModulusMismatch, NonIsometricAction
from ..scalars.cyclotomic import DEFAULT_MODULUS
from ..scalars.exact import ExactScalar
from ..scalars.fourier import FourierFunction
from ..symbols.clifford import permute_word
from ..symbols.shape import FoliationShape
from ..symbols.symbol import HSymbol, TermKey
from ..symbols.terms import Monomial

logger = logging.getLogger(__name__)

Matrix = Tuple[Tuple[int, ...], ...]


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _mod1(values: Iterable) -> Tuple[Fraction, ...]:
    out = []
    for value in values:
        frac = Fraction(value)
        out.append(frac - (frac.numerator // frac.denominator))
    return tuple(out)


@dataclass(frozen=True)
class IsometryElement:
    shape: FoliationShape
    matrix: Matrix
    trans: Tuple[Fraction, ...]
    modulus: int = DEFAULT_MODULUS
    _rows: Tuple[Tuple[int, int], ...] = field(default=(), compare=False, repr=False)

    def __post_init__(self) -> None:
        n = self.shape.n
        if len(self.matrix) != n or any(len(row) != n for row in self.matrix):
            raise NonIsometricAction(f"matrix is not {n}x{n}")
        if len(self.trans) != n:
            raise NonIsometricAction(f"translation {self.trans} is not in (Q/Z)^{n}")
        rows = []
        columns = set()
        for j, row in enumerate(self.matrix):
            nonzero = [(i, c) for i, c in enumerate(row) if c]
            if len(nonzero) != 1 or nonzero[0][1] not in (1, -1):
                raise NonIsometricAction(f"row {j + 1} of P is not a signed unit vector")
            i, sign = nonzero[0]
            if self.shape.is_leaf(i) != self.shape.is_leaf(j):
                raise NonIsometricAction("P mixes leaf and transverse coordinates; ρ is not preserved")
            columns.add(i)
            rows.append((i, sign))
        if len(columns) != n:
            raise NonIsometricAction("P is singular")
        for b in self.trans:
            if self.modulus % Fraction(b).denominator:
                raise ModulusMismatch(
                    f"translation {b} needs roots of unity of order {Fraction(b).denominator}, "
                    f"session modulus is {self.modulus}")
        object.__setattr__(self, "trans", _mod1(self.trans))
        object.__setattr__(self, "_rows", tuple(rows))

    @classmethod
    def create(cls, shape: FoliationShape, matrix: Optional[Sequence[Sequence[int]]] = None,
               trans: Optional[Sequence] = None, modulus: Optional[int] = None) -> IsometryElement:
        """Build an element; the modulus defaults to lcm(8, translation denominators)"""
        n = shape.n
        if matrix is None:
            matrix = [[1 if i == j else 0 for i in range(n)] for j in range(n)]
        trans = tuple(Fraction(b) for b in (trans if trans is not None else [0] * n))
        if modulus is None:
            modulus = DEFAULT_MODULUS
            for b in trans:
                modulus = _lcm(modulus, b.denominator)
        return cls(shape, tuple(tuple(int(c) for c in row) for row in matrix), trans, modulus)

    @classmethod
    def identity(cls, shape: FoliationShape, modulus: int = DEFAULT_MODULUS) -> IsometryElement:
        return cls.create(shape, modulus=modulus)

    def is_identity(self) -> bool:
        return all(sign == 1 and i == j for j, (i, sign) in enumerate(self._rows)) and not any(
            self.trans)

    def _check(self, other: IsometryElement) -> None:
        if other.shape != self.shape or other.modulus != self.modulus:
            raise GroupMismatch("elements from different group sessions")

    def apply_matrix(self, vector: Sequence) -> Tuple:
        return tuple(sum(c * v for c, v in zip(row, vector)) for row in self.matrix)

    def __mul__(self, other: IsometryElement) -> IsometryElement:
        """(P_g, b_g)·(P_h, b_h) = (P_h P_g, P_h b_g + b_h)"""
        self._check(other)
        n = self.shape.n
        product = tuple(
            tuple(sum(other.matrix[r][k] * self.matrix[k][c] for k in range(n)) for c in range(n))
            for r in range(n))
        trans = tuple(a + b for a, b in zip(other.apply_matrix(self.trans), other.trans))
        return IsometryElement(self.shape, product, trans, self.modulus)

    def inverse(self) -> IsometryElement:
        """(P^T, −P^T b); P is orthogonal"""
        n = self.shape.n
        transposed = tuple(tuple(self.matrix[c][r] for c in range(n)) for r in range(n))
        back = tuple(sum(transposed[r][c] * self.trans[c] for c in range(n)) for r in range(n))
        return IsometryElement(self.shape, transposed, tuple(-b for b in back), self.modulus)

    def act_on_point(self, x: Sequence) -> Tuple[Fraction, ...]:
        return _mod1(a + b for a, b in zip(self.apply_matrix(x), self.trans))

    # pullback pieces

    def _pull_frequency(self, k: Sequence[int]) -> Tuple[Tuple[int, ...], Fraction]:
        """e^{2πik·(Px+b)} = e^{2πik·b} e^{2πi(P^T k)·x}"""
        n = self.shape.n
        new_k = tuple(sum(self.matrix[j][i] * k[j] for j in range(n)) for i in range(n))
        phase = sum((Fraction(kj) * bj for kj, bj in zip(k, self.trans)), Fraction(0))
        return new_k, phase

    def pull_function(self, f: FourierFunction) -> FourierFunction:
        out: Dict[Tuple[int, ...], ExactScalar] = {}
        for k, c in f.items():
            new_k, phase = self._pull_frequency(k)
            power = phase * self.modulus
            if power.denominator != 1:
                raise ModulusMismatch(f"phase {phase} is not an {self.modulus}-th root of unity")
            out[new_k] = c * ExactScalar.zeta(self.modulus, int(power))
        return FourierFunction(f.dim, out)

    def pull_monomial(self, mono: Monomial) -> Tuple[Monomial, int]:
        """(Pp)^γ = sign · p^{γ'}; ρ and log ρ are invariant"""
        gamma = [0] * self.shape.n
        sign = 1
        for j, g in enumerate(mono.gamma):
            i, s = self._rows[j]
            gamma[i] += g
            if s < 0 and g % 2:
                sign = -sign
        return Monomial(tuple(gamma), mono.rho_quarter, mono.log_pow), sign

    def act_on_symbol(self, a: HSymbol) -> HSymbol:
        self.shape.check(a.shape)
        if self.is_identity():
            return a
        perm = [i for i, _ in self._rows]
        signs = [s for _, s in self._rows]
        out: Dict[TermKey, FourierFunction] = {}
        for (mono, word), f in a.terms.items():
            new_mono, sign = self.pull_monomial(mono)
            g = self.pull_function(f)
            for new_word, c in permute_word(word, perm, signs).items():
                key = (new_mono, new_word)
                term = g.scale(sign * c)
                out[key] = out[key] + term if key in out else term
        return HSymbol(a.shape, out, a.top, a.floor)

    def render(self) -> str:
        rows = ";".join(",".join(str(c) for c in row) for row in self.matrix)
        return f"[{rows}]+({','.join(str(b) for b in self.trans)})"

    def __str__(self) -> str:
        return self.render()


def act_on_symbol(g: IsometryElement, a: HSymbol) -> HSymbol:
    return g.act_on_symbol(a)


def generate_group(generators: Sequence[IsometryElement], limit: int = 256) -> List[IsometryElement]:
    """All products of the generators, identity first, in breadth-first order"""
    if not generators:
        raise GroupMismatch("at least one generator is required")
    shape = generators[0].shape
    modulus = generators[0].modulus
    for g in generators:
        if g.shape != shape or g.modulus != modulus:
            raise GroupMismatch("generators from different group sessions")
    identity = IsometryElement.identity(shape, modulus)
    elements = [identity]
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in generators:
                y = x * g
                if y not in seen:
                    if len(elements) >= limit:
                        raise GroupMismatch(f"group has more than {limit} elements")
                    seen.add(y)
                    elements.append(y)
                    nxt.append(y)
        frontier = nxt
    logger.debug("generated group of order %d on shape %s", len(elements), shape)
    return elements
