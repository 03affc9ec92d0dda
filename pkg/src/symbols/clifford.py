"""Clifford words in ψ^i, ψ̄_i acting on the exterior fiber Λ•(ℂ^n).

ψ^i is exterior multiplication by e^i, ψ̄_i the contraction with e_i, so
[ψ^i, ψ̄_j]_+ = δ_ij and ψ, ψ̄ anticommute among themselves.
Indices are 0-based internally.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Dict, Iterator, Optional, Sequence, Tuple

import numpy as np

from ..scalars.exact import ExactScalar

PSI = 0
PSIBAR = 1

Letter = Tuple[int, int]  # (kind, index)


@dataclass(frozen=True, order=True)
class CliffordWord:
    """Normal-ordered word ψ^{i_1}…ψ^{i_r} ψ̄_{j_1}…ψ̄_{j_s}, indices increasing"""

    psi: Tuple[int, ...] = ()
    psibar: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        for seq in (self.psi, self.psibar):
            if any(a >= b for a, b in zip(seq, seq[1:])):
                raise ValueError(f"word indices must be strictly increasing: {seq}")

    @classmethod
    def identity(cls) -> CliffordWord:
        return cls()

    @classmethod
    def top(cls, n: int) -> CliffordWord:
        """ψ^1…ψ^n ψ̄_1…ψ̄_n"""
        return cls(tuple(range(n)), tuple(range(n)))

    @property
    def degree(self) -> int:
        return len(self.psi) + len(self.psibar)

    @property
    def parity(self) -> int:
        return self.degree % 2

    def is_identity(self) -> bool:
        return not self.psi and not self.psibar

    def is_balanced(self) -> bool:
        return self.psi == self.psibar

    def letters(self) -> Tuple[Letter, ...]:
        return tuple((PSI, i) for i in self.psi) + tuple((PSIBAR, j) for j in self.psibar)

    def max_index(self) -> int:
        return max(self.psi + self.psibar, default=-1)

    def render(self) -> str:
        if self.is_identity():
            return "1"
        parts = [f"psi^{i + 1}" for i in self.psi]
        parts += [f"psibar_{j + 1}" for j in self.psibar]
        return "".join(parts)

    def __str__(self) -> str:
        return self.render()


@lru_cache(maxsize=65536)
def normal_order(letters: Tuple[Letter, ...]) -> Tuple[Tuple[CliffordWord, int], ...]:
    """Rewrite a product of generators into a signed sum of normal words"""
    for pos in range(len(letters) - 1):
        x, y = letters[pos], letters[pos + 1]
        if x == y:
            return ()
        if x < y:
            continue
        head, tail = letters[:pos], letters[pos + 2:]
        result: Dict[CliffordWord, int] = {}
        swapped = normal_order(head + (y, x) + tail)
        for word, c in swapped:
            result[word] = result.get(word, 0) - c
        if x[0] == PSIBAR and y[0] == PSI and x[1] == y[1]:
            for word, c in normal_order(head + tail):
                result[word] = result.get(word, 0) + c
        return tuple(sorted((w, c) for w, c in result.items() if c))
    psi = tuple(i for kind, i in letters if kind == PSI)
    psibar = tuple(i for kind, i in letters if kind == PSIBAR)
    return ((CliffordWord(psi, psibar), 1),)


def clifford_mul(u: CliffordWord, w: CliffordWord) -> Dict[CliffordWord, int]:
    """u·w as a signed sum of normal-ordered words"""
    if u.is_identity():
        return {w: 1}
    if w.is_identity():
        return {u: 1}
    return dict(normal_order(u.letters() + w.letters()))


def word_from_letters(letters: Sequence[Letter]) -> Dict[CliffordWord, int]:
    return dict(normal_order(tuple(letters)))


def apply_word(word: CliffordWord, basis: int) -> Optional[Tuple[int, int]]:
    """Act on the basis vector e_S (S a bitmask); returns (sign, S') or None for zero"""
    sign = 1
    state = basis
    for kind, i in reversed(word.letters()):
        bit = 1 << i
        below = bin(state & (bit - 1)).count("1")
        if kind == PSI:
            if state & bit:
                return None
            state |= bit
        else:
            if not state & bit:
                return None
            state &= ~bit
        if below % 2:
            sign = -sign
    return sign, state


def fiber_matrix(word: CliffordWord, n: int) -> np.ndarray:
    """Integer matrix of the word on the 2^n-dimensional exterior fiber"""
    dim = 1 << n
    out = np.zeros((dim, dim), dtype=np.int64)
    for col in range(dim):
        image = apply_word(word, col)
        if image is not None:
            sign, row = image
            out[row, col] += sign
    return out


@lru_cache(maxsize=4096)
def _traces(word: CliffordWord, n: int) -> Tuple[int, int]:
    tr = 0
    graded = 0
    if word.is_balanced():
        for basis in range(1 << n):
            image = apply_word(word, basis)
            if image is not None and image[1] == basis:
                tr += image[0]
                graded += image[0] * (-1) ** bin(basis).count("1")
    graded *= (-1) ** (n * (n - 1) // 2)
    return tr, graded


def clifford_traces(word: CliffordWord, n: int) -> Tuple[ExactScalar, ExactScalar]:
    """(tr, str): ungraded trace on Λ•ℂ^n and the graded trace normalized so
    that (−1)^n·str(ψ^1…ψ^n ψ̄_1…ψ̄_n) = 1"""
    if word.max_index() >= n:
        raise ValueError(f"word {word.render()} does not act on a rank-{n} fiber")
    tr, graded = _traces(word, n)
    return ExactScalar.from_rational(tr), ExactScalar.from_rational(graded)


def normalized_trace(word: CliffordWord, n: int) -> ExactScalar:
    """τ = tr / 2^n, the fiber trace used by the residue"""
    tr, _ = clifford_traces(word, n)
    return tr * Fraction(1, 1 << n)


def right_contraction(word: CliffordWord, n: int) -> ExactScalar:
    """⟨w_R⟩ = (−1)^n·str(w)"""
    _, graded = clifford_traces(word, n)
    return graded * (-1) ** n


def all_words(n: int) -> Iterator[CliffordWord]:
    for r in range(n + 1):
        for psi in combinations(range(n), r):
            for s in range(n + 1):
                for psibar in combinations(range(n), s):
                    yield CliffordWord(psi, psibar)


def permute_word(word: CliffordWord, perm: Sequence[int],
                 signs: Sequence[int]) -> Dict[CliffordWord, int]:
    """Image under ψ^i ↦ s_i ψ^{perm(i)}, ψ̄_i ↦ s_i ψ̄_{perm(i)}"""
    sign = 1
    letters = []
    for kind, i in word.letters():
        sign *= signs[i]
        letters.append((kind, perm[i]))
    return {w: sign * c for w, c in normal_order(tuple(letters))}
