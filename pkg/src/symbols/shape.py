from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Tuple

from ..errors import ShapeMismatch


@dataclass(frozen=True)
class FoliationShape:
    """Torus T^n foliated by its first v coordinates (leaves), h transverse ones"""

    v: int
    h: int = 0

    def __post_init__(self) -> None:
        if self.v < 1 or self.h < 0:
            raise ShapeMismatch(f"invalid foliation shape ({self.v},{self.h})")

    @classmethod
    def parse(cls, text: str) -> FoliationShape:
        """Parse the CLI form "v,h" """
        try:
            v, h = (int(part) for part in text.split(","))
        except ValueError:
            raise ShapeMismatch(f"shape must read 'v,h', got {text!r}")
        return cls(v, h)

    @property
    def n(self) -> int:
        return self.v + self.h

    @property
    def Q(self) -> int:
        """Homogeneous dimension v + 2h"""
        return self.v + 2 * self.h

    @property
    def weights(self) -> Tuple[int, ...]:
        return (1,) * self.v + (2,) * self.h

    @property
    def rho_exponents(self) -> Tuple[int, ...]:
        """Power of p_i inside ρ: 4 along leaves, 2 transversally"""
        return (4,) * self.v + (2,) * self.h

    def is_leaf(self, axis: int) -> bool:
        return axis < self.v

    def weight(self, gamma: Sequence[int]) -> int:
        """Heisenberg weight ⟨γ⟩"""
        return sum(w * g for w, g in zip(self.weights, gamma))

    def norm3(self, beta: Sequence[int]) -> int:
        """‖β‖: one per leaf derivative, three per transverse derivative"""
        return sum(b if i < self.v else 3 * b for i, b in enumerate(beta))

    def zero_index(self) -> Tuple[int, ...]:
        return (0,) * self.n

    def unit(self, axis: int) -> Tuple[int, ...]:
        return tuple(1 if i == axis else 0 for i in range(self.n))

    def check(self, other: FoliationShape) -> None:
        if other != self:
            raise ShapeMismatch(f"shapes differ: {self} vs {other}")

    def __str__(self) -> str:
        return f"({self.v},{self.h})"
