"""The flat one-dimensional index pairing and its Toeplitz oracle.

On the shape (1,0) the cosphere is the two points p = ±1; a degree-0 symbol
restricts to a pair of trigonometric polynomials r_±(a).
"""
from __future__ import annotations

import logging
from fractions import Fraction
from typing import Dict, Optional, Tuple

import numpy as np

from ..errors import NonInvertibleSymbol, WrongShape
from ..scalars.exact import ExactScalar, numeric_eval
from ..scalars.fourier import FourierFunction
from ..symbols.builders import character, chi_plus, constant
from ..symbols.shape import FoliationShape
from ..symbols.symbol import HSymbol, pointwise
from .crossed import CrossedSymbol
from .radul import leading_lift, radul_cocycle

logger = logging.getLogger(__name__)

LINE = FoliationShape(1, 0)
SECTION_DECAY = 1e-10
MAX_SECTION = 2048
SMALL_SINGULAR = 1e-7
SINGULAR_GAP = 1e3


def _check_line(*symbols: HSymbol) -> None:
    for a in symbols:
        if a.shape != LINE:
            raise WrongShape(f"the flat pairing lives on shape (1,0), got {a.shape}")
        if not a.is_scalar_type():
            raise WrongShape("the flat pairing needs scalar-type symbols")
        a.check_classical()


def restrict_to_point(a: HSymbol, sign: int) -> FourierFunction:
    """r_σ(a): the degree-0 component evaluated at p = σ·1"""
    out = FourierFunction.zero(1)
    for (mono, _), f in a.terms.items():
        if mono.degree(a.shape) != 0:
            continue
        # canonical degree-0 monomials on (1,0): 1 and p·ρ^{−1/4}
        out = out + (f if mono.gamma[0] == 0 or sign > 0 else -f)
    return out


def boundary_integral(f: FourierFunction, g: FourierFunction) -> ExactScalar:
    """∫_{T¹} f dg = Σ_k 2πi·k·f_{−k}·g_k"""
    total = ExactScalar.zero()
    for k, gk in g.items():
        if k[0]:
            fk = f.coeff((-k[0],))
            if not fk.is_zero():
                total = total + fk * gk * k[0]
    return total * ExactScalar.i() * ExactScalar.pi(1) * 2


def fundamental_pairing_1d(a0: HSymbol, a1: HSymbol) -> ExactScalar:
    """(1/2π)·Σ_σ σ·∫ r_σ(a0) d r_σ(a1), each cosphere point with its boundary orientation"""
    _check_line(a0, a1)
    total = ExactScalar.zero()
    for sign in (1, -1):
        part = boundary_integral(restrict_to_point(a0, sign), restrict_to_point(a1, sign))
        total = total + part * sign
    return total * ExactScalar.pi(-1) * Fraction(1, 2)


def winding_symbol(w: int, floor: Optional[int] = None) -> HSymbol:
    """1 + (e^{2πiwx} − 1)χ₊: winding w on the p = +1 point, constant 1 on p = −1"""
    floor = -LINE.Q - 2 if floor is None else floor
    one = constant(LINE, 1, floor=floor)
    bump = character(LINE, (w,), 1, floor=floor) - one
    return one + pointwise(bump, chi_plus(LINE, 1, floor=floor)).with_floor(floor)


def winding_pair(w: int = 1, floor: Optional[int] = None) -> Tuple[HSymbol, HSymbol]:
    """(a0, a1) = (u_{−w}, u_w), a0 inverting a1 on the cosphere"""
    return winding_symbol(-w, floor), winding_symbol(w, floor)


def _numeric_coefficients(f: FourierFunction, digits: int = 20) -> Dict[int, complex]:
    return {k[0]: complex(numeric_eval(c, digits)) for k, c in f.items()}


def _symbol_roots(coeffs: Dict[int, complex]) -> Tuple[int, np.ndarray]:
    """(m, roots of z^m·f(z)) with m the order of the pole of f at 0"""
    low, high = min(coeffs), max(coeffs)
    m = max(-low, 0)
    poly = [coeffs.get(k, 0j) for k in range(high, min(low, 0) - 1, -1)]
    return m, np.roots(poly)


def _section_size(roots: np.ndarray, band: int, cutoff: int) -> int:
    """Smallest section on which kernel vectors decay below SECTION_DECAY"""
    size = max(cutoff + 1, 2 * band + 2)
    moduli = np.abs(roots)
    moduli = moduli[moduli > 0]
    if moduli.size:
        rate = float(np.max(np.minimum(moduli, 1.0 / moduli)))
        if rate > 0:
            size = max(size, int(np.ceil(np.log(SECTION_DECAY) / np.log(rate))) + 2 * band)
    if size > MAX_SECTION:
        logger.warning("toeplitz oracle: section of %d modes capped at %d", size, MAX_SECTION)
        size = MAX_SECTION
    return size


def _section_index(coeffs: Dict[int, complex], size: int) -> Tuple[int, int]:
    """(dim ker, dim coker) of T_f read off the square section on modes 0..size−1.

    Only |index| singular values of the section decay. Their right singular
    vectors sit on the low modes for ker T_f and on the high modes for coker T_f.
    """
    band = max(abs(k) for k in coeffs)
    matrix = np.zeros((size, size), dtype=complex)
    for col in range(size):
        for k, c in coeffs.items():
            row = col + k
            if 0 <= row < size:
                matrix[row, col] += c
    _, singular, vh = np.linalg.svd(matrix)
    ascending = singular[::-1]
    scale = singular[0] if singular[0] > 0 else 1.0
    small = 0
    for count in range(1, min(band, size - 1) + 1):
        if (ascending[count - 1] < SMALL_SINGULAR * scale
                and ascending[count] > SINGULAR_GAP * ascending[count - 1]):
            small = count
    kernel = cokernel = 0
    half = size // 2
    for row in vh[size - small:]:
        weights = np.abs(row) ** 2
        if weights[:half].sum() >= weights[half:].sum():
            kernel += 1
        else:
            cokernel += 1
    return kernel, cokernel


def toeplitz_index_oracle_1d(a1: HSymbol, cutoff: int = 40) -> int:
    """Index of T_{r₊(a1)} as dim ker − dim coker of a square finite section"""
    _check_line(a1)
    f = restrict_to_point(a1, 1)
    coeffs = _numeric_coefficients(f)
    if not coeffs:
        raise NonInvertibleSymbol("symbol vanishes on the p = +1 component")
    grid = np.linspace(0.0, 1.0, 512, endpoint=False)
    values = sum(c * np.exp(2j * np.pi * k * grid) for k, c in coeffs.items())
    if np.min(np.abs(values)) < 1e-6 * max(abs(c) for c in coeffs.values()):
        raise NonInvertibleSymbol(f"r₊ symbol {f.render()} vanishes on the circle")
    band = max(abs(k) for k in coeffs)
    m, roots = _symbol_roots(coeffs)
    size = _section_size(roots, band, cutoff)
    kernel, cokernel = _section_index(coeffs, size)
    # ind T_f = −wind f = m − #zeros of z^m·f inside the disc
    zero_count = m - int(np.sum(np.abs(roots) < 1.0))
    if kernel - cokernel != zero_count:
        logger.warning("toeplitz oracle: section gives %d, zero count gives %d",
                       kernel - cokernel, zero_count)
    logger.debug("toeplitz oracle: ker %d, coker %d on %d modes", kernel, cokernel, size)
    return kernel - cokernel


def determine_kappa(floor: Optional[int] = None) -> ExactScalar:
    """κ with φ = κ·fundamental_pairing_1d, read off the winding-one pair"""
    a0, a1 = winding_pair(1, floor)
    phi = radul_cocycle(CrossedSymbol.untwisted(leading_lift(a0, floor)),
                        CrossedSymbol.untwisted(leading_lift(a1, floor)))
    return phi / fundamental_pairing_1d(a0, a1)
