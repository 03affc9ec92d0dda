from .cyclotomic import CyclotomicNumber
from .exact import ExactScalar, numeric_eval, scalar_arith
from .fourier import FourierFunction, fourier_arith, torus_integral
from .series import EpsSeries

__all__ = [
    "CyclotomicNumber",
    "ExactScalar",
    "EpsSeries",
    "FourierFunction",
    "fourier_arith",
    "numeric_eval",
    "scalar_arith",
    "torus_integral",
]
