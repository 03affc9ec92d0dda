from .bracket import Contraction, SymbolSeries, bracket, double_bracket
from .dirac import (
    DiracDescriptor,
    curvature_tensor,
    dirac_operator,
    dirac_square,
    lichnerowicz_coefficient,
)
from .duhamel import (
    duhamel_exp,
    duhamel_first_form,
    exp_factorization_defect,
    op_exp_series,
    simplex_integral,
)
from .flow import FlowPolynomial, sigma_conj
from .laplacian import GeneralizedLaplacian, flat_laplacian, is_generalized_laplacian
from .mehler import mehler_bracket, mehler_perturbation, mehler_vanishing
from .series import OpKey, OpSeries, OpTerm, apply_op, graded_commutator, op_compose
from .todd import eps_matrix, todd_series
from .trace import TraceClassElement, tr_s, tr_s_localized, trace_commutator

__all__ = [
    "Contraction",
    "DiracDescriptor",
    "FlowPolynomial",
    "GeneralizedLaplacian",
    "OpKey",
    "OpSeries",
    "OpTerm",
    "SymbolSeries",
    "TraceClassElement",
    "apply_op",
    "bracket",
    "curvature_tensor",
    "dirac_operator",
    "dirac_square",
    "double_bracket",
    "duhamel_exp",
    "duhamel_first_form",
    "eps_matrix",
    "exp_factorization_defect",
    "flat_laplacian",
    "graded_commutator",
    "is_generalized_laplacian",
    "lichnerowicz_coefficient",
    "mehler_bracket",
    "mehler_perturbation",
    "mehler_vanishing",
    "op_compose",
    "op_exp_series",
    "sigma_conj",
    "simplex_integral",
    "todd_series",
    "tr_s",
    "tr_s_localized",
    "trace_commutator",
]
