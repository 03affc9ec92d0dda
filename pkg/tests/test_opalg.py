from fractions import Fraction

import pytest

from src.crossed.isometry import IsometryElement
from src.errors import DescriptorInvalid, NotInFiltration, TruncationTooShallow
from src.opalg.bracket import bracket, double_bracket
from src.opalg.dirac import (
    DiracDescriptor,
    curvature_tensor,
    dirac_square,
    lichnerowicz_coefficient,
)
from src.opalg.duhamel import (
    duhamel_exp,
    duhamel_first_form,
    exp_factorization_defect,
    op_exp_series,
    simplex_integral,
)
from src.opalg.flow import sigma_conj
from src.opalg.laplacian import (
    GeneralizedLaplacian,
    flat_laplacian,
    flat_laplacian_series,
    is_generalized_laplacian,
)
from src.opalg.mehler import mehler_bracket, mehler_vanishing
from src.opalg.series import (
    OpSeries,
    graded_commutator,
    left_constant,
    left_function,
    left_momentum,
    op_compose,
)
from src.opalg.todd import check_curvature_matrix, eps_matrix, todd_series
from src.opalg.trace import TraceClassElement, tr_s, tr_s_localized, trace_commutator
from src.residue.wres import wres
from src.scalars.exact import ExactScalar
from src.scalars.fourier import FourierFunction
from src.scalars.series import EpsSeries
from src.symbols.builders import rho_power
from src.symbols.clifford import CliffordWord
from src.symbols.logcomm import log_commutator
from src.symbols.symbol import star
from src.utils.generators import (
    random_descriptor,
    random_operator,
    random_perturbation,
    random_symbol,
    random_word,
)

TODD_ONE = EpsSeries([1, Fraction(-1, 2), Fraction(1, 12), 0, Fraction(-1, 720)], 4)


def test_heat_kernel_bracket():
    c = bracket((1, 0), (1, 0))
    assert c.coeff == ExactScalar.i()
    assert c.eps == -1
    assert bracket((2,), (2,)).coeff == -2
    assert bracket((1,), (0,)).is_zero()
    with pytest.raises(ValueError):
        bracket((1,), (1, 0))


def test_simplex_integral():
    assert simplex_integral((0,)) == 1
    assert simplex_integral((1, 0)) == Fraction(1, 2)
    assert simplex_integral((1, 1)) == Fraction(1, 6)
    with pytest.raises(ValueError):
        simplex_integral(())


def test_compose_moves_derivatives_right(line):
    e = left_function(line, FourierFunction.character((1,)))
    d = OpSeries.derivative(line, dx=(1,))
    expected = OpSeries.single(e.dx(0)) + OpSeries.single(e, dx=(1,))
    assert op_compose(d, OpSeries.single(e)) == expected
    assert op_compose(OpSeries.identity(line), expected) == expected


def test_compose_right_words_graded_commute(line):
    psi = CliffordWord((0,), ())
    left = OpSeries.single(left_constant(line, 1, word=psi))
    right = OpSeries.right(line, psi)
    assert op_compose(right, left) == OpSeries.single(left_constant(line, 1, word=psi),
                                                      psi).scale(-1)
    with pytest.raises(ValueError):
        graded_commutator(OpSeries.identity(line) + right, left)


def test_filtration(line):
    delta = flat_laplacian_series(line)
    assert delta.filtration_order() == Fraction(1, 2)
    assert OpSeries.zero(line).filtration_order() is None
    assert OpSeries.identity(line).in_filtration(0)
    with pytest.raises(NotInFiltration):
        OpSeries.identity(line).check_filtration(0, 1)


def test_composition_respects_filtration(plane, rng):
    s, t = random_operator(rng, plane), random_operator(rng, plane)
    st = op_compose(s, t)
    if not st.is_zero():
        assert st.filtration_order() <= s.filtration_order() + t.filtration_order()


def test_generalized_laplacians(line, plane):
    assert is_generalized_laplacian(flat_laplacian_series(line))
    assert is_generalized_laplacian(flat_laplacian_series(plane))
    assert not is_generalized_laplacian(OpSeries.identity(line))
    with pytest.raises(NotInFiltration):
        GeneralizedLaplacian(OpSeries.identity(line))


def test_heat_flow_of_momentum(line):
    delta = flat_laplacian(line)
    p = OpSeries.single(left_momentum(line, 0))
    flow = sigma_conj(delta, p)
    shifted = OpSeries.derivative(line, dx=(1,), coeff=ExactScalar.i(), eps=1)
    assert flow.degree == 1
    assert flow[1] == shifted
    assert flow.at(1) == p + shifted
    assert sigma_conj(delta, OpSeries.identity(line)).degree == 0


def test_duhamel_forms_agree(plane, rng):
    s = random_perturbation(rng, plane)
    delta = flat_laplacian(plane)
    assert duhamel_exp(delta, s, 2) == duhamel_first_form(delta, s, 2)


def test_exp_factorization(line, rng):
    s = random_perturbation(rng, line)
    assert exp_factorization_defect(flat_laplacian(line), s, 3).is_zero()


def test_duhamel_rejects_bad_perturbations(line):
    delta = flat_laplacian(line)
    assert duhamel_exp(delta, OpSeries.zero(line), 2) == OpSeries.identity(line)
    with pytest.raises(NotInFiltration):
        duhamel_exp(delta, OpSeries.identity(line), 2)
    with pytest.raises(ValueError):
        duhamel_exp(delta, OpSeries.zero(line), -1)
    with pytest.raises(NotInFiltration):
        op_exp_series(OpSeries.identity(line), 2)


def test_todd_series():
    assert todd_series(eps_matrix([[1]], 4), 4) == TODD_ONE
    # Td is multiplicative over diagonal blocks
    diagonal = eps_matrix([[1, 0], [0, 1]], 4)
    assert todd_series(diagonal, 4) == TODD_ONE * TODD_ONE
    with pytest.raises(ValueError):
        check_curvature_matrix([[EpsSeries.one(3)]])
    with pytest.raises(ValueError):
        check_curvature_matrix([])


def test_mehler_bracket_is_todd():
    R = eps_matrix([[1]], 4)
    assert mehler_bracket(R, 4) == TODD_ONE
    R2 = eps_matrix([[1, 2], [Fraction(-1, 2), 0]], 4)
    assert mehler_bracket(R2, 4) == todd_series(R2, 4)


def test_mehler_vanishing():
    R = eps_matrix([[1]], 3)
    assert mehler_vanishing((1,), R, 3) == EpsSeries.zero(3)
    with pytest.raises(ValueError):
        mehler_vanishing((1, 0), R, 3)


def test_double_bracket_of_heat(line):
    heat = TraceClassElement.heat(line, contracted_order=0)
    assert double_bracket(heat, graded=False).scalar_series() == EpsSeries.one(0)
    assert double_bracket(heat).is_zero()


def test_supertrace_of_top_word(line):
    a = rho_power(line, -1, floor=-3)
    t = TraceClassElement(OpSeries.single(a, CliffordWord.top(1), eps=1, contracted_order=1))
    assert tr_s(t) == ExactScalar.pi(-1)
    half = IsometryElement.create(line, trans=[Fraction(1, 2)])
    assert tr_s_localized({half: t}) == 0
    assert tr_s_localized({IsometryElement.identity(line): t}) == ExactScalar.pi(-1)


def test_supertrace_needs_deep_truncation(plane):
    with pytest.raises(TruncationTooShallow):
        tr_s(TraceClassElement.heat(plane, contracted_order=1))


def test_supertrace_vanishes_on_commutators(line, rng):
    d = op_compose(random_operator(rng, line), OpSeries.right(line, random_word(rng, line)))
    a = random_symbol(rng, line, 0, line.Q + 2, components=2)
    t = TraceClassElement(OpSeries.single(a, random_word(rng, line), eps=1,
                                          contracted_order=3))
    assert tr_s(trace_commutator(d, t)) == 0


def test_dirac_squares_are_generalized_laplacians(line, plane, rng):
    assert is_generalized_laplacian(dirac_square(DiracDescriptor(line)))
    assert is_generalized_laplacian(dirac_square(random_descriptor(rng, plane, "deRham")))
    assert is_generalized_laplacian(dirac_square(random_descriptor(rng, plane, "affine")))


def test_lichnerowicz_curvature_term(plane, rng):
    desc = random_descriptor(rng, plane, "affine")
    square = dirac_square(desc)
    curvature = curvature_tensor(desc)
    for k in range(2):
        for l in range(2):  # noqa: E741
            assert lichnerowicz_coefficient(square, k, l, 0, 1) == curvature[k][l][0][1]
            assert lichnerowicz_coefficient(square, k, l, 1, 0) == curvature[k][l][0][1].scale(-1)
            assert lichnerowicz_coefficient(square, k, l, 0, 0).is_zero()


def test_invalid_descriptors(line, plane):
    f = FourierFunction.constant(1, 1)
    zero = FourierFunction.zero(1)
    with pytest.raises(DescriptorInvalid):
        DiracDescriptor(line, "spin")
    with pytest.raises(DescriptorInvalid):
        DiracDescriptor(line, corrections={(0, (1,)): f})
    with pytest.raises(DescriptorInvalid):
        DiracDescriptor(line, "deRham", christoffel=[[[zero]]])
    with pytest.raises(DescriptorInvalid):
        DiracDescriptor(line, "affine")
    with pytest.raises(DescriptorInvalid):
        DiracDescriptor(plane, corrections={(1, (2, 0)): FourierFunction.constant(2, 1)})


@pytest.mark.integration
def test_supertrace_reduces_to_residue(line, rng):
    sigma0 = random_symbol(rng, line, 0, line.Q + 2, components=2)
    sigma1 = random_symbol(rng, line, 0, line.Q + 2, components=2)
    a = star(sigma0, log_commutator(sigma1))
    s = OpSeries.single(left_momentum(line, 0), dp=(1,), eps=1)
    prefactor = op_compose(OpSeries.single(a, CliffordWord.top(1), eps=1, contracted_order=1),
                           duhamel_exp(flat_laplacian(line), s, 1))
    assert tr_s(TraceClassElement(prefactor)) == wres(a)
