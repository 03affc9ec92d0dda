"""Property checks for the operator bimodule, heat expansions and the supertrace."""
import logging
from fractions import Fraction

from ..opalg.dirac import KINDS, curvature_tensor, dirac_square, lichnerowicz_coefficient
from ..opalg.duhamel import duhamel_exp, duhamel_first_form, exp_factorization_defect
from ..opalg.flow import sigma_conj
from ..opalg.laplacian import flat_laplacian, is_generalized_laplacian
from ..opalg.mehler import mehler_bracket, mehler_vanishing
from ..opalg.series import OpSeries, left_momentum, op_compose
from ..opalg.todd import eps_matrix, todd_series
from ..opalg.trace import TraceClassElement, tr_s, trace_commutator
from ..residue.wres import wres
from ..scalars.series import EpsSeries
from ..symbols.clifford import CliffordWord
from ..symbols.logcomm import log_commutator
from ..symbols.symbol import star
from ..utils.generators import (
    SHAPES,
    random_descriptor,
    random_matrix,
    random_operator,
    random_perturbation,
    random_symbol,
    random_word,
)
from .common import PropertySuite, integers

logger = logging.getLogger(__name__)

OPERATOR_SHAPES = SHAPES[:2]
MEHLER_ORDER = 6


class OpalgSuite(PropertySuite):
    name = "opalg"

    SHAPES = {
        "filtration": OPERATOR_SHAPES,
        "flow_algebra": OPERATOR_SHAPES,
        "graded_trace": OPERATOR_SHAPES,
        "duhamel": OPERATOR_SHAPES,
        "dirac": OPERATOR_SHAPES,
        "lichnerowicz": SHAPES[1:2],
        "reduction": OPERATOR_SHAPES,
    }

    def __init__(self, config):
        super().__init__(config)
        self.eps_order = config.get("eps_order", 4)

    # bimodule

    def check_filtration(self, rng, shape, index):
        s = random_operator(rng, shape, words=bool(index % 2))
        t = random_operator(rng, shape, words=bool(index % 2))
        st = op_compose(s, t)
        if s.is_zero() or t.is_zero() or st.is_zero():
            return self.compare(True, True, "composition vanished")
        bound = s.filtration_order() + t.filtration_order()
        return self.all_of(
            self.compare(st.filtration_order() <= bound, True,
                         f"order {st.filtration_order()} within {bound}"),
            self.compare(st.min_eps() >= s.min_eps() + t.min_eps(), True,
                         "lowest eps-power is additive"),
        )

    def check_flow_algebra(self, rng, shape, index):
        s = random_operator(rng, shape).restrict(3)
        t = random_operator(rng, shape).restrict(3)
        delta = flat_laplacian(shape)
        lhs = sigma_conj(delta, op_compose(s, t))
        rhs_s, rhs_t = sigma_conj(delta, s), sigma_conj(delta, t)
        return self.all_of(*(
            self.compare(lhs.at(u), op_compose(rhs_s.at(u), rhs_t.at(u)),
                         f"sigma^{u}(st) = sigma^{u}(s) sigma^{u}(t)")
            for u in (1, -1, Fraction(1, 2))
        ))

    def check_graded_trace(self, rng, shape, index):
        n = shape.n
        d = op_compose(random_operator(rng, shape),
                       OpSeries.right(shape, random_word(rng, shape)))
        a = random_symbol(rng, shape, 0, shape.Q + 2, components=2)
        t = TraceClassElement(OpSeries.single(a, random_word(rng, shape),
                                              eps=integers(rng, 0, n),
                                              contracted_order=n + 2))
        return self.compare(tr_s(trace_commutator(d, t)), 0, "Tr_s[d, t] = 0")

    # heat expansions

    def check_mehler(self, rng, shape, index):
        size = 1 + index % 3
        R = eps_matrix(random_matrix(rng, size), MEHLER_ORDER)
        return self.compare(mehler_bracket(R, MEHLER_ORDER), todd_series(R, MEHLER_ORDER),
                            f"<<exp(Delta + pRd_p)>> = Td(R) for a {size}x{size} R")

    def check_mehler_vanishing(self, rng, shape, index):
        R = eps_matrix(random_matrix(rng, 2), 4)
        alpha = (1, 0) if index % 2 == 0 else (0, 1)
        return self.compare(mehler_vanishing(alpha, R, 4), EpsSeries.zero(4),
                            f"bracketed moment {alpha} vanishes")

    def check_duhamel(self, rng, shape, index):
        s = random_perturbation(rng, shape)
        delta = flat_laplacian(shape)
        return self.all_of(
            self.compare(duhamel_exp(delta, s, 2), duhamel_first_form(delta, s, 2),
                         "iterated and simplex Duhamel forms agree"),
            self.compare(exp_factorization_defect(delta, s, self.eps_order),
                         OpSeries.zero(shape), "P exp(Delta) = exp(Delta + s)"),
        )

    # Dirac operators

    def check_dirac(self, rng, shape, index):
        kind = KINDS[index % len(KINDS)]
        desc = random_descriptor(rng, shape, kind)
        return self.compare(is_generalized_laplacian(dirac_square(desc)), True,
                            f"-D^2 of a {kind} descriptor is a generalized Laplacian")

    def check_lichnerowicz(self, rng, shape, index):
        desc = random_descriptor(rng, shape, "affine")
        square = dirac_square(desc)
        curvature = curvature_tensor(desc)
        n = shape.n
        results = []
        for k in range(n):
            for l in range(n):  # noqa: E741
                for i in range(n):
                    for j in range(i + 1, n):
                        coeff = lichnerowicz_coefficient(square, k, l, i, j)
                        results.append(self.compare(
                            coeff == curvature[k][l][i][j], True,
                            f"coefficient ({k + 1},{l + 1},{i + 1},{j + 1}) is R^k_lij"))
        return self.all_of(*results)

    # supertrace

    def check_reduction(self, rng, shape, index):
        n = shape.n
        sigma0 = random_symbol(rng, shape, 0, shape.Q + 2, components=2)
        sigma1 = random_symbol(rng, shape, 0, shape.Q + 2, components=2)
        a = star(sigma0, log_commutator(sigma1))
        s = OpSeries.zero(shape)
        for axis in range(n):
            s = s + OpSeries.single(left_momentum(shape, axis), dp=shape.unit(axis), eps=1)
        heat = duhamel_exp(flat_laplacian(shape), s, n)
        prefactor = op_compose(OpSeries.single(a, CliffordWord.top(n), eps=n,
                                               contracted_order=n), heat)
        return self.compare(tr_s(TraceClassElement(prefactor)), wres(a),
                            "Tr_s(eps^n top_R a_L exp(Delta + eps p d_p)) = wres(a)")
