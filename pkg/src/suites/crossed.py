"""Property checks for group actions, the crossed product and the Radul cocycle."""
import logging
from fractions import Fraction
from typing import Dict, List

from ..crossed.crossed import CrossedSymbol, crossed_commutator, localized_residue
from ..crossed.isometry import IsometryElement
from ..crossed.pairing import (
    LINE,
    determine_kappa,
    fundamental_pairing_1d,
    toeplitz_index_oracle_1d,
    winding_pair,
)
from ..crossed.radul import hochschild_coboundary, lifted_radul, radul_cocycle, radul_pair
from ..residue.wres import wres
from ..scalars.exact import ExactScalar
from ..scalars.fourier import FourierFunction
from ..symbols.symbol import HSymbol, star
from ..utils.generators import (
    SHAPES,
    group_samples,
    pick,
    random_crossed,
    random_order_zero,
    random_symbol,
)
from .common import PropertySuite

logger = logging.getLogger(__name__)

GROUP_NAMES = ("translation", "reflection", "both")
CROSSED_SHAPES = SHAPES


class CrossedSuite(PropertySuite):
    name = "crossed"

    SHAPES = {
        "automorphism": CROSSED_SHAPES,
        "composition": CROSSED_SHAPES,
        "residue_invariance": CROSSED_SHAPES,
        "localized_trace": CROSSED_SHAPES,
        "radul_antisymmetry": CROSSED_SHAPES,
        "hochschild": CROSSED_SHAPES,
        "radul_locality": CROSSED_SHAPES,
    }

    def __init__(self, config):
        super().__init__(config)
        self.cutoff = config.get("toeplitz_cutoff", 40)
        self._groups: Dict[tuple, Dict[str, List[IsometryElement]]] = {}
        self._kappa = None

    def group(self, shape, index: int) -> List[IsometryElement]:
        key = (shape.v, shape.h)
        if key not in self._groups:
            self._groups[key] = group_samples(shape)
        # shapes cycle fastest, so every shape meets every group
        name = GROUP_NAMES[(index // len(CROSSED_SHAPES)) % len(GROUP_NAMES)]
        return self._groups[key][name]

    def kappa(self) -> ExactScalar:
        if self._kappa is None:
            self._kappa = determine_kappa()
            logger.debug("kappa = %s", self._kappa.render())
        return self._kappa

    def _symbol(self, rng, shape):
        return random_symbol(rng, shape, 0, shape.Q + 2, components=2)

    # actions

    def check_automorphism(self, rng, shape, index):
        g = pick(rng, self.group(shape, index))
        a, b = self._symbol(rng, shape), self._symbol(rng, shape)
        return self.compare(g.act_on_symbol(star(a, b)),
                            star(g.act_on_symbol(a), g.act_on_symbol(b)),
                            f"alpha_{g.render()} is multiplicative")

    def check_composition(self, rng, shape, index):
        elements = self.group(shape, index)
        g, h = pick(rng, elements), pick(rng, elements)
        a = self._symbol(rng, shape)
        identity = IsometryElement.identity(shape, g.modulus)
        return self.all_of(
            self.compare((g * h).act_on_symbol(a), g.act_on_symbol(h.act_on_symbol(a)),
                         "alpha_gh = alpha_g alpha_h"),
            self.compare(identity.act_on_symbol(a), a, "alpha_e = id"),
        )

    def check_residue_invariance(self, rng, shape, index):
        g = pick(rng, self.group(shape, index))
        a = self._symbol(rng, shape)
        return self.compare(wres(g.act_on_symbol(a)), wres(a), "wres(alpha_g(a)) = wres(a)")

    # crossed product

    def _pair(self, rng, shape, index):
        elements = self.group(shape, index)
        return (random_crossed(rng, shape, elements), random_crossed(rng, shape, elements))

    def check_localized_trace(self, rng, shape, index):
        A, B = self._pair(rng, shape, index)
        return self.compare(localized_residue(crossed_commutator(A, B)), 0,
                            "residue at the unit of AB - BA")

    def check_radul_antisymmetry(self, rng, shape, index):
        A, B = self._pair(rng, shape, index)
        return self.compare(radul_cocycle(A, B), -radul_cocycle(B, A),
                            "phi(A, B) = -phi(B, A)")

    def check_hochschild(self, rng, shape, index):
        elements = self.group(shape, index)
        A, B, C = (random_crossed(rng, shape, elements) for _ in range(3))
        return self.compare(hochschild_coboundary(radul_cocycle, A, B, C), 0, "b phi = 0")

    def check_radul_locality(self, rng, shape, index):
        elements = [g for g in self.group(shape, index) if not g.is_identity()]
        g = pick(rng, elements)
        h = pick(rng, [x for x in elements if not (g * x).is_identity()]
                 or [IsometryElement.identity(shape, g.modulus)])
        a, b = self._symbol(rng, shape), self._symbol(rng, shape)
        return self.compare(radul_pair(g, a, h, b), 0, f"phi vanishes off gh = e ({g}, {h})")

    # flat index pairing

    def check_kappa(self, rng, shape, index):
        a0, a1 = random_order_zero(rng), random_order_zero(rng)
        phi = lifted_radul(CrossedSymbol.untwisted(a0), CrossedSymbol.untwisted(a1))
        return self.all_of(
            self.compare(self.kappa(), -ExactScalar.i(), "kappa = -i"),
            self.compare(phi, self.kappa() * fundamental_pairing_1d(a0, a1),
                         "phi = kappa * <a0, a1>"),
        )

    def check_winding(self, rng, shape, index):
        w = index - 2
        a0, a1 = winding_pair(w)
        phi = lifted_radul(CrossedSymbol.untwisted(a0), CrossedSymbol.untwisted(a1))
        # phi / kappa = <a0, a1> = i·w while ind T = −w
        toeplitz = toeplitz_index_oracle_1d(a1, self.cutoff)
        step = pick(rng, [-1, 1])
        c = Fraction(int(rng.integers(1, 10)), 10)
        perturbed = HSymbol.constant(LINE, FourierFunction(1, {(w,): 1, (w + step,): c}))
        return self.all_of(
            self.compare(phi / self.kappa(), -ExactScalar.i() * toeplitz,
                         f"phi/kappa against i * index at w = {w}"),
            self.compare(toeplitz_index_oracle_1d(perturbed, self.cutoff), -w,
                         f"index of e(w) + {c} e(w{step:+d}) at w = {w}"),
        )
