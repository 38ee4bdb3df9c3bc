# quiverhopf/core/algebras/copath.py
import logging
from typing import Dict, List, Optional, Sequence, Tuple, Union

from quiverhopf import config
from quiverhopf.core.algebras.base import GradedHopfAlgebra
from quiverhopf.core.algebras.verification import verify_hopf_axioms
from quiverhopf.core.bimodule import ArrowBimodule
from quiverhopf.core.group import CosetSystem, Element
from quiverhopf.core.linear import LinearCombination, rank
from quiverhopf.core.qcomb import q_factorial, s_m_polynomial
from quiverhopf.core.quiver import Arrow, Path, thin_splits
from quiverhopf.core.scalar import Scalar
from quiverhopf.core.structure import esc_arrow_positions, esc_to_crsc
from quiverhopf.exceptions import BoundExceededError, PreconditionError, VerificationError
from quiverhopf.models.report import Report
from quiverhopf.models.structure import ESC, RSC

# Configure logger
logger = logging.getLogger(__name__)


class PathElement(LinearCombination):
    """A finite combination of paths of a Hopf quiver."""

    __slots__ = ()

    def degrees(self) -> List[int]:
        return sorted({p.length for p in self.keys()})


class CopathAlgebra(GradedHopfAlgebra):
    """
    The co-path Hopf algebra kQ^c of an RSC: the path coalgebra with the product
    summed over thin splits, each position merged through the bimodule actions.
    """

    element_type = PathElement
    name = "copath"

    def __init__(self, bimodule: ArrowBimodule, cutoff: Optional[int] = None):
        self.bimodule = bimodule
        self.group = bimodule.group
        self.quiver = bimodule.quiver
        self.cutoff = config.DEGREE_CUTOFF if cutoff is None else cutoff
        self._antipodes: Dict[Path, PathElement] = {}

    @classmethod
    def from_rsc(cls, rsc: RSC, cosets: Optional[Sequence[CosetSystem]] = None,
                 cutoff: Optional[int] = None) -> "CopathAlgebra":
        return cls(ArrowBimodule(rsc, cosets), cutoff)

    # ------------------------------------------------------------------ basis

    def basis(self, cutoff: int) -> List[Path]:
        starts = self.group.sample()
        return [p for d in range(cutoff + 1) for p in self.quiver.paths(d, starts)]

    def degree(self, key: Path) -> int:
        return key.length

    def unit_key(self) -> Path:
        return Path.vertex(self.group.identity)

    def render(self, key: Path) -> str:
        return key.to_string(self.group)

    def sort_key(self, key: Path):
        return key.sort_key()

    def vertex(self, x: Element) -> PathElement:
        return self.element(Path.vertex(x))

    def path(self, *arrows: Arrow) -> PathElement:
        """The path of the given arrows, listed a_1 first."""
        return self.element(Path.of(arrows))

    # ------------------------------------------------------------------ product

    def _merge_position(self, position: int, alpha_item: Union[Arrow, Element],
                        beta_item: Union[Arrow, Element]) -> Tuple[Scalar, Arrow]:
        """One position of (d alpha)(d' beta): arrow . vertex or vertex . arrow."""
        if isinstance(alpha_item, Arrow):
            return self.bimodule.right_action(alpha_item, beta_item)
        return Scalar.one(), self.bimodule.left_action(alpha_item, beta_item)

    def multiply_basis(self, alpha: Path, beta: Path) -> PathElement:
        n, m = alpha.length, beta.length
        if n + m > self.cutoff:
            raise BoundExceededError("product degree", n + m, self.cutoff)
        if n + m == 0:
            return self.vertex(self.group.multiply(alpha.start, beta.start))
        pairs = []
        for d in thin_splits(n, m):
            scalar = Scalar.one()
            arrows = []
            used_alpha = used_beta = 0
            for position, di in enumerate(reversed(d)):
                if di:
                    alpha_item = alpha.arrows[used_alpha]
                    beta_item = beta.arrows[used_beta - 1].target if used_beta else beta.start
                    used_alpha += 1
                else:
                    alpha_item = alpha.arrows[used_alpha - 1].target if used_alpha else alpha.start
                    beta_item = beta.arrows[used_beta]
                    used_beta += 1
                s, arrow = self._merge_position(position, alpha_item, beta_item)
                scalar = scalar * s
                arrows.append(arrow)
            if scalar:
                pairs.append((scalar, Path.of(arrows)))
        return PathElement.from_pairs(pairs)

    # ------------------------------------------------------------------ coalgebra

    def comultiply_basis(self, p: Path) -> LinearCombination:
        """Delta(p) = sum_k p_{>k} (x) p_{<=k}."""
        return LinearCombination.from_pairs((1, (p.upper(k), p.lower(k))) for k in range(p.length + 1))

    def counit_basis(self, p: Path) -> Scalar:
        return Scalar.one() if p.is_vertex() else Scalar.zero()

    def antipode_basis(self, p: Path) -> PathElement:
        """
        S(g) = g^-1 and S(p) = -(sum_{k>=1} S(p_{>k}) p_{<=k}) s(p)^-1, from
        sum S(p_(1)) p_(2) = epsilon(p) 1.
        """
        cached = self._antipodes.get(p)
        if cached is not None:
            return cached
        if p.is_vertex():
            result = self.vertex(self.group.inverse(p.start))
        else:
            total = PathElement()
            for k in range(1, p.length + 1):
                total = total + self.multiply(self.antipode_basis(p.upper(k)), self.element(p.lower(k)))
            result = -self.multiply(total, self.vertex(self.group.inverse(p.start)))
        self._antipodes[p] = result
        logger.debug(f"Antipode cache holds {len(self._antipodes)} paths")
        return result

    def verify_bialgebra(self, cutoff: Optional[int] = None) -> Report:
        cutoff = self.cutoff if cutoff is None else cutoff
        if cutoff > self.cutoff:
            raise BoundExceededError("verification degree", cutoff, self.cutoff)
        return verify_hopf_axioms(self, cutoff, command="verify-copath")


def verify_bialgebra(b: ArrowBimodule, cutoff: Optional[int] = None) -> Report:
    """Runs the Hopf-axiom suite on the co-path algebra of a bimodule."""
    cutoff = config.DEGREE_CUTOFF if cutoff is None else cutoff
    return CopathAlgebra(b, cutoff).verify_bialgebra(cutoff)


# ---------------------------------------------------------------------- ESC generators


def esc_copath(e: ESC, cutoff: Optional[int] = None) -> CopathAlgebra:
    return CopathAlgebra.from_rsc(esc_to_crsc(e), cutoff=cutoff)


def esc_generators(algebra: CopathAlgebra, e: ESC) -> List[PathElement]:
    """E_j = a^(j)_{g_j,1} inside the co-path algebra of esc_to_crsc(e)."""
    identity = algebra.group.identity
    return [algebra.path(algebra.quiver.arrow(identity, gj, index))
            for gj, (_, index) in zip(e.g, esc_arrow_positions(e))]


# ---------------------------------------------------------------------- power products


def _power_path(algebra: CopathAlgebra, start: Element, g: Element, m: int, index: int) -> Path:
    group = algebra.group
    arrows, x = [], start
    for _ in range(m):
        y = group.multiply(x, g)
        arrows.append(algebra.quiver.arrow(x, y, index))
        x = y
    return Path.of(arrows)


def product_along_powers(algebra: CopathAlgebra, k: int, j: int, exponents: Sequence[int]) -> PathElement:
    """
    Multiplies a^(j)_{g^(i+1), g^i} over the given exponents, listed in factor
    order (leftmost factor first, so the last entry is i_1), and checks the
    result against q^beta (m)_q! P_{g^alpha}(g, m) and its inversion-count form.

    Raises:
        PreconditionError: If the class at position k is not a central singleton.
        VerificationError: If the product differs from the closed form.
    """
    group = algebra.group
    conj = algebra.quiver.classes[k]
    g = conj.representative
    if not conj.is_singleton or not group.is_central(g):
        raise PreconditionError("power products need a central ramified class {g}")
    m = len(exponents)
    if m == 0:
        raise ValueError("at least one factor is required")
    if m > algebra.cutoff:
        raise BoundExceededError("m", m, algebra.cutoff)
    factors = [algebra.path(algebra.quiver.arrow(group.power(g, i), group.power(g, i + 1), j)) for i in exponents]
    product = algebra.product(*factors)

    bottom_up = list(reversed(exponents))
    beta = sum(sum(bottom_up[:l]) for l in range(1, m))
    q = algebra.bimodule.rsc.classes[k].characters[j](g)
    scalar = q ** beta * q_factorial(m, q)
    alternative = q ** (beta + m * (m - 1) // 2) * s_m_polynomial(m, q.inverse())
    if scalar != alternative:
        raise VerificationError("inversion_form", f"q^beta (m)_q! = {scalar} but the inversion sum gives {alternative}")
    expected = algebra.element(_power_path(algebra, group.power(g, sum(exponents)), g, m, j), scalar)
    if product != expected:
        logger.error(f"Power product mismatch for exponents {list(exponents)}")
        raise VerificationError("power_product", f"expected {algebra.format(expected)}",
                                witness=algebra.format(product))
    logger.debug(f"Power product over {list(exponents)}: scalar {scalar}")
    return product


# ---------------------------------------------------------------------- kG[kQ_1^c]


def one_type_closure_check(algebra: CopathAlgebra, cutoff: int = 2) -> Report:
    """
    Products of d arrows span a space stable under multiplication by G on both
    sides, for d up to cutoff, so kG and the arrows generate a graded subalgebra.
    """
    report = Report(command="one-type-closure")
    group = algebra.group
    arrows = [algebra.element(Path.of([a])) for a in algebra.bimodule.arrows()]
    layer = [algebra.one()]
    for d in range(1, cutoff + 1):
        layer = [algebra.multiply(x, a) for x in layer for a in arrows]
        layer = [x for x in layer if x]
        base_rank = rank(layer)
        witness = None
        for x in layer:
            for h in group.sample():
                for y in (algebra.multiply(algebra.vertex(h), x), algebra.multiply(x, algebra.vertex(h))):
                    if rank(layer + [y]) != base_rank:
                        witness = f"{group.format_element(h)} and {algebra.format(x)}"
                        break
                if witness:
                    break
            if witness:
                break
        report.add(f"degree{d}", witness is None, witness=witness)
        report.results[f"degree{d}_rank"] = base_rank
    return report


def commutation_check(e: ESC) -> Report:
    """
    For each pair i < j, whether E_i E_j = chi_j(g_i^-1) E_j E_i holds in kQ^c,
    compared with whether chi_i(g_j) chi_j(g_i) = 1.
    """
    algebra = esc_copath(e, cutoff=2)
    gens = esc_generators(algebra, e)
    report = Report(command="commutation")
    holds_for = []
    for i in range(e.size):
        for j in range(i + 1, e.size):
            lhs = algebra.multiply(gens[i], gens[j])
            rhs = algebra.multiply(gens[j], gens[i]).scale(e.chi[j](e.group.inverse(e.g[i])))
            holds = lhs == rhs
            expected = (e.chi[i](e.g[j]) * e.chi[j](e.g[i])).is_one()
            name = f"E{e.labels[i]}E{e.labels[j]}"
            report.add(name, holds == expected, message=f"relation {'holds' if holds else 'fails'}",
                       witness=None if holds == expected else algebra.format(lhs - rhs))
            if holds:
                holds_for.append(name)
    report.results["relation_holds"] = holds_for
    return report
