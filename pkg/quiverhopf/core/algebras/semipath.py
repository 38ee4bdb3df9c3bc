# quiverhopf/core/algebras/semipath.py
import logging
from dataclasses import dataclass
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

from quiverhopf import config
from quiverhopf.core.algebras.base import GradedHopfAlgebra
from quiverhopf.core.algebras.verification import compare_algebras
from quiverhopf.core.bimodule import ArrowBimodule
from quiverhopf.core.braided import TENSOR, Biproduct, BraidedAlgebra, YDModule
from quiverhopf.core.group import CosetSystem, Element
from quiverhopf.core.linear import LinearCombination
from quiverhopf.core.quiver import Arrow
from quiverhopf.core.scalar import Scalar
from quiverhopf.core.structure import esc_arrow_positions, esc_to_crsc
from quiverhopf.exceptions import BoundExceededError
from quiverhopf.models.report import Report
from quiverhopf.models.structure import ESC, RSC

# Configure logger
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TensorWord:
    """g . a_1 (x) ... (x) a_t over kG, each letter an arrow with source 1."""

    g: Element
    letters: Tuple[int, ...] = ()

    @property
    def length(self) -> int:
        return len(self.letters)


class SemipathAlgebra(GradedHopfAlgebra):
    """
    The semi-path Hopf algebra kQ^s: the tensor algebra over kG of the arrow
    bimodule, with words written g . a_1 ... a_t and interior group elements
    pushed to the left through the right action.
    """

    name = "semipath"

    def __init__(self, bimodule: ArrowBimodule, letters: Sequence[Arrow],
                 labels: Optional[Sequence[str]] = None, cutoff: Optional[int] = None):
        self.bimodule = bimodule
        self.group = bimodule.group
        self.letters = list(letters)
        self.labels = list(labels) if labels is not None else [a.label(self.group) for a in self.letters]
        self.esc: Optional[ESC] = None
        self.cutoff = config.DEGREE_CUTOFF if cutoff is None else cutoff
        self._position: Dict[Arrow, int] = {a: k for k, a in enumerate(self.letters)}
        self._antipodes: Dict[TensorWord, LinearCombination] = {}

    @classmethod
    def from_esc(cls, e: ESC, cutoff: Optional[int] = None) -> "SemipathAlgebra":
        """Letters E_j = a^(j)_{g_j,1} in ESC order, rendered E<label>."""
        bimodule = ArrowBimodule(esc_to_crsc(e))
        identity = e.group.identity
        letters = [bimodule.quiver.arrow(identity, gj, index) for gj, (_, index) in zip(e.g, esc_arrow_positions(e))]
        algebra = cls(bimodule, letters, [f"E{label}" for label in e.labels], cutoff)
        algebra.esc = e
        return algebra

    @classmethod
    def from_rsc(cls, rsc: RSC, cosets: Optional[Sequence[CosetSystem]] = None,
                 cutoff: Optional[int] = None) -> "SemipathAlgebra":
        bimodule = ArrowBimodule(rsc, cosets)
        letters = sorted(bimodule.quiver.arrows_from(rsc.group.identity),
                         key=lambda a: (a.cls, a.target, a.index))
        return cls(bimodule, letters, cutoff=cutoff)

    # ------------------------------------------------------------------ basis

    def basis(self, cutoff: int) -> List[TensorWord]:
        n = len(self.letters)
        return [TensorWord(g, w) for d in range(cutoff + 1)
                for g in self.group.sample() for w in product(range(n), repeat=d)]

    def coinvariants_basis(self, cutoff: int) -> List[TensorWord]:
        """Words with leading element 1: the right kG-coinvariants, free on the letters."""
        n = len(self.letters)
        identity = self.group.identity
        return [TensorWord(identity, w) for d in range(cutoff + 1) for w in product(range(n), repeat=d)]

    def slice_dimension(self, t: int) -> int:
        return self.group.order * len(self.letters) ** t

    def degree(self, key: TensorWord) -> int:
        return key.length

    def unit_key(self) -> TensorWord:
        return TensorWord(self.group.identity)

    def render(self, key: TensorWord) -> str:
        parts = [self.labels[i] for i in key.letters]
        if key.g != self.group.identity or not parts:
            parts.insert(0, self.group.format_element(key.g) if key.g != self.group.identity else "1")
        return " * ".join(parts)

    def sort_key(self, key: TensorWord):
        return (key.length, key.letters, repr(key.g))

    def word(self, g: Element, *letters: int) -> LinearCombination:
        return self.element(TensorWord(g, tuple(letters)))

    def vertex(self, g: Element) -> LinearCombination:
        return self.element(TensorWord(g))

    # ------------------------------------------------------------------ product

    def push_left(self, letters: Tuple[int, ...], h: Element) -> Tuple[Scalar, Tuple[int, ...]]:
        """a_1 ... a_t . h = s h . a'_1 ... a'_t, with a . h = s h . (h^-1 . (a <| h))."""
        scalar = Scalar.one()
        moved_letters: List[int] = []
        inverse = self.group.inverse(h)
        for letter in reversed(letters):
            s, moved = self.bimodule.right_action(self.letters[letter], h)
            scalar = scalar * s
            moved_letters.append(self._position[self.bimodule.left_action(inverse, moved)])
        return scalar, tuple(reversed(moved_letters))

    def multiply_basis(self, u: TensorWord, v: TensorWord) -> LinearCombination:
        if u.length + v.length > self.cutoff:
            raise BoundExceededError("semipath degree", u.length + v.length, self.cutoff)
        scalar, moved = self.push_left(u.letters, v.g)
        return LinearCombination.monomial(TensorWord(self.group.multiply(u.g, v.g), moved + v.letters), scalar)

    # ------------------------------------------------------------------ coalgebra

    def _letter_coproduct(self, letter: int) -> LinearCombination:
        """Delta(a) = a (x) 1 + t(a) (x) a."""
        identity = self.group.identity
        target = self.letters[letter].target
        return LinearCombination.from_pairs([
            (1, (TensorWord(identity, (letter,)), TensorWord(identity))),
            (1, (TensorWord(target), TensorWord(identity, (letter,)))),
        ])

    def comultiply_basis(self, key: TensorWord) -> LinearCombination:
        result = LinearCombination.monomial((TensorWord(key.g), TensorWord(key.g)))
        for letter in key.letters:
            result = self.tensor_multiply(result, self._letter_coproduct(letter))
        return result

    def counit_basis(self, key: TensorWord) -> Scalar:
        return Scalar.zero() if key.letters else Scalar.one()

    def antipode_basis(self, key: TensorWord) -> LinearCombination:
        """S(g) = g^-1 and S(a) = -t(a)^-1 a, extended anti-multiplicatively."""
        cached = self._antipodes.get(key)
        if cached is not None:
            return cached
        group = self.group
        result = self.vertex(group.inverse(key.g))
        for letter in key.letters:
            target = self.letters[letter].target
            s_letter = -self.element(TensorWord(group.inverse(target), (letter,)))
            result = self.multiply(s_letter, result)
        self._antipodes[key] = result
        logger.debug(f"Antipode cache holds {len(self._antipodes)} words")
        return result


def coinvariants_basis(e: ESC, cutoff: int) -> List[TensorWord]:
    return SemipathAlgebra.from_esc(e, cutoff).coinvariants_basis(cutoff)


def tensor_biproduct_check(e: ESC, cutoff: int = 3) -> Report:
    """
    Compares the bosonization of the quantum tensor algebra of V(G, g_i, chi_i^-1)
    with kQ^s through x_w # g -> E_w g: products, coproducts and bijectivity on the
    basis up to the cutoff.
    """
    semipath = SemipathAlgebra.from_esc(e, cutoff)
    biproduct = Biproduct(BraidedAlgebra(YDModule(e).inverse(), TENSOR, cutoff))
    group = e.group

    def phi(key) -> LinearCombination:
        word, g = key
        return semipath.multiply(semipath.word(group.identity, *word), semipath.vertex(g))

    report = compare_algebras(biproduct, semipath, phi, cutoff, "tensor-biproduct")
    logger.info(f"Tensor biproduct comparison for {e.name}: {'pass' if report.passed else 'FAIL'}")
    return report
