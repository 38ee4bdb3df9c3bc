# quiverhopf/core/braided.py
import logging
from itertools import combinations_with_replacement, product
from math import inf
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from quiverhopf import config
from quiverhopf.core.algebras.base import GradedHopfAlgebra
from quiverhopf.core.algebras.copath import esc_copath, esc_generators
from quiverhopf.core.group import ABELIAN, CAYLEY, Character, Element, Group
from quiverhopf.core.linear import LinearCombination, kernel
from quiverhopf.core.scalar import Scalar
from quiverhopf.core.structure import is_weakly_commutative
from quiverhopf.exceptions import BoundExceededError, PreconditionError, VerificationError
from quiverhopf.models.report import Report
from quiverhopf.models.structure import ESC

# Configure logger
logger = logging.getLogger(__name__)

TENSOR = "tensor"
SYMMETRIC = "symmetric"
LINEAR = "linear"
FLAVORS = (TENSOR, SYMMETRIC, LINEAR)

Word = Tuple[int, ...]


def nilpotency_order(q: Scalar) -> Union[int, float]:
    """N = the order of q as a root of unity; math.inf when q = 1 or q is not a root of unity."""
    order = q.multiplicative_order()
    return inf if order == 1 else order


class YDModule:
    """
    The pointed Yetter-Drinfeld module V(G, g_i, chi_i; i in J): basis x_i with
    h . x_i = chi_i(h) x_i and coaction x_i -> g_i (x) x_i.
    """

    def __init__(self, esc: ESC):
        self.esc = esc
        self.group = esc.group

    @property
    def dimension(self) -> int:
        return self.esc.size

    def action(self, h: Element, i: int) -> Scalar:
        return self.esc.chi[i](h)

    def coaction(self, i: int) -> Element:
        return self.esc.g[i]

    def word_degree(self, word: Word) -> Element:
        """The G-degree g_w of a word, the product of the g_i of its letters."""
        return self.group.product_of(self.esc.g[i] for i in word)

    def word_character(self, word: Word, h: Element) -> Scalar:
        """h acting on the word x_w."""
        scalar = Scalar.one()
        for i in word:
            scalar = scalar * self.action(h, i)
        return scalar

    def braiding(self, i: int, j: int) -> Tuple[Scalar, Tuple[int, int]]:
        """c(x_i (x) x_j) = chi_j(g_i) x_j (x) x_i."""
        return self.action(self.coaction(i), j), (j, i)

    def inverse(self) -> "YDModule":
        """V(G, g_i, chi_i^-1; i in J)."""
        e = self.esc
        return YDModule(ESC(group=e.group, g=list(e.g), chi=[ch.inverse() for ch in e.chi],
                            labels=list(e.labels), name=f"{e.name}^-1"))

    def label(self, i: int) -> str:
        return self.esc.labels[i]

    def verify(self) -> Report:
        """YD compatibility on the basis, and the braid relation on every triple of indices."""
        report = Report(command="verify-yd")
        group = self.group
        compatibility = None
        for i in range(self.dimension):
            for h in group.sample():
                if group.conjugate(self.coaction(i), group.inverse(h)) != self.coaction(i):
                    compatibility = f"x{self.label(i)}, h = {group.format_element(h)}"
                    break
            if compatibility:
                break
        report.add("yd_compatibility", compatibility is None, witness=compatibility)

        braid = None
        n = self.dimension
        for i, j, k in product(range(n), repeat=3):
            # (c (x) id)(id (x) c)(c (x) id) against (id (x) c)(c (x) id)(id (x) c)
            left = self.braiding(i, j)[0] * self.braiding(i, k)[0] * self.braiding(j, k)[0]
            right = self.braiding(j, k)[0] * self.braiding(i, k)[0] * self.braiding(i, j)[0]
            if left != right:
                braid = f"x{self.label(i)} x{self.label(j)} x{self.label(k)}"
                break
        report.add("braid_relation", braid is None, witness=braid)
        return report


class BraidedAlgebra(GradedHopfAlgebra):
    """
    Braided Hopf algebras generated by a pointed YD module: the quantum tensor
    algebra, the quantum symmetric algebra (x_i x_j = chi_j(g_i) x_j x_i for i != j)
    and the quantum linear space (additionally x_l^{N_l} = 0).

    Keys are words in normal form; the tensor product of the algebra with itself is
    the braided one, so the generic axiom suite checks the braided bialgebra laws.
    """

    name = "braided"

    def __init__(self, module: YDModule, flavor: str = TENSOR, cutoff: Optional[int] = None):
        if flavor not in FLAVORS:
            raise ValueError(f"Unknown braided algebra flavor: {flavor}. Valid values: {', '.join(FLAVORS)}")
        if flavor != TENSOR and not is_weakly_commutative(module.esc):
            logger.error(f"{module.esc.name} is not weakly commutative")
            raise PreconditionError(f"the {flavor} algebra needs a weakly commutative element system")
        self.module = module
        self.flavor = flavor
        self.cutoff = config.DEGREE_CUTOFF if cutoff is None else cutoff
        self.name = f"braided-{flavor}"
        self.orders = [nilpotency_order(module.action(module.coaction(i), i)) for i in range(module.dimension)]
        self._antipodes: Dict[Word, LinearCombination] = {}

    # ------------------------------------------------------------------ normal forms

    def normalize(self, word: Word) -> LinearCombination:
        """Reduces a word of the tensor algebra to normal form."""
        if self.flavor == TENSOR:
            return LinearCombination.monomial(tuple(word))
        scalar = Scalar.one()
        letters = list(word)
        for a in range(len(letters)):
            for b in range(a + 1, len(letters)):
                i, j = letters[a], letters[b]
                if i > j:
                    # x_i x_j -> chi_j(g_i) x_j x_i, once per inverted pair
                    scalar = scalar * self.module.braiding(i, j)[0]
        letters.sort()
        if self.flavor == LINEAR:
            for i in set(letters):
                if letters.count(i) >= self.orders[i]:
                    return LinearCombination()
        return LinearCombination.monomial(tuple(letters), scalar)

    def basis(self, cutoff: int) -> List[Word]:
        n = self.module.dimension
        words: List[Word] = []
        for d in range(cutoff + 1):
            if self.flavor == TENSOR:
                words.extend(product(range(n), repeat=d))
            else:
                for word in combinations_with_replacement(range(n), d):
                    if self.flavor == LINEAR and any(word.count(i) >= self.orders[i] for i in set(word)):
                        continue
                    words.append(tuple(word))
        return words

    def degree(self, key: Word) -> int:
        return len(key)

    def unit_key(self) -> Word:
        return ()

    def render(self, key: Word) -> str:
        if not key:
            return "1"
        return "·".join(f"x{self.module.label(i)}" for i in key)

    def sort_key(self, key: Word):
        return (len(key), key)

    def generator(self, i: int) -> LinearCombination:
        return self.element((i,))

    def word(self, *letters: int) -> LinearCombination:
        return self.normalize(tuple(letters))

    # ------------------------------------------------------------------ structure maps

    def multiply_basis(self, a: Word, b: Word) -> LinearCombination:
        if len(a) + len(b) > self.cutoff:
            raise BoundExceededError("braided degree", len(a) + len(b), self.cutoff)
        return self.normalize(a + b)

    def tensor_multiply(self, x: LinearCombination, y: LinearCombination) -> LinearCombination:
        """(a (x) b)(c (x) d) = (g_b . c) a c (x) b d in the braided tensor product."""
        pairs = []
        for (a1, a2), ca in x.items():
            for (b1, b2), cb in y.items():
                scalar = ca * cb * self.module.word_character(b1, self.module.word_degree(a2))
                for p1, c1 in self.multiply_basis(a1, b1).items():
                    for p2, c2 in self.multiply_basis(a2, b2).items():
                        pairs.append((scalar * c1 * c2, (p1, p2)))
        return LinearCombination.from_pairs(pairs)

    def comultiply_basis(self, word: Word) -> LinearCombination:
        """Delta(x_i) = x_i (x) 1 + 1 (x) x_i, extended by induction on the word length."""
        result = LinearCombination.monomial(((), ()))
        for i in word:
            result = self.tensor_multiply(result, LinearCombination.from_pairs([(1, ((i,), ())), (1, ((), (i,)))]))
        return result

    def counit_basis(self, word: Word) -> Scalar:
        return Scalar.zero() if word else Scalar.one()

    def antipode_basis(self, word: Word) -> LinearCombination:
        """S(w) = -sum S(w_(1)) w_(2) over the terms of Delta(w) other than w (x) 1."""
        cached = self._antipodes.get(word)
        if cached is not None:
            return cached
        if not word:
            return self.one()
        total = LinearCombination()
        for (a1, a2), c in self.comultiply_basis(word).items():
            if a2 == ():
                continue
            total = total + self.multiply(self.antipode_basis(a1), self.element(a2)).scale(c)
        result = -total
        self._antipodes[word] = result
        return result

    # ------------------------------------------------------------------ primitives

    def primitives(self, degree: int) -> List[LinearCombination]:
        """Basis of the primitive elements of the given degree, by exact kernel computation."""
        if degree == 0:
            return []
        words = [w for w in self.basis(degree) if len(w) == degree]
        images = []
        for w in words:
            delta = self.comultiply_basis(w)
            images.append(delta - LinearCombination.from_pairs([(1, (w, ())), (1, ((), w))]))
        result = [LinearCombination.from_pairs(zip(vector, words)) for vector in kernel(images)]
        logger.debug(f"{self.name}: {len(result)} primitives in degree {degree}")
        return result

    def relators(self, cutoff: Optional[int] = None) -> List[Tuple[str, LinearCombination]]:
        """The defining relators as elements of the tensor algebra."""
        cutoff = self.cutoff if cutoff is None else cutoff
        n = self.module.dimension
        result = []
        if self.flavor == TENSOR:
            return result
        for i in range(n):
            for j in range(i + 1, n):
                q = self.module.braiding(i, j)[0]
                result.append((f"x{self.module.label(i)}x{self.module.label(j)}",
                               LinearCombination.from_pairs([(1, (i, j)), (-q, (j, i))])))
        if self.flavor == LINEAR:
            for i in range(n):
                if self.orders[i] <= cutoff:
                    result.append((f"x{self.module.label(i)}^{self.orders[i]}",
                                   LinearCombination.monomial((i,) * self.orders[i])))
        return result

    def relator_coideal_check(self, cutoff: Optional[int] = None) -> Report:
        """
        Delta of every relator, computed in the tensor algebra, vanishes once both
        tensor factors are reduced, so the relators span a braided Hopf ideal.
        """
        report = Report(command=f"relator-coideal-{self.flavor}")
        free = BraidedAlgebra(self.module, TENSOR, self.cutoff)
        for name, relator in self.relators(cutoff):
            delta = free.comultiply(relator)
            reduced = LinearCombination.from_pairs(
                (c * c1 * c2, (p1, p2))
                for (a1, a2), c in delta.items()
                for p1, c1 in self.normalize(a1).items()
                for p2, c2 in self.normalize(a2).items())
            report.add(name, reduced.is_zero(), witness=None if reduced.is_zero() else self.format_tensor(reduced))
        return report


def braided_commutator_residue(module: YDModule, i: int, j: int) -> Scalar:
    """Coefficient of x_i (x) x_j in Delta(x_i x_j - chi_j(g_i) x_j x_i): 1 - chi_j(g_i) chi_i(g_j)."""
    return Scalar.one() - module.braiding(i, j)[0] * module.braiding(j, i)[0]


# ---------------------------------------------------------------------- biproduct


class Biproduct(GradedHopfAlgebra):
    """
    The bosonization R # kG of a braided algebra R generated by a YD module:
    (r # g)(r' # h) = chi_{r'}(g) r r' # gh and
    Delta(r # g) = sum r_(1) # g_{r_(2)} g (x) r_(2) # g.
    """

    name = "biproduct"

    def __init__(self, braided: BraidedAlgebra):
        self.braided = braided
        self.module = braided.module
        self.group = braided.module.group
        self.cutoff = braided.cutoff
        self._antipodes: Dict[Word, LinearCombination] = {}

    def basis(self, cutoff: int) -> List[Tuple[Word, Element]]:
        return [(w, g) for w in self.braided.basis(cutoff) for g in self.group.sample()]

    def degree(self, key: Tuple[Word, Element]) -> int:
        return len(key[0])

    def unit_key(self) -> Tuple[Word, Element]:
        return (), self.group.identity

    def render(self, key: Tuple[Word, Element]) -> str:
        return f"{self.braided.render(key[0])}#{self.group.format_element(key[1])}"

    def sort_key(self, key: Tuple[Word, Element]):
        return (self.braided.sort_key(key[0]), key[1])

    def multiply_basis(self, a: Tuple[Word, Element], b: Tuple[Word, Element]) -> LinearCombination:
        (r, g), (s, h) = a, b
        scalar = self.module.word_character(s, g)
        gh = self.group.multiply(g, h)
        return LinearCombination.from_pairs(
            (scalar * c, (w, gh)) for w, c in self.braided.multiply_basis(r, s).items())

    def comultiply_basis(self, key: Tuple[Word, Element]) -> LinearCombination:
        r, g = key
        group = self.group
        return LinearCombination.from_pairs(
            (c, ((r1, group.multiply(self.module.word_degree(r2), g)), (r2, g)))
            for (r1, r2), c in self.braided.comultiply_basis(r).items())

    def counit_basis(self, key: Tuple[Word, Element]) -> Scalar:
        return self.braided.counit_basis(key[0])

    def _antipode_word(self, r: Word) -> LinearCombination:
        """S(r # 1) from sum S(a_(1)) a_(2) = 0, isolating the r (x) 1 term."""
        cached = self._antipodes.get(r)
        if cached is not None:
            return cached
        group = self.group
        if not r:
            return self.one()
        total = LinearCombination()
        for (r1, r2), c in self.braided.comultiply_basis(r).items():
            if r2 == ():
                continue
            h = self.module.word_degree(r2)
            left = self.multiply(self.element(((), group.inverse(h))), self._antipode_word(r1))
            total = total + self.multiply(left, self.element((r2, group.identity))).scale(c)
        result = -total
        self._antipodes[r] = result
        return result

    def antipode_basis(self, key: Tuple[Word, Element]) -> LinearCombination:
        """S(r # g) = (1 # g^-1) S(r # 1)."""
        r, g = key
        return self.multiply(self.element(((), self.group.inverse(g))), self._antipode_word(r))


# ---------------------------------------------------------------------- constructions


def adjoint_arrow_module(e: ESC) -> YDModule:
    """
    The adjoint YD structure on the arrows E_j = a^(j)_{g_j,1} of the co-path
    algebra: g > E_j = g E_j g^-1 and E_j -> g_j (x) E_j, returned as V(G, g_j, chi_j^-1).

    Raises:
        VerificationError: If the adjoint action is not chi_j(g^-1) E_j.
    """
    algebra = esc_copath(e, cutoff=1)
    group = e.group
    for j, generator in enumerate(esc_generators(algebra, e)):
        (path, _), = generator.items()
        arrow = path.arrows[0]
        if group.multiply(arrow.target, group.inverse(arrow.source)) != e.g[j]:
            raise VerificationError("adjoint_coaction", f"E{e.labels[j]} does not have degree g_{e.labels[j]}")
        for h in group.sample():
            conjugated = algebra.product(algebra.vertex(h), generator, algebra.vertex(group.inverse(h)))
            expected = generator.scale(e.chi[j](group.inverse(h)))
            if conjugated != expected:
                logger.error(f"Adjoint action mismatch on E{e.labels[j]}")
                raise VerificationError("adjoint_action", f"{group.format_element(h)} > E{e.labels[j]}",
                                        witness=algebra.format(conjugated))
    logger.info(f"Adjoint arrow module of {e.name} matches V(G, g_i, chi_i^-1)")
    return YDModule(e).inverse()


def pointed_yd_decompose(group: Group, action: Dict[Element, Sequence[Sequence[Any]]],
                         coaction: Sequence[Element], labels: Optional[Sequence[str]] = None) -> ESC:
    """
    Reads (g_i, chi_i) off a YD module given on a basis by action matrices and a
    diagonal coaction x_i -> g_i (x) x_i.

    Args:
        group (Group): A finite group.
        action (Dict[Element, Sequence[Sequence[Any]]]): Matrix of each group element
            (all elements for Cayley groups, the standard generators otherwise).
        coaction (Sequence[Element]): The degree g_i of each basis vector.
        labels (Sequence[str], optional): Labels of the resulting indices.

    Returns:
        ESC: The element system with characters of the pointed module.

    Raises:
        PreconditionError: If the action is not diagonal or a degree is not central.
    """
    n = len(coaction)
    keys = list(group.elements) if group.kind == CAYLEY else [group.generator(k) for k in range(group.ngens)]
    matrices = {h: [[Scalar.coerce(v) for v in row] for row in action[h]] for h in keys if h in action}
    missing = [h for h in keys if h not in matrices]
    if missing:
        raise ValueError(f"missing action of {group.format_element(missing[0])}")
    for h, matrix in matrices.items():
        if len(matrix) != n or any(len(row) != n for row in matrix):
            raise ValueError(f"action of {group.format_element(h)} is not a {n}x{n} matrix")
        for a in range(n):
            for b in range(n):
                if a != b and matrix[a][b]:
                    logger.error(f"Non-diagonal action of {group.format_element(h)}")
                    raise PreconditionError(f"the action of {group.format_element(h)} is not diagonal on the basis")
    for gi in coaction:
        if not group.is_central(gi):
            raise PreconditionError(f"coaction degree {group.format_element(gi)} is not central")
    characters = []
    for i in range(n):
        if group.kind == CAYLEY:
            characters.append(Character.from_table(group, {h: matrices[h][i][i] for h in keys}))
        elif group.kind == ABELIAN:
            characters.append(Character.from_values(group, [matrices[h][i][i] for h in keys]))
        else:
            characters.append(Character(group, tuple(matrices[h][i][i] for h in keys)))
    return ESC(group=group, g=list(coaction), chi=characters, labels=list(labels or []), name="pointed-yd")
