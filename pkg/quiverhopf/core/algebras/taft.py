# quiverhopf/core/algebras/taft.py
import logging
import random
from dataclasses import dataclass
from itertools import product
from math import inf, prod
from typing import Dict, List, Optional, Sequence, Tuple, Union

from quiverhopf import config
from quiverhopf.core.algebras.base import GradedHopfAlgebra
from quiverhopf.core.algebras.copath import CopathAlgebra, esc_copath, esc_generators
from quiverhopf.core.algebras.verification import compare_algebras
from quiverhopf.core.braided import LINEAR, Biproduct, BraidedAlgebra, YDModule, nilpotency_order
from quiverhopf.core.group import Element
from quiverhopf.core.linear import LinearCombination, is_linearly_independent, rank
from quiverhopf.core.quiver import Path
from quiverhopf.core.scalar import Scalar
from quiverhopf.core.structure import commutativity_witness
from quiverhopf.exceptions import BoundExceededError, PreconditionError
from quiverhopf.models.report import Report
from quiverhopf.models.structure import ESC

# Configure logger
logger = logging.getLogger(__name__)

# Word tokens: ("g", element) or ("E", index)
Token = Tuple[str, Union[Element, int]]


@dataclass(frozen=True)
class PBWMonomial:
    """g . E_1^{m_1} ... E_t^{m_t} with 0 <= m_j < N_j, in the order of the element system."""

    g: Element
    exponents: Tuple[int, ...]

    @property
    def degree(self) -> int:
        return sum(self.exponents)


class TaftElement(LinearCombination):
    """A combination of PBW monomials of a multiple Taft algebra."""

    __slots__ = ()


class TaftAlgebra(GradedHopfAlgebra):
    """
    The multiple Taft algebra kG[kQ_1^c, G, g_i, chi_i; i in J] of a quantum weakly
    commutative element system, on its PBW basis.

    Raises:
        PreconditionError: If the element system is not quantum weakly commutative.
    """

    element_type = TaftElement
    name = "taft"

    def __init__(self, e: ESC, cutoff: Optional[int] = None):
        witness = commutativity_witness(e)
        if witness is not None:
            i, j = witness
            logger.error(f"{e.name} is not quantum weakly commutative at ({e.labels[i]}, {e.labels[j]})")
            raise PreconditionError(
                f"chi_{e.labels[i]}(g_{e.labels[j]}) chi_{e.labels[j]}(g_{e.labels[i]}) != 1")
        self.esc = e
        self.group = e.group
        self.cutoff = config.DEGREE_CUTOFF if cutoff is None else cutoff
        self.orders = [nilpotency_order(e.q(j, j)) for j in range(e.size)]
        self._copath: Optional[CopathAlgebra] = None

    @property
    def is_finite(self) -> bool:
        return self.group.is_finite and all(n != inf for n in self.orders)

    def dimension(self) -> Union[int, float]:
        return dimension(self.esc)

    # ------------------------------------------------------------------ bases

    def _exponent_vectors(self, cutoff: Optional[int]) -> List[Tuple[int, ...]]:
        ranges = []
        for n in self.orders:
            if n == inf and cutoff is None:
                raise PreconditionError("an infinite PBW basis needs a degree cutoff")
            top = n - 1 if cutoff is None else min(n - 1, cutoff)
            ranges.append(range(int(top) + 1))
        vectors = [v for v in product(*ranges) if cutoff is None or sum(v) <= cutoff]
        return sorted(vectors, key=lambda v: (sum(v), v))

    def diagram_basis(self, cutoff: Optional[int] = None) -> List[PBWMonomial]:
        """The monomials E^m with g = 1: a basis of the right coinvariants."""
        cutoff = self.cutoff if cutoff is None else cutoff
        identity = self.group.identity
        return [PBWMonomial(identity, v) for v in self._exponent_vectors(cutoff)]

    def pbw_basis(self, cutoff: Optional[int] = None, bound: Optional[int] = None) -> List[PBWMonomial]:
        """
        The full basis g . E^m, restricted to degree at most cutoff when given.

        Raises:
            BoundExceededError: If the basis is larger than the dimension bound.
        """
        bound = config.DIMENSION_BOUND if bound is None else bound
        if cutoff is None and not self.is_finite:
            cutoff = self.cutoff
        vectors = self._exponent_vectors(cutoff)
        size = len(vectors) * len(self.group.sample())
        if size > bound:
            logger.error(f"PBW basis of {self.esc.name} has {size} elements")
            raise BoundExceededError("basis size", size, bound)
        return [PBWMonomial(g, v) for v in vectors for g in self.group.sample()]

    def basis(self, cutoff: int) -> List[PBWMonomial]:
        return self.pbw_basis(cutoff)

    def degree(self, key: PBWMonomial) -> int:
        return key.degree

    def unit_key(self) -> PBWMonomial:
        return PBWMonomial(self.group.identity, (0,) * self.esc.size)

    def render(self, key: PBWMonomial) -> str:
        parts = []
        if key.g != self.group.identity:
            parts.append(self.group.format_element(key.g))
        for label, m in zip(self.esc.labels, key.exponents):
            if m == 1:
                parts.append(f"E{label}")
            elif m > 1:
                parts.append(f"E{label}^{m}")
        return " * ".join(parts) if parts else "1"

    def sort_key(self, key: PBWMonomial):
        return (key.degree, key.exponents, repr(key.g))

    def _generator_key(self, j: int) -> PBWMonomial:
        exponents = [0] * self.esc.size
        exponents[j] = 1
        return PBWMonomial(self.group.identity, tuple(exponents))

    def generator(self, j: int) -> TaftElement:
        return self.element(self._generator_key(j))

    def group_element(self, g: Element) -> TaftElement:
        return self.element(PBWMonomial(g, (0,) * self.esc.size))

    # ------------------------------------------------------------------ product

    def multiply_basis(self, u: PBWMonomial, v: PBWMonomial) -> TaftElement:
        """
        (g E^a)(h E^b) = prod_j chi_j(h)^{a_j} prod_{i>j} chi_j(g_i^-1)^{a_i b_j} gh E^{a+b},
        zero as soon as an exponent reaches N_j.
        """
        e = self.esc
        exponents = tuple(a + b for a, b in zip(u.exponents, v.exponents))
        if any(m >= n for m, n in zip(exponents, self.orders)):
            return TaftElement()
        if sum(exponents) > self.cutoff and not self.is_finite:
            raise BoundExceededError("taft degree", sum(exponents), self.cutoff)
        scalar = Scalar.one()
        for j, a in enumerate(u.exponents):
            if a:
                scalar = scalar * e.chi[j](v.g) ** a
        for i, a in enumerate(u.exponents):
            for j, b in enumerate(v.exponents[:i]):
                if a and b:
                    scalar = scalar * e.chi[j](self.group.inverse(e.g[i])) ** (a * b)
        return TaftElement.monomial(PBWMonomial(self.group.multiply(u.g, v.g), exponents), scalar)

    # ------------------------------------------------------------------ coalgebra

    def comultiply_basis(self, key: PBWMonomial) -> LinearCombination:
        """Delta(g) = g (x) g and Delta(E_j) = E_j (x) 1 + g_j (x) E_j, multiplicatively."""
        unit = self.unit_key()
        result = LinearCombination.monomial((PBWMonomial(key.g, unit.exponents), PBWMonomial(key.g, unit.exponents)))
        for j, m in enumerate(key.exponents):
            generator = self._generator_key(j)
            delta = LinearCombination.from_pairs([
                (1, (generator, unit)),
                (1, (PBWMonomial(self.esc.g[j], unit.exponents), generator)),
            ])
            for _ in range(m):
                result = self.tensor_multiply(result, delta)
        return result

    def counit_basis(self, key: PBWMonomial) -> Scalar:
        return Scalar.zero() if key.degree else Scalar.one()

    def antipode_basis(self, key: PBWMonomial) -> TaftElement:
        """S(g) = g^-1 and S(E_j) = -g_j^-1 E_j, anti-multiplicatively."""
        group = self.group
        result = self.group_element(group.inverse(key.g))
        for j, m in enumerate(key.exponents):
            s_generator = -self.multiply(self.group_element(group.inverse(self.esc.g[j])), self.generator(j))
            for _ in range(m):
                result = self.multiply(s_generator, result)
        return result

    # ------------------------------------------------------------------ rewriting

    def _redexes(self, word: Tuple[Token, ...]) -> List[int]:
        positions = []
        for p in range(len(word) - 1):
            (ka, va), (kb, vb) = word[p], word[p + 1]
            if ka == "E" and kb == "g":
                positions.append(p)
            elif ka == "g" and kb == "g":
                positions.append(p)
            elif ka == "E" and kb == "E" and va > vb:
                positions.append(p)
        for p in range(len(word)):
            kind, j = word[p]
            n = self.orders[j] if kind == "E" else inf
            if n != inf and p + n <= len(word) and all(word[p + k] == word[p] for k in range(n)):
                positions.append(-(p + 1))
        return positions

    def _rewrite(self, word: Tuple[Token, ...], position: int) -> Tuple[Scalar, Tuple[Token, ...]]:
        """Applies one rule; a negative position marks E_j^{N_j} starting at -position - 1."""
        if position < 0:
            return Scalar.zero(), word
        e = self.esc
        (ka, va), (kb, vb) = word[position], word[position + 1]
        head, tail = word[:position], word[position + 2:]
        if ka == "E" and kb == "g":
            return e.chi[va](vb), head + (("g", vb), ("E", va)) + tail
        if ka == "g":
            return Scalar.one(), head + (("g", self.group.multiply(va, vb)),) + tail
        return e.chi[vb](self.group.inverse(e.g[va])), head + (("E", vb), ("E", va)) + tail

    def _to_key(self, word: Tuple[Token, ...]) -> PBWMonomial:
        g = self.group.identity
        exponents = [0] * self.esc.size
        for kind, value in word:
            if kind == "g":
                g = value
            else:
                exponents[value] += 1
        return PBWMonomial(g, tuple(exponents))

    def normal_form(self, word: Sequence[Token], seed: Optional[int] = None,
                    bound: Optional[int] = None) -> TaftElement:
        """
        Reduces a word in group elements and generators with the relations
        E_j h -> chi_j(h) h E_j, h h' -> hh', E_i E_j -> chi_j(g_i^-1) E_j E_i for
        i after j, and E_j^{N_j} -> 0, choosing the redex at random with the seed.

        Raises:
            BoundExceededError: If more rewrite steps than the bound are needed.
        """
        rng = random.Random(config.RANDOM_SEED if seed is None else seed)
        bound = config.REWRITE_STEP_BOUND if bound is None else bound
        pending = LinearCombination.monomial(tuple(word))
        done = TaftElement()
        steps = 0
        while pending:
            current = LinearCombination()
            for term, coefficient in pending.sorted_items():
                redexes = self._redexes(term)
                if not redexes:
                    done = done + TaftElement.monomial(self._to_key(term), coefficient)
                    continue
                steps += 1
                if steps > bound:
                    raise BoundExceededError("rewrite steps", steps, bound)
                scalar, rewritten = self._rewrite(term, rng.choice(redexes))
                current = current + LinearCombination.monomial(rewritten, coefficient * scalar)
            pending = current
        logger.debug(f"Normal form of a word of length {len(word)} after {steps} steps")
        return done

    def random_word(self, rng: random.Random, length: int) -> List[Token]:
        tokens: List[Token] = []
        for _ in range(length):
            if rng.random() < 0.3:
                tokens.append(("g", rng.choice(self.group.sample())))
            else:
                tokens.append(("E", rng.randrange(self.esc.size)))
        return tokens

    def confluence_check(self, words: int = 200, length: int = 6, seed: Optional[int] = None) -> Report:
        """Random words reduce to the same normal form under two independent redex orders."""
        seed = config.RANDOM_SEED if seed is None else seed
        if not self.is_finite:
            length = min(length, self.cutoff)
        rng = random.Random(seed)
        report = Report(command="confluence")
        failure = None
        for k in range(words):
            word = self.random_word(rng, rng.randint(0, length))
            first = self.normal_form(word, seed=seed + 2 * k)
            second = self.normal_form(word, seed=seed + 2 * k + 1)
            product_form = self.product(*(self.group_element(v) if kind == "g" else self.generator(v)
                                          for kind, v in word))
            if first != second or first != product_form:
                failure = " ".join(f"{kind}{v}" for kind, v in word)
                break
        report.add("confluence", failure is None, witness=failure)
        report.results["words"] = words
        return report

    # ------------------------------------------------------------------ embedding in kQ^c

    @property
    def copath(self) -> CopathAlgebra:
        if self._copath is None:
            self._copath = esc_copath(self.esc, cutoff=self.cutoff)
        return self._copath

    def embed(self, x: LinearCombination) -> LinearCombination:
        """TaftElement -> PathElement under E_j -> a^(j)_{g_j,1}."""
        copath = self.copath
        generators = esc_generators(copath, self.esc)

        def image(key: PBWMonomial):
            factors = [copath.vertex(key.g)]
            for j, m in enumerate(key.exponents):
                factors.extend([generators[j]] * m)
            return copath.product(*factors)

        return x.map_linear(image)

    def embedding_check(self, cutoff: int = 3) -> Report:
        """Products of PBW monomials agree with co-path products of their images up to the cutoff."""
        report = Report(command="taft-embedding")
        basis = self.pbw_basis(cutoff)
        images = {key: self.embed(self.element(key)) for key in basis}
        report.add("injective", is_linearly_independent(list(images.values())))
        failure = None
        for u in basis:
            for v in basis:
                if u.degree + v.degree > cutoff:
                    continue
                if self.embed(self.multiply_basis(u, v)) != self.copath.multiply(images[u], images[v]):
                    failure = f"({self.render(u)}, {self.render(v)})"
                    break
            if failure:
                break
        report.add("multiplicative", failure is None, witness=failure)
        return report

    # ------------------------------------------------------------------ checks

    def nichols_check(self, cutoff: Optional[int] = None) -> Report:
        """
        The diagram is the quantum linear space of V(G, g_i, chi_i^-1): its graded
        dimensions match, and primitives exist only in degree 1, where they span.
        """
        cutoff = self.cutoff if cutoff is None else cutoff
        top = sum(n - 1 for n in self.orders) if all(n != inf for n in self.orders) else cutoff
        top = min(cutoff, top)
        diagram = BraidedAlgebra(YDModule(self.esc).inverse(), LINEAR, cutoff=max(top, 1))
        report = Report(command="nichols")
        sizes = [len([k for k in self.diagram_basis(top) if k.degree == d]) for d in range(top + 1)]
        braided_sizes = [len([w for w in diagram.basis(top) if len(w) == d]) for d in range(top + 1)]
        report.add("diagram_dimensions", sizes == braided_sizes, message=f"graded dimensions {sizes}")
        for d in range(1, top + 1):
            primitives = diagram.primitives(d)
            if d == 1:
                report.add("degree1", len(primitives) == self.esc.size,
                           message=f"{len(primitives)} primitives")
            else:
                report.add(f"degree{d}", not primitives,
                           witness=diagram.format(primitives[0]) if primitives else None)
        report.results["checked_degrees"] = top
        logger.info(f"Nichols check for {self.esc.name} through degree {top}: {'pass' if report.passed else 'FAIL'}")
        return report

    def presentation_check(self) -> Report:
        """
        The characterizing conditions computed inside kQ^c with X_j = E_j: group-likes,
        generation by independent X_j, skew-primitivity, commutation with G, the
        relations X_j X_i = chi_j(g_i) X_i X_j, kG meeting span{h X_i} trivially, and
        independence of the PBW monomials.
        """
        e = self.esc
        group = self.group
        copath = self.copath
        generators = esc_generators(copath, e)
        elements = group.sample()
        report = Report(command="presentation")

        grouplike = next((h for h in elements if copath.comultiply(copath.vertex(h))
                          != LinearCombination.monomial((Path.vertex(h), Path.vertex(h)))), None)
        report.add("group_likes", grouplike is None,
                   witness=None if grouplike is None else group.format_element(grouplike))

        failure = None
        for u in self.pbw_basis(min(self.cutoff, 2)):
            factors = [self.group_element(u.g)] + [self.generator(j) for j, m in enumerate(u.exponents)
                                                   for _ in range(m)]
            if self.product(*factors) != self.element(u):
                failure = self.render(u)
                break
        report.add("generated", is_linearly_independent(generators) and failure is None, witness=failure)

        failure = None
        for j, x in enumerate(generators):
            (path, _), = x.items()
            expected = LinearCombination.from_pairs([
                (1, (path, path.lower(0))),
                (1, (Path.vertex(e.g[j]), path)),
            ])
            if copath.comultiply(x) != expected:
                failure = f"E{e.labels[j]}"
                break
        report.add("skew_primitive", failure is None, witness=failure)

        failure = None
        for j, x in enumerate(generators):
            for h in elements:
                if copath.multiply(x, copath.vertex(h)) != copath.multiply(copath.vertex(h), x).scale(e.chi[j](h)):
                    failure = f"E{e.labels[j]}, {group.format_element(h)}"
                    break
            if failure:
                break
        report.add("group_commutation", failure is None, witness=failure)

        failure = None
        for i in range(e.size):
            for j in range(e.size):
                if i == j:
                    continue
                lhs = copath.multiply(generators[j], generators[i])
                rhs = copath.multiply(generators[i], generators[j]).scale(e.chi[j](e.g[i]))
                if lhs != rhs:
                    failure = f"E{e.labels[j]}E{e.labels[i]}"
                    break
            if failure:
                break
        report.add("quantum_relations", failure is None, witness=failure)

        span = [copath.vertex(h) for h in elements]
        span += [copath.multiply(copath.vertex(h), x) for h in elements for x in generators]
        report.add("trivial_intersection", rank(span) == len(elements) * (1 + e.size))

        basis = self.pbw_basis(min(self.cutoff, sum(n - 1 for n in self.orders) if self.is_finite else self.cutoff))
        report.add("pbw_independent", is_linearly_independent([self.embed(self.element(k)) for k in basis]),
                   message=f"{len(basis)} monomials")
        return report

    def biproduct_check(self, cutoff: Optional[int] = None) -> Report:
        """R(G, g_i, chi_i^-1) # kG against the Taft algebra through r # g -> r g."""
        cutoff = self.cutoff if cutoff is None else cutoff
        biproduct = Biproduct(BraidedAlgebra(YDModule(self.esc).inverse(), LINEAR, cutoff))
        identity = self.group.identity

        def phi(key) -> LinearCombination:
            word, g = key
            exponents = tuple(word.count(j) for j in range(self.esc.size))
            return self.multiply(self.element(PBWMonomial(identity, exponents)), self.group_element(g))

        return compare_algebras(biproduct, self, phi, cutoff, "taft-biproduct")


def dimension(e: ESC) -> Union[int, float]:
    """|G| N_1 ... N_t, or math.inf when G or some N_j is infinite."""
    orders = [nilpotency_order(e.q(j, j)) for j in range(e.size)]
    if not e.group.is_finite or inf in orders:
        return inf
    return e.group.order * prod(orders)
