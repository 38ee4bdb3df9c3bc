# quiverhopf/core/quantum_group.py
import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import inf, lcm
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from sympy import Matrix

from quiverhopf import config
from quiverhopf.core.algebras.base import GradedHopfAlgebra
from quiverhopf.core.algebras.semipath import SemipathAlgebra, TensorWord
from quiverhopf.core.algebras.verification import verify_on_keys
from quiverhopf.core.braided import TENSOR, Biproduct, BraidedAlgebra, YDModule
from quiverhopf.core.group import Character, Element, Group
from quiverhopf.core.linear import LinearCombination, rank
from quiverhopf.core.qcomb import SYMMETRIC, q_binomial
from quiverhopf.core.scalar import Scalar
from quiverhopf.core.structure import require_fl_free, validate_fl
from quiverhopf.exceptions import BoundExceededError, PreconditionError
from quiverhopf.models.fl_data import FLBlock, FLData
from quiverhopf.models.report import Report
from quiverhopf.models.structure import ESC

# Configure logger
logger = logging.getLogger(__name__)

COMMUTATOR = "commutator"
K_INVERSE = "k_inverse"
K_COMMUTATION = "k_commutation"
SERRE = "serre"

_TYPE_A = re.compile(r"^(a|sl)(\d+)$")

_NAMED_CARTAN = {
    "b2": ([[2, -2], [-1, 2]], [1, 2]),
    "c2": ([[2, -1], [-2, 2]], [2, 1]),
    "g2": ([[2, -1], [-3, 2]], [3, 1]),
}


# ---------------------------------------------------------------------- Cartan data


def cartan_by_name(name: str) -> Tuple[List[List[int]], List[int]]:
    """
    Builtin Cartan matrices and symmetrizers.

    Args:
        name (str): 'a1'..'a4' (equivalently 'sl2'..'sl5'), 'b2', 'c2' or 'g2'.

    Returns:
        Tuple[List[List[int]], List[int]]: The matrix A and the symmetrizers d.

    Raises:
        ValueError: If the name is not recognized.
    """
    key = str(name).strip().lower()
    match = _TYPE_A.match(key)
    if match:
        n = int(match.group(2)) - (1 if match.group(1) == "sl" else 0)
        if 1 <= n <= 4:
            cartan = [[2 if i == j else -1 if abs(i - j) == 1 else 0 for j in range(n)] for i in range(n)]
            return cartan, [1] * n
    if key in _NAMED_CARTAN:
        cartan, d = _NAMED_CARTAN[key]
        return [list(row) for row in cartan], list(d)
    logger.error(f"Unknown Cartan type: {name}")
    raise ValueError(f"Unknown Cartan type: {name}. Valid values: a1..a4, sl2..sl5, b2, c2, g2")


def _check_cartan(cartan: Sequence[Sequence[int]]) -> None:
    n = len(cartan)
    if n == 0 or any(len(row) != n for row in cartan):
        raise ValueError("the Cartan matrix must be a non-empty square matrix")
    for i in range(n):
        if cartan[i][i] != 2:
            raise PreconditionError(f"a_{i + 1}{i + 1} = {cartan[i][i]}, expected 2")
        for j in range(n):
            if i != j and (cartan[i][j] > 0 or (cartan[i][j] == 0) != (cartan[j][i] == 0)):
                raise PreconditionError(f"({i + 1}, {j + 1}) entries do not form a generalized Cartan matrix")


def symmetrizer(cartan: Sequence[Sequence[int]]) -> List[int]:
    """Positive integers d with d_i a_ij = d_j a_ji, found along the Dynkin graph."""
    _check_cartan(cartan)
    n = len(cartan)
    d: List[Optional[Fraction]] = [None] * n
    for root in range(n):
        if d[root] is not None:
            continue
        d[root] = Fraction(1)
        stack = [root]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j == i or cartan[i][j] == 0:
                    continue
                value = d[i] * cartan[i][j] / cartan[j][i]
                if d[j] is None:
                    d[j] = value
                    stack.append(j)
                elif d[j] != value:
                    logger.error(f"Cartan matrix is not symmetrizable at ({i + 1}, {j + 1})")
                    raise PreconditionError("the Cartan matrix is not symmetrizable")
    scale = lcm(*(x.denominator for x in d))
    return [int(x * scale) for x in d]


def cartan_to_esc(cartan: Sequence[Sequence[int]], d: Optional[Sequence[int]] = None,
                  q: Optional[Scalar] = None, name: str = "cartan") -> FLData:
    """
    FL-quantum-group data of a symmetrizable Cartan matrix over the free abelian
    group on xi_1..xi_n: J^(2) = {n+1..2n} with sigma(i) = i + n, xi_sigma(i) = xi_i^-1,
    g_i = g_sigma(i) = xi_i^2, chi_i(xi_j) = q^(-d_i a_ij), chi_sigma(i) = chi_i^-1 and
    r_ij = 1 - a_ij.

    Args:
        cartan (Sequence[Sequence[int]]): Generalized Cartan matrix.
        d (Sequence[int], optional): Symmetrizers; computed when omitted.
        q (Scalar, optional): Parameter, nonzero and not a root of unity. Defaults to v.
        name (str): Name of the resulting ESC.

    Returns:
        FLData: Validated data; validate_fl passes FL1-FL7 on it.

    Raises:
        PreconditionError: If A is not a symmetrizable generalized Cartan matrix or q is a root of unity.
    """
    _check_cartan(cartan)
    n = len(cartan)
    d = symmetrizer(cartan) if d is None else [int(x) for x in d]
    if len(d) != n or any(x <= 0 for x in d):
        raise PreconditionError(f"expected {n} positive symmetrizers, got {list(d)}")
    for i in range(n):
        for j in range(n):
            if d[i] * cartan[i][j] != d[j] * cartan[j][i]:
                logger.error(f"d_{i + 1} a_{i + 1}{j + 1} != d_{j + 1} a_{j + 1}{i + 1}")
                raise PreconditionError(f"the Cartan matrix is not symmetrized by d = {list(d)}")
    q = Scalar.v() if q is None else Scalar.coerce(q)
    if not q or q.multiplicative_order() != inf:
        raise PreconditionError(f"q = {q} must be nonzero and not a root of unity")

    group = Group.free_abelian(n)
    xi = [group.generator(i) for i in range(n)]
    characters = [Character(group, tuple(q ** (-d[i] * cartan[i][j]) for j in range(n))) for i in range(n)]
    g = [group.power(x, 2) for x in xi]
    esc = ESC(group=group, g=g + g, chi=characters + [ch.inverse() for ch in characters],
              labels=[str(i + 1) for i in range(n)] + [f"{i + 1}'" for i in range(n)], name=name)
    block = FLBlock(j1=list(range(n)), j2=list(range(n, 2 * n)),
                    cartan=[[int(a) for a in row] for row in cartan], d=list(d), q=q)
    r = {(i, j): 1 - cartan[i][j] for i in range(n) for j in range(n) if i != j}
    fl = FLData(esc=esc, blocks=[block], xi=xi + [group.inverse(x) for x in xi], r=r)
    logger.info(f"Built FL-quantum-group data of rank {n} for {name}")
    return fl


# ---------------------------------------------------------------------- shared relator data


def _denominator(fl: FLData, i: int) -> Scalar:
    """chi_i(xi_i) - chi_i(xi_i)^-1, the divisor of the commutator relations."""
    value = fl.chi_xi(i, i)
    result = value - value.inverse()
    if not result:
        label = fl.esc.labels[i]
        logger.error(f"Zero denominator for index {label}")
        raise PreconditionError(f"chi_{label}(xi_{label}) - chi_{label}(xi_{label})^-1 = 0")
    return result


def _serre_terms(fl: FLData, i: int, j: int) -> Optional[List[Tuple[Scalar, Tuple[int, ...]]]]:
    """
    Coefficients and words of sum (-1)^m [r m] i^(r-m) j i^m at base chi_i(xi_i^-1),
    or None when r_ij - 1 reaches the order of chi_i(g_i).
    """
    r = fl.r_value(i, j)
    if r is None:
        raise PreconditionError(f"r is missing for ({fl.esc.labels[i]}, {fl.esc.labels[j]})")
    if r - 1 >= fl.esc.q(i, i).multiplicative_order():
        logger.debug(f"No Serre relation for ({fl.esc.labels[i]}, {fl.esc.labels[j]}): r - 1 >= ord")
        return None
    base = fl.chi_xi(i, i).inverse()
    return [(Scalar.rational((-1) ** m) * q_binomial(r, m, base, SYMMETRIC), (i,) * (r - m) + (j,) + (i,) * m)
            for m in range(r + 1)]


def _serre_pairs(fl: FLData) -> List[Tuple[int, int]]:
    pairs = []
    for block in fl.blocks:
        for half in (block.j1, block.j2):
            pairs.extend((i, j) for i in half for j in half if i != j)
    return pairs


def fl_semipath(fl: FLData, cutoff: Optional[int] = None) -> SemipathAlgebra:
    """kQ^s of the FL data, with a cutoff large enough for every Serre relator."""
    top = max(fl.r.values(), default=1) + 1
    cutoff = max(config.DEGREE_CUTOFF if cutoff is None else cutoff, top)
    return SemipathAlgebra.from_esc(fl.esc, cutoff)


@dataclass
class Relation:
    """A named defining relation; the element is set equal to zero."""

    name: str
    kind: str
    element: LinearCombination


def build_ideal(fl: FLData, algebra: Optional[SemipathAlgebra] = None, validate: bool = True) -> List[Relation]:
    """
    Generators of the ideal I of kQ^s: the twisted commutators
    chi_j(xi_i) E_i E_j - chi_i(xi_j)^-1 E_j E_i - delta (g_i^2 - 1)/(chi_i(xi_i) - chi_i(xi_i)^-1)
    for i in J_u, j in J_u', and the q-Serre sums inside J_u and inside J_u'.

    Raises:
        PreconditionError: If the data is not of FL-free type (when validating) or a denominator vanishes.
    """
    if validate:
        require_fl_free(fl)
    algebra = algebra or fl_semipath(fl)
    e = fl.esc
    group = fl.group
    identity = group.identity
    relators = []
    for block in fl.blocks:
        for i in block.j1:
            c = _denominator(fl, i)
            for j in block.j2:
                element = (algebra.word(identity, i, j).scale(fl.chi_xi(j, i))
                           - algebra.word(identity, j, i).scale(fl.chi_xi(i, j).inverse()))
                if fl.sigma(i) == j:
                    element = element - (algebra.vertex(group.power(e.g[i], 2)) - algebra.one()).scale(c.inverse())
                relators.append(Relation(f"E{e.labels[i]}E{e.labels[j]}", COMMUTATOR, element))
    for i, j in _serre_pairs(fl):
        terms = _serre_terms(fl, i, j)
        if terms is None:
            continue
        element = LinearCombination.from_pairs((c, TensorWord(identity, w)) for c, w in terms)
        relators.append(Relation(f"serre({e.labels[i]},{e.labels[j]})", SERRE, element))
    logger.info(f"Ideal of {e.name}: {len(relators)} relators")
    return relators


# ---------------------------------------------------------------------- the algebra U


@dataclass(frozen=True)
class UGenerator:
    """K_i^(+-1) for i in J^(1), or X_j for j in J."""

    kind: str
    index: int
    power: int = 1


@dataclass(frozen=True)
class UWord:
    """K^k X_w: a K-monomial (exponents over J^(1)) followed by X-letters."""

    k: Tuple[int, ...]
    letters: Tuple[int, ...] = ()


def _add(a: Tuple[int, ...], b: Tuple[int, ...]) -> Tuple[int, ...]:
    return tuple(x + y for x, y in zip(a, b))


class RewritingSystem:
    """
    Rules X_w -> sum c K^k X_u applied leftmost first. Each rule replaces a word by
    smaller ones in the degree-lexicographic order, so reduction terminates; the K
    part of a replacement is moved left through the prefix by commute(prefix, k).
    """

    def __init__(self, commute: Callable[[Tuple[int, ...], Tuple[int, ...]], Scalar],
                 step_bound: Optional[int] = None):
        self.commute = commute
        self.step_bound = config.REWRITE_STEP_BOUND if step_bound is None else step_bound
        self.rules: Dict[Tuple[int, ...], List[Tuple[Scalar, Tuple[int, ...], Tuple[int, ...]]]] = {}
        self.names: Dict[Tuple[int, ...], str] = {}
        self._lengths: List[int] = []

    def add_rule(self, name: str, lhs: Tuple[int, ...],
                 rhs: List[Tuple[Scalar, Tuple[int, ...], Tuple[int, ...]]]) -> bool:
        if lhs in self.rules:
            logger.debug(f"Rule {name} has the same left side as {self.names[lhs]}; kept the first")
            return False
        self.rules[lhs] = rhs
        self.names[lhs] = name
        self._lengths = sorted({len(w) for w in self.rules})
        return True

    def find(self, letters: Tuple[int, ...]) -> Optional[Tuple[int, Tuple[int, ...]]]:
        for position in range(len(letters)):
            for length in self._lengths:
                window = letters[position:position + length]
                if len(window) == length and window in self.rules:
                    return position, window
        return None

    def is_irreducible(self, letters: Tuple[int, ...]) -> bool:
        return self.find(letters) is None

    def reduce(self, x: LinearCombination) -> LinearCombination:
        normal = LinearCombination()
        current = x
        steps = 0
        while current:
            pending = []
            for key, c in current.items():
                match = self.find(key.letters)
                if match is None:
                    normal = normal + LinearCombination.monomial(key, c)
                    continue
                steps += 1
                if steps > self.step_bound:
                    logger.error(f"Rewriting did not finish within {self.step_bound} steps")
                    raise BoundExceededError("rewrite steps", steps, self.step_bound)
                position, lhs = match
                prefix, suffix = key.letters[:position], key.letters[position + len(lhs):]
                for coefficient, k, word in self.rules[lhs]:
                    pending.append((c * coefficient * self.commute(prefix, k),
                                    UWord(_add(key.k, k), prefix + word + suffix)))
            current = LinearCombination.from_pairs(pending)
        logger.debug(f"Reduced in {steps} rewrite steps")
        return normal


class QuantumEnvelope(GradedHopfAlgebra):
    """
    The algebra U generated by K_i^(+-1) and X_j with

        X_i X_j - X_j X_i = delta_{sigma(i), j} (K_i^2 - K_i^-2)/(chi_i(xi_i) - chi_i(xi_i)^-1),
        K_i K_sigma(i) = 1,  chi_j(xi_i) K_i X_j = X_j K_i,  q-Serre relations,

    and Delta(X_j) = X_j (x) K_sigma(p) + K_p (x) X_j, S(X_j) = -chi_j(xi_p) X_j, where
    p is the J^(1) index attached to j. Elements are kept as K^k X_w in normal form.
    """

    name = "uq"

    def __init__(self, fl: FLData, step_bound: Optional[int] = None):
        self.fl = fl
        self.esc = fl.esc
        self.group = fl.group
        self.j1 = fl.j1
        self.indices = fl.j1 + fl.j2
        self._k_position = {i: t for t, i in enumerate(self.j1)}
        self._rank = {j: t for t, j in enumerate(self.indices)}
        xi_rows = Matrix([list(fl.xi[i]) for i in self.j1])
        if xi_rows.shape[1] != len(self.j1) or xi_rows.det() == 0:
            raise PreconditionError("the xi_i, i in J^(1), must be a basis of the group")
        self._xi_inverse = xi_rows.inv()
        self.rules = RewritingSystem(self._commute, step_bound)
        self.generators: List[UGenerator] = (
            [UGenerator("K", i, p) for i in self.j1 for p in (1, -1)] + [UGenerator("X", j) for j in self.indices])
        self.relations: List[Relation] = []
        self._antipodes: Dict[UWord, LinearCombination] = {}
        self._build()

    # ------------------------------------------------------------------ group bookkeeping

    def _unit_vector(self, i: int, power: int = 1) -> Tuple[int, ...]:
        vector = [0] * len(self.j1)
        vector[self._k_position[i]] = power
        return tuple(vector)

    def k_vector(self, i: int) -> Tuple[int, ...]:
        """Exponents of K_i for any i in J (K_sigma(i) = K_i^-1)."""
        if i in self._k_position:
            return self._unit_vector(i)
        return self._unit_vector(self.fl.sigma_inverse(i), -1)

    def xi_of(self, k: Tuple[int, ...]) -> Element:
        group = self.group
        return group.product_of(group.power(self.fl.xi[i], c) for i, c in zip(self.j1, k))

    def coordinates(self, g: Element) -> Tuple[int, ...]:
        """The K-exponents of Phi(g): g = prod xi_i^(c_i)."""
        row = Matrix([list(g)]) * self._xi_inverse
        if any(not value.is_integer for value in row):
            raise PreconditionError(f"{self.group.format_element(g)} is not an integer combination of the xi_i")
        return tuple(int(value) for value in row)

    def _commute(self, letters: Tuple[int, ...], k: Tuple[int, ...]) -> Scalar:
        """X_w K^k = chi_w(xi^k) K^k X_w."""
        if not letters or not any(k):
            return Scalar.one()
        x = self.xi_of(k)
        scalar = Scalar.one()
        for j in letters:
            scalar = scalar * self.esc.chi[j](x)
        return scalar

    # ------------------------------------------------------------------ presentation

    def _build(self) -> None:
        fl, e = self.fl, self.esc
        zero = self._unit_vector(self.j1[0], 0)
        for block in fl.blocks:
            for i in block.j1:
                c = _denominator(fl, i)
                for j in block.j2:
                    # X_j X_i -> X_i X_j - delta (K_i^2 - K_i^-2)/c
                    rhs = [(Scalar.one(), zero, (i, j))]
                    tokens = [(1, (UGenerator("X", i), UGenerator("X", j))), (-1, (UGenerator("X", j), UGenerator("X", i)))]
                    if fl.sigma(i) == j:
                        rhs += [(-c.inverse(), self._unit_vector(i, 2), ()), (c.inverse(), self._unit_vector(i, -2), ())]
                        tokens += [(-c.inverse(), (UGenerator("K", i),) * 2), (c.inverse(), (UGenerator("K", i, -1),) * 2)]
                    self.rules.add_rule(f"X{e.labels[j]}X{e.labels[i]}", (j, i), rhs)
                    self.relations.append(Relation(f"[X{e.labels[i]},X{e.labels[j]}]", COMMUTATOR,
                                                   LinearCombination.from_pairs(tokens)))
        for i in self.j1:
            self.relations.append(Relation(f"K{e.labels[i]}K{e.labels[i]}^-1", K_INVERSE, LinearCombination.from_pairs(
                [(1, (UGenerator("K", i), UGenerator("K", i, -1))), (-1, ())])))
            for j in self.indices:
                self.relations.append(Relation(f"K{e.labels[i]}X{e.labels[j]}", K_COMMUTATION, LinearCombination.from_pairs(
                    [(fl.chi_xi(j, i), (UGenerator("K", i), UGenerator("X", j))),
                     (-1, (UGenerator("X", j), UGenerator("K", i)))])))
        for i, j in _serre_pairs(fl):
            terms = _serre_terms(fl, i, j)
            if terms is None:
                continue
            name = f"serre({e.labels[i]},{e.labels[j]})"
            lead_coefficient, lead = max(terms, key=lambda term: [self._rank[x] for x in term[1]])
            rhs = [(-c / lead_coefficient, zero, w) for c, w in terms if w != lead]
            self.rules.add_rule(name, lead, rhs)
            self.relations.append(Relation(name, SERRE, LinearCombination.from_pairs(
                (c, tuple(UGenerator("X", x) for x in w)) for c, w in terms)))
        logger.info(f"U for {e.name}: {len(self.generators)} generators, {len(self.relations)} relations, "
                    f"{len(self.rules.rules)} rewriting rules")

    def label(self, token: UGenerator) -> str:
        text = f"{token.kind}{self.esc.labels[token.index]}"
        return text + "^-1" if token.power == -1 else text

    def render_tokens(self, tokens: Tuple[UGenerator, ...]) -> str:
        return "·".join(self.label(t) for t in tokens) if tokens else "1"

    def count(self, kind: str) -> int:
        return sum(1 for relation in self.relations if relation.kind == kind)

    def to_dict(self) -> Dict[str, object]:
        """The presentation: generators, relations (each = 0) and the coalgebra on generators."""
        coalgebra = {}
        for token in self.generators:
            key = self.token_key(token)
            coalgebra[self.label(token)] = {
                "delta": self.format_tensor(self.comultiply_basis(key)),
                "epsilon": self.counit_basis(key).to_string(),
                "antipode": self.format(self.antipode_basis(key)),
            }
        return {
            "generators": [self.label(t) for t in self.generators],
            "relations": [{"name": r.name, "kind": r.kind,
                           "relation": f"{r.element.to_string(self.render_tokens)} = 0"} for r in self.relations],
            "coalgebra": coalgebra,
        }

    # ------------------------------------------------------------------ elements

    def token_key(self, token: UGenerator) -> UWord:
        if token.kind == "K":
            return UWord(self._unit_vector(token.index, token.power))
        return UWord(self._unit_vector(self.j1[0], 0), (token.index,))

    def k_element(self, i: int, power: int = 1) -> LinearCombination:
        return self.element(UWord(tuple(power * c for c in self.k_vector(i))))

    def x_element(self, j: int) -> LinearCombination:
        return self.element(UWord(self._unit_vector(self.j1[0], 0), (j,)))

    def evaluate(self, x: LinearCombination) -> LinearCombination:
        """Normal form of a combination of generator words."""
        result = LinearCombination()
        for tokens, c in x.items():
            result = result + self.product(*(self.element(self.token_key(t)) for t in tokens)).scale(c)
        return result

    # ------------------------------------------------------------------ algebra interface

    def basis(self, cutoff: int) -> List[UWord]:
        ks = list(product(range(-config.SAMPLE_RADIUS, config.SAMPLE_RADIUS + 1), repeat=len(self.j1)))
        words = [w for d in range(cutoff + 1) for w in product(self.indices, repeat=d) if self.rules.is_irreducible(w)]
        return [UWord(k, w) for w in words for k in ks]

    def degree(self, key: UWord) -> int:
        return len(key.letters)

    def unit_key(self) -> UWord:
        return UWord(self._unit_vector(self.j1[0], 0))

    def render(self, key: UWord) -> str:
        parts = []
        for i, c in zip(self.j1, key.k):
            if c:
                parts.append(f"K{self.esc.labels[i]}" + ("" if c == 1 else f"^{c}"))
        parts.extend(f"X{self.esc.labels[j]}" for j in key.letters)
        return "·".join(parts) or "1"

    def sort_key(self, key: UWord):
        return (len(key.letters), [self._rank[j] for j in key.letters], key.k)

    def multiply_basis(self, a: UWord, b: UWord) -> LinearCombination:
        scalar = self._commute(a.letters, b.k)
        return self.rules.reduce(LinearCombination.monomial(UWord(_add(a.k, b.k), a.letters + b.letters), scalar))

    def _x_coproduct(self, j: int) -> LinearCombination:
        p = self.fl.partner(j)
        x = UWord(self.unit_key().k, (j,))
        return LinearCombination.from_pairs([
            (1, (x, UWord(self._unit_vector(p, -1)))),
            (1, (UWord(self._unit_vector(p)), x)),
        ])

    def comultiply_basis(self, key: UWord) -> LinearCombination:
        result = LinearCombination.monomial((UWord(key.k), UWord(key.k)))
        for j in key.letters:
            result = self.tensor_multiply(result, self._x_coproduct(j))
        return result

    def counit_basis(self, key: UWord) -> Scalar:
        return Scalar.zero() if key.letters else Scalar.one()

    def antipode_basis(self, key: UWord) -> LinearCombination:
        """S(K^k X_w) = S(X_wt) ... S(X_w1) K^-k."""
        cached = self._antipodes.get(key)
        if cached is not None:
            return cached
        result = self.one()
        for j in key.letters:
            s_letter = self.x_element(j).scale(-self.fl.chi_xi(j, self.fl.partner(j)))
            result = self.multiply(s_letter, result)
        result = self.multiply(result, self.element(UWord(tuple(-c for c in key.k))))
        self._antipodes[key] = result
        return result

    # ------------------------------------------------------------------ Phi and Psi

    def phi(self, x: LinearCombination) -> LinearCombination:
        """Phi: kQ^s -> U, xi_i -> K_i and g E_j -> Phi(g) K_p X_j."""
        result = LinearCombination()
        for key, c in x.items():
            factors = [self.element(UWord(self.coordinates(key.g)))]
            for j in key.letters:
                factors.append(self.multiply(self.k_element(self.fl.partner(j)), self.x_element(j)))
            result = result + self.product(*factors).scale(c)
        return result

    def psi_generator(self, algebra: SemipathAlgebra, token: UGenerator) -> LinearCombination:
        group = self.group
        if token.kind == "K":
            return algebra.vertex(group.power(self.fl.xi[token.index], token.power))
        return algebra.word(group.inverse(self.fl.xi[self.fl.partner(token.index)]), token.index)

    def psi(self, algebra: SemipathAlgebra, x: LinearCombination) -> LinearCombination:
        """Psi: U -> kQ^s, K_i -> xi_i and X_j -> xi_p^-1 E_j, on normal forms."""
        result = LinearCombination()
        for key, c in x.items():
            factors = [algebra.vertex(self.xi_of(key.k))]
            factors.extend(self.psi_generator(algebra, UGenerator("X", j)) for j in key.letters)
            result = result + algebra.product(*factors).scale(c)
        return result

    def psi_tokens(self, algebra: SemipathAlgebra, x: LinearCombination) -> LinearCombination:
        """Psi on a combination of generator words."""
        result = LinearCombination()
        for tokens, c in x.items():
            result = result + algebra.product(*(self.psi_generator(algebra, t) for t in tokens)).scale(c)
        return result


def build_U(fl: FLData, validate: bool = True, step_bound: Optional[int] = None) -> QuantumEnvelope:
    """
    Builds the presentation of U with its rewriting rules and coalgebra.

    Raises:
        PreconditionError: If the data is malformed, not of FL-free type or a denominator vanishes.
    """
    if validate:
        require_fl_free(fl)
    return QuantumEnvelope(fl, step_bound)


def phi_map(w: LinearCombination, fl: FLData, envelope: Optional[QuantumEnvelope] = None) -> LinearCombination:
    envelope = envelope or build_U(fl)
    return envelope.phi(w)


# ---------------------------------------------------------------------- verification


def verify_phi_kills_I(fl: FLData, envelope: Optional[QuantumEnvelope] = None) -> Report:
    """
    Maps every generator of I through Phi and reduces in U. The target may be the
    algebra of other data over the same group, which is how a wrong r_ij shows up as
    a nonzero residue.
    """
    report = Report(command="phi-kills-ideal")
    report.results["fl_types"] = validate_fl(fl).results["types"]
    envelope = envelope or build_U(fl, validate=False)
    relators = build_ideal(fl, validate=False)
    for relator in relators:
        residue = envelope.phi(relator.element)
        report.add(relator.name, residue.is_zero(), relator.kind,
                   witness=None if residue.is_zero() else envelope.format(residue))
    report.results["relators"] = len(relators)
    logger.info(f"Phi(I) = 0 for {fl.esc.name}: {'pass' if report.passed else 'FAIL'}")
    return report


def psi_phi_roundtrip(fl: FLData, envelope: Optional[QuantumEnvelope] = None,
                      algebra: Optional[SemipathAlgebra] = None) -> Report:
    """Psi(Phi(x)) = x on xi_i^(+-1) and E_j, and Phi(Psi(t)) = t on K_i^(+-1) and X_j."""
    envelope = envelope or build_U(fl)
    algebra = algebra or fl_semipath(fl)
    group, e = fl.group, fl.esc
    report = Report(command="psi-phi-roundtrip")

    sources = [(f"xi{e.labels[i]}^{p}", algebra.vertex(group.power(fl.xi[i], p))) for i in fl.j1 for p in (1, -1)]
    sources += [(f"E{e.labels[j]}", algebra.word(group.identity, j)) for j in envelope.indices]
    failure = next((name for name, x in sources if envelope.psi(algebra, envelope.phi(x)) != x), None)
    report.add("Ψ∘Φ=id", failure is None, witness=failure)

    failure = None
    for token in envelope.generators:
        image = envelope.phi(envelope.psi_generator(algebra, token))
        if image != envelope.element(envelope.token_key(token)):
            failure = envelope.label(token)
            break
    report.add("Φ∘Ψ=id", failure is None, witness=failure)
    return report


def _in_ideal(algebra: SemipathAlgebra, relators: List[Relation], x: LinearCombination) -> bool:
    """x lies in the span of the translates h . rho of the relators."""
    if x.is_zero():
        return True
    group = algebra.group
    spanning = []
    for relator in relators:
        shifts = {group.multiply(t.g, group.inverse(s.g)) for t in x.keys() for s in relator.element.keys()}
        spanning.extend(algebra.multiply(algebra.vertex(h), relator.element) for h in sorted(shifts))
    base = rank(spanning)
    return rank(spanning + [x]) == base


def psi_relations_check(fl: FLData, envelope: Optional[QuantumEnvelope] = None,
                        algebra: Optional[SemipathAlgebra] = None) -> Report:
    """Psi of every relation of U lies in I, so Psi descends to U."""
    envelope = envelope or build_U(fl)
    algebra = algebra or fl_semipath(fl)
    relators = build_ideal(fl, algebra, validate=False)
    report = Report(command="psi-relations")
    for relation in envelope.relations:
        image = envelope.psi_tokens(algebra, relation.element)
        inside = _in_ideal(algebra, relators, image)
        report.add(relation.name, inside, relation.kind, witness=None if inside else algebra.format(image))
    return report


def hopf_consistency_check(envelope: QuantumEnvelope) -> Report:
    """Counit, coassociativity and both antipode laws on the generators of U."""
    keys = [envelope.token_key(t) for t in envelope.generators]
    return verify_on_keys(envelope, keys, command="uq-hopf")


def textbook_sl2_check(envelope: QuantumEnvelope) -> Report:
    """
    For rank-one data, E = X_1, F = -X_1', K = K_1^2 and Q = chi_1(xi_1)^-1 satisfy
    KEK^-1 = Q^2 E, KFK^-1 = Q^-2 F and EF - FE = (K - K^-1)/(Q - Q^-1).
    """
    report = Report(command="uq-sl2")
    fl = envelope.fl
    if len(fl.blocks) != 1 or len(fl.j1) != 1:
        raise PreconditionError("the U_q(sl2) comparison needs rank-one data")
    i, j = fl.j1[0], fl.sigma(fl.j1[0])
    big_q = fl.chi_xi(i, i).inverse()
    e = envelope.x_element(i)
    f = envelope.x_element(j).scale(-1)
    k = envelope.k_element(i, 2)
    k_inverse = envelope.k_element(i, -2)

    report.add("generators", len(envelope.generators) == 4, f"{len(envelope.generators)} generators")
    report.add("relation_kinds", envelope.count(COMMUTATOR) == 1 and envelope.count(SERRE) == 0,
               f"{envelope.count(COMMUTATOR)} commutator, {envelope.count(SERRE)} Serre")
    report.add("KEK^-1", envelope.product(k, e, k_inverse) == e.scale(big_q ** 2))
    report.add("KFK^-1", envelope.product(k, f, k_inverse) == f.scale(big_q ** -2))
    commutator = envelope.multiply(e, f) - envelope.multiply(f, e)
    expected = (k - k_inverse).scale((big_q - big_q.inverse()).inverse())
    report.add("EF-FE", commutator == expected,
               witness=None if commutator == expected else envelope.format(commutator))
    return report


# ---------------------------------------------------------------------- primitivity


def _pair_algebra(group: Group, g1: Element, g2: Element, chi1: Character, chi2: Character,
                  degree: int) -> BraidedAlgebra:
    """Tensor algebra of x_1, x_2 with coaction g_j (x) x_j and h . x_j = chi_j(h^-1) x_j."""
    esc = ESC(group=group, g=[g1, g2], chi=[chi1, chi2], labels=["1", "2"], name="pair")
    return BraidedAlgebra(YDModule(esc).inverse(), TENSOR, cutoff=degree)


def primitive_residue(algebra: GradedHopfAlgebra, x: LinearCombination) -> LinearCombination:
    """Delta(x) - x (x) 1 - 1 (x) x."""
    unit = algebra.unit_key()
    trivial = LinearCombination.from_pairs(
        [(c, (k, unit)) for k, c in x.items()] + [(c, (unit, k)) for k, c in x.items()])
    return algebra.comultiply(x) - trivial


def bosonized_residue(braided: BraidedAlgebra, x: LinearCombination, beta: Scalar) -> LinearCombination:
    """
    For homogeneous x of degree g, Delta(z) - z (x) 1 - g (x) z in R # kG, where
    z = x # 1 - beta (g - 1).
    """
    if x.is_zero():
        return LinearCombination()
    bosonization = Biproduct(braided)
    group = braided.module.group
    identity = group.identity
    degree = braided.module.word_degree(next(iter(x.keys())))
    z = LinearCombination.from_pairs([(c, (w, identity)) for w, c in x.items()]
                                     + [(-beta, ((), degree)), (beta, ((), identity))])
    unit, grouplike = ((), identity), ((), degree)
    expected = LinearCombination.from_pairs([(c, (k, unit)) for k, c in z.items()]
                                            + [(c, (grouplike, k)) for k, c in z.items()])
    return bosonization.comultiply(z) - expected


def braided_adjoint(algebra: BraidedAlgebra, i: int, y: LinearCombination) -> LinearCombination:
    """(ad_c x_i) y = x_i y - (g_i . y) x_i."""
    module = algebra.module
    gi = module.coaction(i)
    x = algebra.generator(i)
    result = LinearCombination()
    for w, c in y.items():
        word = algebra.element(w)
        term = algebra.multiply(x, word) - algebra.multiply(word, x).scale(module.word_character(w, gi))
        result = result + term.scale(c)
    return result


def serre_primitive_check(group: Group, g1: Element, g2: Element, chi1: Character, chi2: Character,
                          r: int) -> Report:
    """
    Forms sum_m (-1)^m [r m]_s x_1^(r-m) x_2 x_1^m with s = sqrt(chi_1(g_1))^-1 in the
    braided tensor algebra and checks that it is primitive, that it equals
    (ad_c x_1)^r x_2, and that it is (1, g_1^r g_2)-primitive in the bosonization.
    The braiding conditions are reported first; the element is computed either way.

    Raises:
        PreconditionError: If chi_1(g_1) has no square root in the scalar field.
    """
    if r < 1:
        raise ValueError(f"r must be positive, got {r}")
    report = Report(command="serre")
    q11 = chi1(g1)
    root = q11.sqrt()
    if not (root ** (r - 1) * chi2(g1)).is_one() and ((-root) ** (r - 1) * chi2(g1)).is_one():
        root = -root
    order = q11.multiplicative_order()
    report.add("braiding_condition", (chi2(g1) * chi1(g2) * q11 ** (r - 1)).is_one(),
               "chi2(g1) chi1(g2) chi1(g1)^(r-1) = 1")
    report.add("root_condition", (root ** (r - 1) * chi2(g1)).is_one(), "sqrt(chi1(g1))^(r-1) chi2(g1) = 1")
    report.add("order_condition", r - 1 < order, f"r - 1 < ord(chi1(g1)) = {order}")
    if not report.passed:
        logger.warning(f"Serre conditions fail for r = {r}: {[c.name for c in report.failures()]}")

    algebra = _pair_algebra(group, g1, g2, chi1, chi2, r + 1)
    s = root.inverse()
    serre = LinearCombination.from_pairs(
        (Scalar.rational((-1) ** m) * q_binomial(r, m, s, SYMMETRIC), (0,) * (r - m) + (1,) + (0,) * m)
        for m in range(r + 1))
    residue = primitive_residue(algebra, serre)
    report.add("primitive", residue.is_zero(), witness=None if residue.is_zero() else algebra.format_tensor(residue))

    adjoint = algebra.generator(1)
    for _ in range(r):
        adjoint = braided_adjoint(algebra, 0, adjoint)
    report.add("adjoint_form", adjoint == serre, witness=None if adjoint == serre else algebra.format(adjoint))

    skew = bosonized_residue(algebra, serre, Scalar.zero())
    report.add("biproduct_primitive", skew.is_zero(), "(1, g1^r g2)-primitive in R # kG")
    report.results.update({"r": r, "element": algebra.format(serre), "primitive": residue.is_zero()})
    logger.info(f"Serre element for r = {r}: {'primitive' if residue.is_zero() else 'not primitive'}")
    return report


def skew_commutator_primitive_check(group: Group, g1: Element, g2: Element, chi1: Character,
                                    chi2: Character, beta: Scalar = Scalar.one()) -> Report:
    """
    sqrt(chi2(g1)) x1 x2 - sqrt(chi1(g2)) x2 x1 is primitive when the two roots
    multiply to 1, and subtracting beta (g1 g2 - 1) gives a (1, g1 g2)-primitive of R # kG.
    """
    report = Report(command="skew-commutator")
    a = chi2(g1).sqrt()
    b = chi1(g2).sqrt()
    if not (a * b).is_one() and (a * -b).is_one():
        b = -b
    report.add("root_condition", (a * b).is_one(), "sqrt(chi1(g2)) sqrt(chi2(g1)) = 1")
    algebra = _pair_algebra(group, g1, g2, chi1, chi2, 2)
    element = algebra.word(0, 1).scale(a) - algebra.word(1, 0).scale(b)
    residue = primitive_residue(algebra, element)
    report.add("primitive", residue.is_zero(), witness=None if residue.is_zero() else algebra.format_tensor(residue))
    skew = bosonized_residue(algebra, element, Scalar.coerce(beta))
    report.add("biproduct_primitive", skew.is_zero(), f"(1, g1 g2)-primitive with beta = {beta}")
    report.results["element"] = algebra.format(element)
    return report


def fl_serre_checks(fl: FLData) -> Report:
    """The Serre primitivity check for every ordered pair i != j inside each J_u."""
    report = Report(command="fl-serre")
    e = fl.esc
    for block in fl.blocks:
        for i in block.j1:
            for j in block.j1:
                if i == j:
                    continue
                sub = serre_primitive_check(fl.group, e.g[i], e.g[j], e.chi[i], e.chi[j], fl.r_value(i, j))
                report.add(f"serre({e.labels[i]},{e.labels[j]})", sub.passed,
                           witness=None if sub.passed else ", ".join(c.name for c in sub.failures()))
    return report


# ---------------------------------------------------------------------- pipeline


def _summary(report: Report, name: str, sub: Report, prefix: str) -> None:
    failed = sub.failures()
    report.add(name, not failed, witness=failed[0].name if failed else None)
    report.extend(sub, prefix=prefix)


def quantum_group_report(fl: FLData, cutoff: Optional[int] = None) -> Report:
    """
    The full pipeline on FL data: validation, the presentation of U, Phi(I) = 0,
    both round trips, Psi of the relations, Hopf consistency on generators, the
    q-Serre primitivity checks and, for rank one, the U_q(sl2) comparison.
    """
    report = Report(command="uq")
    validation = validate_fl(fl)
    report.extend(validation)
    report.results["fl_types"] = validation.results["types"]
    envelope = build_U(fl)
    algebra = fl_semipath(fl, cutoff)
    presentation = envelope.to_dict()
    report.results["generators"] = presentation["generators"]
    report.results["relations"] = [r["relation"] for r in presentation["relations"]]
    report.results["coproducts"] = [f"Δ({label}) = {data['delta']}" for label, data in presentation["coalgebra"].items()]
    report.results["antipodes"] = [f"S({label}) = {data['antipode']}" for label, data in presentation["coalgebra"].items()]

    _summary(report, "Φ(I)=0", verify_phi_kills_I(fl, envelope), "phi:")
    report.extend(psi_phi_roundtrip(fl, envelope, algebra))
    _summary(report, "Ψ(relations)⊆I", psi_relations_check(fl, envelope, algebra), "psi:")
    _summary(report, "hopf", hopf_consistency_check(envelope), "hopf:")
    if len(fl.j1) == 1:
        _summary(report, "U_q(sl2)", textbook_sl2_check(envelope), "sl2:")
    report.extend(fl_serre_checks(fl))
    logger.info(f"uq pipeline for {fl.esc.name}: {'pass' if report.passed else 'FAIL'}")
    return report
