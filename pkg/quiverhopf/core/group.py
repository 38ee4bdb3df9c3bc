# quiverhopf/core/group.py
import logging
import re
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import permutations, product
from math import gcd, prod
from typing import Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

from quiverhopf import config
from quiverhopf.core.scalar import Scalar
from quiverhopf.exceptions import (
    BoundExceededError,
    PreconditionError,
    UnsupportedGroupError,
)

# Configure logger
logger = logging.getLogger(__name__)

CAYLEY = "cayley"
ABELIAN = "abelian"
FREE_ABELIAN = "free_abelian"

Element = Hashable  # int index for Cayley groups, tuple of ints otherwise

_VECTOR_PATTERN = re.compile(r"^g\^\[\s*(-?\d+(?:\s*,\s*-?\d+)*)?\s*\]$")
_POWER_PATTERN = re.compile(r"^g(?:\^(-?\d+))?$")
_INDEX_PATTERN = re.compile(r"^#(\d+)$")


@dataclass(frozen=True)
class Group:
    """
    A finite group given by a Cayley table or by abelian invariant factors, or a
    free abelian group of finite rank.

    Elements are table indices (Cayley) or integer exponent vectors (abelian kinds).
    """

    kind: str
    factors: Tuple[int, ...] = ()
    rank: int = 0
    table: Tuple[Tuple[int, ...], ...] = ()
    identity_index: int = 0
    name: str = field(default="G", compare=False)

    def __post_init__(self):
        if self.kind == CAYLEY:
            self._validate_table()
        elif self.kind == ABELIAN:
            if any(n < 2 for n in self.factors):
                raise ValueError(f"invariant factors must be >= 2, got {self.factors}")
        elif self.kind == FREE_ABELIAN:
            if self.rank < 1:
                raise ValueError(f"free abelian rank must be positive, got {self.rank}")
        else:
            raise ValueError(f"Unknown group kind: {self.kind}. Valid values: 'cayley', 'abelian', 'free_abelian'")

    # ------------------------------------------------------------------ constructors

    @classmethod
    def cyclic(cls, n: int) -> "Group":
        if n == 1:
            return cls.abelian([])
        return cls(ABELIAN, factors=(n,), name=f"Z{n}")

    @classmethod
    def abelian(cls, factors: Sequence[int]) -> "Group":
        factors = tuple(int(n) for n in factors)
        name = "x".join(f"Z{n}" for n in factors) or "1"
        return cls(ABELIAN, factors=factors, name=name)

    @classmethod
    def free_abelian(cls, rank: int) -> "Group":
        return cls(FREE_ABELIAN, rank=rank, name=f"Z^{rank}")

    @classmethod
    def cayley(cls, table: Sequence[Sequence[int]], identity: Optional[int] = None,
               name: str = "G") -> "Group":
        table = tuple(tuple(int(x) for x in row) for row in table)
        if identity is None:
            identity = next((e for e in range(len(table))
                             if all(table[e][x] == x for x in range(len(table)))), 0)
        return cls(CAYLEY, table=table, identity_index=identity, name=name)

    @classmethod
    def symmetric(cls, n: int) -> "Group":
        """S_n on lexicographically ordered permutations, (s*t)(i) = s(t(i))."""
        perms = list(permutations(range(n)))
        index = {p: k for k, p in enumerate(perms)}
        table = [[index[tuple(s[t[i]] for i in range(n))] for t in perms] for s in perms]
        return cls.cayley(table, identity=0, name=f"S{n}")

    def _validate_table(self) -> None:
        n = len(self.table)
        if n == 0 or any(len(row) != n for row in self.table):
            raise ValueError("Cayley table must be a non-empty square matrix")
        full = set(range(n))
        for row in self.table:
            if set(row) != full:
                raise ValueError("Cayley table is not a Latin square")
        for x in range(n):
            if set(self.table[r][x] for r in range(n)) != full:
                raise ValueError("Cayley table is not a Latin square")
        e = self.identity_index
        if any(self.table[e][x] != x or self.table[x][e] != x for x in range(n)):
            raise ValueError(f"#{e} is not a two-sided identity")
        t = self.table
        for a in range(n):
            for b in range(n):
                ab = t[a][b]
                for c in range(n):
                    if t[ab][c] != t[a][t[b][c]]:
                        raise ValueError(f"Cayley table is not associative at (#{a}, #{b}, #{c})")

    # ------------------------------------------------------------------ structure

    @property
    def is_finite(self) -> bool:
        return self.kind != FREE_ABELIAN

    @property
    def is_abelian(self) -> bool:
        if self.kind != CAYLEY:
            return True
        return self.center() == self.elements

    @cached_property
    def order(self) -> int:
        if self.kind == CAYLEY:
            return len(self.table)
        if self.kind == ABELIAN:
            return prod(self.factors)
        raise UnsupportedGroupError("free abelian groups are infinite")

    @cached_property
    def elements(self) -> Tuple[Element, ...]:
        if self.kind == CAYLEY:
            return tuple(range(len(self.table)))
        if self.kind == ABELIAN:
            return tuple(product(*(range(n) for n in self.factors)))
        raise UnsupportedGroupError("free abelian groups have no finite element list")

    @property
    def identity(self) -> Element:
        if self.kind == CAYLEY:
            return self.identity_index
        if self.kind == ABELIAN:
            return (0,) * len(self.factors)
        return (0,) * self.rank

    @property
    def ngens(self) -> int:
        return len(self.factors) if self.kind == ABELIAN else self.rank

    def generator(self, k: int) -> Element:
        """k-th standard generator of an abelian or free abelian group."""
        if self.kind == CAYLEY:
            raise UnsupportedGroupError("Cayley groups have no standard generators")
        vector = [0] * self.ngens
        vector[k] = 1
        return self.normalize(tuple(vector))

    def normalize(self, x: Element) -> Element:
        if self.kind == CAYLEY:
            if not isinstance(x, int) or not 0 <= x < len(self.table):
                raise ValueError(f"{x!r} is not an element of {self.name}")
            return x
        x = tuple(int(c) for c in x)
        if len(x) != self.ngens:
            raise ValueError(f"{x!r} has the wrong length for {self.name}")
        if self.kind == ABELIAN:
            return tuple(c % n for c, n in zip(x, self.factors))
        return x

    def multiply(self, a: Element, b: Element) -> Element:
        if self.kind == CAYLEY:
            return self.table[a][b]
        if self.kind == ABELIAN:
            return tuple((x + y) % n for x, y, n in zip(a, b, self.factors))
        return tuple(x + y for x, y in zip(a, b))

    def inverse(self, a: Element) -> Element:
        if self.kind == CAYLEY:
            return self._inverses[a]
        if self.kind == ABELIAN:
            return tuple((-x) % n for x, n in zip(a, self.factors))
        return tuple(-x for x in a)

    @cached_property
    def _inverses(self) -> Tuple[int, ...]:
        e = self.identity_index
        return tuple(next(b for b in range(len(self.table)) if self.table[a][b] == e)
                     for a in range(len(self.table)))

    def power(self, a: Element, k: int) -> Element:
        if self.kind != CAYLEY:
            return self.normalize(tuple(k * x for x in a))
        base = a if k >= 0 else self.inverse(a)
        result = self.identity
        for _ in range(abs(k)):
            result = self.multiply(result, base)
        return result

    def product_of(self, items: Iterable[Element]) -> Element:
        result = self.identity
        for x in items:
            result = self.multiply(result, x)
        return result

    def conjugate(self, x: Element, g: Element) -> Element:
        """g^-1 x g."""
        return self.multiply(self.inverse(g), self.multiply(x, g))

    def element_order(self, a: Element) -> float:
        if self.kind == FREE_ABELIAN:
            return 1 if a == self.identity else float("inf")
        if self.kind == ABELIAN:
            result = 1
            for x, n in zip(a, self.factors):
                k = n // gcd(x, n)
                result = result * k // gcd(result, k)
            return result
        k, power = 1, a
        while power != self.identity:
            power = self.multiply(power, a)
            k += 1
        return k

    @cached_property
    def exponent(self) -> int:
        if self.kind == ABELIAN:
            result = 1
            for n in self.factors:
                result = result * n // gcd(result, n)
            return result
        if self.kind == CAYLEY:
            result = 1
            for a in self.elements:
                k = self.element_order(a)
                result = result * k // gcd(result, k)
            return result
        raise UnsupportedGroupError("free abelian groups have infinite exponent")

    def center(self) -> Tuple[Element, ...]:
        if self.kind != CAYLEY:
            return self.elements
        return tuple(z for z in self.elements
                     if all(self.multiply(z, g) == self.multiply(g, z) for g in self.elements))

    def is_central(self, x: Element) -> bool:
        if self.kind != CAYLEY:
            return True
        return all(self.multiply(x, g) == self.multiply(g, x) for g in self.elements)

    def centralizer(self, x: Element) -> Tuple[Element, ...]:
        return tuple(g for g in self.elements if self.multiply(g, x) == self.multiply(x, g))

    def generated_subgroup(self, gens: Iterable[Element]) -> Tuple[Element, ...]:
        gens = list(gens)
        reached = {self.identity}
        frontier = [self.identity]
        while frontier:
            x = frontier.pop()
            for s in gens:
                y = self.multiply(x, s)
                if y not in reached:
                    reached.add(y)
                    frontier.append(y)
        return tuple(sorted(reached))

    @cached_property
    def generators(self) -> Tuple[Element, ...]:
        """A small generating set: the standard basis, or greedy in element order."""
        if self.kind != CAYLEY:
            return tuple(self.generator(k) for k in range(self.ngens))
        gens: List[Element] = []
        span = {self.identity}
        for x in self.elements:
            if x not in span:
                gens.append(x)
                span = set(self.generated_subgroup(gens))
            if len(span) == self.order:
                break
        return tuple(gens)

    def sample(self, radius: Optional[int] = None) -> Tuple[Element, ...]:
        """All elements for finite groups; the box [-r, r]^rank for free abelian ones."""
        if self.is_finite:
            return self.elements
        radius = config.SAMPLE_RADIUS if radius is None else radius
        return tuple(product(range(-radius, radius + 1), repeat=self.rank))

    # ------------------------------------------------------------------ literals

    def format_element(self, x: Element) -> str:
        if self.kind == CAYLEY:
            return f"#{x}"
        return "g^[" + ",".join(str(c) for c in x) + "]"

    def parse_element(self, text: str) -> Element:
        text = str(text).strip().replace(" ", "")
        if text in ("1", "e"):
            return self.identity
        match = _INDEX_PATTERN.match(text)
        if match and self.kind == CAYLEY:
            return self.normalize(int(match.group(1)))
        match = _VECTOR_PATTERN.match(text)
        if match and self.kind != CAYLEY:
            return self.normalize(tuple(int(c) for c in match.group(1).split(",")) if match.group(1) else ())
        match = _POWER_PATTERN.match(text)
        if match and self.kind != CAYLEY and self.ngens == 1:
            return self.normalize((int(match.group(1) or 1),))
        raise ValueError(f"invalid element literal {text!r} for {self.name}")

    def __str__(self):
        return self.name


# ---------------------------------------------------------------------- conjugacy


@dataclass(frozen=True)
class ConjClass:
    """A conjugacy class with its chosen representative u(C) and centralizer Z_u(C)."""

    representative: Element
    members: Tuple[Element, ...]
    centralizer: Tuple[Element, ...] = ()

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def is_singleton(self) -> bool:
        return len(self.members) == 1


def singleton_class(group: Group, x: Element) -> ConjClass:
    """The class {x} of a central element; the centralizer is all of G (empty when infinite)."""
    if not group.is_central(x):
        raise PreconditionError(f"{group.format_element(x)} is not central")
    return ConjClass(representative=x, members=(x,),
                     centralizer=group.elements if group.is_finite else ())


def conjugacy_classes(group: Group) -> List[ConjClass]:
    """
    Partition of a finite group into conjugacy classes, sorted by representative.

    Raises:
        UnsupportedGroupError: For free abelian groups.
    """
    if not group.is_finite:
        raise UnsupportedGroupError("conjugacy classes of free abelian groups are all singletons")
    return list(_classes(group))


@lru_cache(maxsize=64)
def _classes(group: Group) -> Tuple[ConjClass, ...]:
    seen = set()
    classes = []
    for x in group.elements:
        if x in seen:
            continue
        members = tuple(sorted({group.conjugate(x, g) for g in group.elements}))
        seen.update(members)
        classes.append(ConjClass(representative=members[0], members=members,
                                 centralizer=group.centralizer(members[0])))
    logger.debug(f"{group.name} has {len(classes)} conjugacy classes")
    return tuple(classes)


def class_of(group: Group, x: Element) -> ConjClass:
    if not group.is_finite:
        return ConjClass(representative=x, members=(x,))
    return next(c for c in conjugacy_classes(group) if x in c.members)


class CosetSystem:
    """
    Right coset representatives g_theta of Z_u(C) in G, with the bijection
    theta <-> g_theta^-1 u(C) g_theta onto the class C.
    """

    def __init__(self, group: Group, cls: ConjClass, reps: Sequence[Element]):
        self.group = group
        self.cls = cls
        self.reps = tuple(reps)
        if cls.is_singleton and not group.is_finite:
            self._coset = None
            self._theta = {cls.representative: 0}
            return
        centralizer = cls.centralizer
        self._coset: Optional[Dict[Element, int]] = {}
        for theta, g in enumerate(self.reps):
            for z in centralizer:
                h = group.multiply(z, g)
                if h in self._coset:
                    raise ValueError(f"coset representatives {group.format_element(g)} and "
                                     f"{group.format_element(self.reps[self._coset[h]])} share a coset")
                self._coset[h] = theta
        if len(self._coset) != group.order:
            raise ValueError("coset representatives do not cover the group")
        self._theta = {group.conjugate(cls.representative, g): theta for theta, g in enumerate(self.reps)}

    @classmethod
    def standard(cls, group: Group, conj: ConjClass) -> "CosetSystem":
        """Greedy representatives in element order, identity first."""
        if conj.is_singleton and not group.is_finite:
            return cls(group, conj, (group.identity,))
        covered = set()
        reps = []
        order = [group.identity] + [x for x in group.elements if x != group.identity]
        for g in order:
            if g in covered:
                continue
            reps.append(g)
            covered.update(group.multiply(z, g) for z in conj.centralizer)
        return cls(group, conj, reps)

    @classmethod
    def from_reps(cls, group: Group, conj: ConjClass, reps: Sequence[Element]) -> "CosetSystem":
        """Validated alternative representative system (one element per right coset)."""
        try:
            return cls(group, conj, reps)
        except ValueError as e:
            logger.error(f"Error building coset system: {str(e)}")
            raise

    def __len__(self):
        return len(self.reps)

    def coset_of(self, h: Element) -> int:
        if self._coset is None:
            return 0
        return self._coset[h]

    def theta_of(self, c: Element) -> int:
        """The unique theta with c = g_theta^-1 u(C) g_theta."""
        try:
            return self._theta[c]
        except KeyError:
            raise ValueError(f"{self.group.format_element(c)} is not in the class of "
                             f"{self.group.format_element(self.cls.representative)}")

    def conjugate_of(self, theta: int) -> Element:
        return self.group.conjugate(self.cls.representative, self.reps[theta])

    def zeta_theta(self, theta: int, h: Element) -> Tuple[Element, int]:
        """
        Solves g_theta h = h' g_theta' with h' in Z_u(C).

        Returns:
            Tuple[Element, int]: (h', theta').
        """
        if self._coset is None:
            return h, theta
        g = self.group.multiply(self.reps[theta], h)
        target = self.coset_of(g)
        h_prime = self.group.multiply(g, self.group.inverse(self.reps[target]))
        return h_prime, target


# ---------------------------------------------------------------------- characters


class Character:
    """
    One-dimensional character.

    Abelian kinds store the values on the standard generators; characters of
    Cayley groups (or of their subgroups) store an explicit value table.
    """

    __slots__ = ("group", "generator_values", "table")

    def __init__(self, group: Group, generator_values: Tuple[Scalar, ...] = (),
                 table: Optional[Dict[Element, Scalar]] = None):
        self.group = group
        self.generator_values = tuple(Scalar.coerce(v) for v in generator_values)
        self.table = None if table is None else {k: Scalar.coerce(v) for k, v in table.items()}

    # ------------------------------------------------------------------ constructors

    @classmethod
    def from_exponents(cls, group: Group, exponents: Sequence[int]) -> "Character":
        """chi(e_k) = zeta_{n_k}**c_k on the invariant-factor generators."""
        if group.kind != ABELIAN:
            raise UnsupportedGroupError("exponent characters need invariant-factor groups")
        if len(exponents) != len(group.factors):
            raise ValueError(f"expected {len(group.factors)} exponents, got {len(exponents)}")
        return cls(group, tuple(Scalar.zeta(n, c) for c, n in zip(exponents, group.factors)))

    @classmethod
    def from_values(cls, group: Group, values: Sequence) -> "Character":
        """Values on the standard generators, checked against the invariant factors."""
        if group.kind == CAYLEY:
            raise UnsupportedGroupError("use from_table for Cayley groups")
        values = tuple(Scalar.coerce(v) for v in values)
        if len(values) != group.ngens:
            raise ValueError(f"expected {group.ngens} generator values, got {len(values)}")
        if any(not v for v in values):
            raise PreconditionError("character values must be invertible")
        for v, n in zip(values, group.factors):
            if not (v ** n).is_one():
                raise PreconditionError(f"{v} is not an {n}-th root of unity")
        return cls(group, values)

    @classmethod
    def from_table(cls, group: Group, table: Dict[Element, object],
                   bound: Optional[int] = None) -> "Character":
        """Explicit character on a subgroup of a Cayley group; multiplicativity is verified."""
        character = cls(group, table=table)
        domain = set(character.table)
        bound = config.CHARACTER_CHECK_BOUND if bound is None else bound
        if len(domain) > bound:
            raise BoundExceededError("character domain size", len(domain), bound)
        for a in domain:
            for b in domain:
                ab = group.multiply(a, b)
                if ab not in domain:
                    raise PreconditionError("character domain is not closed under multiplication")
                if character.table[ab] != character.table[a] * character.table[b]:
                    raise PreconditionError(
                        f"table is not multiplicative at ({group.format_element(a)}, {group.format_element(b)})")
        return character

    @classmethod
    def trivial(cls, group: Group, domain: Optional[Sequence[Element]] = None) -> "Character":
        if group.kind == CAYLEY:
            return cls(group, table={x: Scalar.one() for x in (domain or group.elements)})
        return cls(group, (Scalar.one(),) * group.ngens)

    # ------------------------------------------------------------------ evaluation

    def __call__(self, x: Element) -> Scalar:
        if self.table is not None:
            try:
                return self.table[x]
            except KeyError:
                raise ValueError(f"{self.group.format_element(x)} is outside the character domain")
        result = Scalar.one()
        for v, c in zip(self.generator_values, x):
            if c:
                result = result * v ** c
        return result

    @property
    def domain(self) -> Tuple[Element, ...]:
        if self.table is not None:
            return tuple(sorted(self.table))
        return self.group.sample()

    def product(self, other: "Character") -> "Character":
        if self.table is not None:
            return Character(self.group, table={x: self(x) * other(x) for x in self.table})
        return Character(self.group, tuple(a * b for a, b in zip(self.generator_values, other.generator_values)))

    def inverse(self) -> "Character":
        if self.table is not None:
            return Character(self.group, table={x: v.inverse() for x, v in self.table.items()})
        return Character(self.group, tuple(v.inverse() for v in self.generator_values))

    def compose(self, phi: "GroupMap", domain: Optional[Sequence[Element]] = None) -> "Character":
        """The character x -> self(phi(x)) on the domain of phi (or the given subgroup)."""
        source = phi.source
        if source.kind == CAYLEY or self.table is not None:
            points = domain if domain is not None else source.elements
            return Character(source, table={x: self(phi(x)) for x in points})
        return Character(source, tuple(self(phi(source.generator(k))) for k in range(source.ngens)))

    def restrict(self, domain: Sequence[Element]) -> "Character":
        return Character(self.group, table={x: self(x) for x in domain})

    def is_trivial(self) -> bool:
        values = self.table.values() if self.table is not None else self.generator_values
        return all(v.is_one() for v in values)

    def exponents(self) -> Tuple[int, ...]:
        """Exponent vector on the invariant-factor generators (abelian groups only)."""
        if self.group.kind != ABELIAN or self.table is not None:
            raise UnsupportedGroupError("exponent vectors exist only for invariant-factor characters")
        result = []
        for v, n in zip(self.generator_values, self.group.factors):
            result.append(next(k for k in range(n) if Scalar.zeta(n, k) == v))
        return tuple(result)

    def sort_key(self) -> Tuple:
        if self.group.kind == ABELIAN and self.table is None:
            return self.exponents()
        if self.table is not None:
            return tuple(self.table[x].to_string() for x in sorted(self.table))
        return tuple(v.to_string() for v in self.generator_values)

    def _generator_values(self) -> Optional[Tuple[Scalar, ...]]:
        """Values on the standard generators, or None when a table does not reach them."""
        if self.table is None:
            return self.generator_values
        if self.group.kind == CAYLEY:
            return None
        generators = [self.group.generator(k) for k in range(self.group.ngens)]
        if any(x not in self.table for x in generators):
            return None
        return tuple(self.table[x] for x in generators)

    def __eq__(self, other):
        if not isinstance(other, Character):
            return NotImplemented
        if (self.table is None) != (other.table is None):
            # a table on a proper subgroup does not determine the character
            if self._generator_values() is None or other._generator_values() is None:
                return False
            domain = self.domain if self.table is not None else other.domain
            return all(self(x) == other(x) for x in domain)
        if self.table is not None:
            return self.table.keys() == other.table.keys() and all(
                self.table[x] == other.table[x] for x in self.table)
        return self.generator_values == other.generator_values

    def __hash__(self):
        values = self._generator_values()
        if values is not None:
            return hash((self.group.kind, values))
        return hash((self.group.kind, frozenset(self.table.items())))

    def to_string(self) -> str:
        if self.group.kind == ABELIAN and self.table is None:
            return "chi" + str(list(self.exponents())).replace(" ", "")
        if self.table is not None:
            return "{" + ", ".join(f"{self.group.format_element(x)}: {self.table[x]}"
                                   for x in sorted(self.table)) + "}"
        return "chi(" + ", ".join(str(v) for v in self.generator_values) + ")"

    def __repr__(self):
        return f"Character({self.to_string()})"


def dual_group(group: Group) -> List[Character]:
    """
    All characters of a finite abelian group, in lexicographic exponent order.

    Raises:
        UnsupportedGroupError: If the group is not in invariant-factor form.
    """
    if group.kind != ABELIAN:
        raise UnsupportedGroupError(f"dual group of {group.kind} groups is not supported")
    return [Character.from_exponents(group, c) for c in product(*(range(n) for n in group.factors))]


# ---------------------------------------------------------------------- morphisms


class GroupMap:
    """A homomorphism between finite groups stored as an element table."""

    __slots__ = ("source", "target", "images")

    def __init__(self, source: Group, target: Group, images: Dict[Element, Element]):
        self.source = source
        self.target = target
        self.images = images

    def __call__(self, x: Element) -> Element:
        if not self.source.is_finite:
            # free abelian: linear extension of the generator images
            result = self.target.identity
            for k, c in enumerate(x):
                result = self.target.multiply(result, self.target.power(self.images[self.source.generator(k)], c))
            return result
        return self.images[x]

    def inverse(self) -> "GroupMap":
        return GroupMap(self.target, self.source, {y: x for x, y in self.images.items()})

    def is_identity(self) -> bool:
        return all(x == y for x, y in self.images.items())

    @classmethod
    def identity(cls, group: Group) -> "GroupMap":
        if not group.is_finite:
            return cls(group, group, {group.generator(k): group.generator(k) for k in range(group.rank)})
        return cls(group, group, {x: x for x in group.elements})

    def to_string(self) -> str:
        gens = self.source.generators
        return ", ".join(f"{self.source.format_element(g)} -> {self.target.format_element(self(g))}" for g in gens)

    def __repr__(self):
        return f"GroupMap({self.to_string()})"


def _extend(source: Group, target: Group, gens: Sequence[Element],
            images: Sequence[Element]) -> Optional[Dict[Element, Element]]:
    """Extends generator images to a homomorphism, or None when inconsistent."""
    table = {source.identity: target.identity}
    frontier = [source.identity]
    while frontier:
        x = frontier.pop()
        for s, t in zip(gens, images):
            y = source.multiply(x, s)
            value = target.multiply(table[x], t)
            if y in table:
                if table[y] != value:
                    return None
            else:
                table[y] = value
                frontier.append(y)
    for a in source.elements:
        for b in source.elements:
            if table[source.multiply(a, b)] != target.multiply(table[a], table[b]):
                return None
    return table


def isomorphisms(source: Group, target: Group, bound: Optional[int] = None) -> List[GroupMap]:
    """
    All isomorphisms between two finite groups, in deterministic order.

    Raises:
        BoundExceededError: If the groups exceed the automorphism bound.
    """
    bound = config.AUTOMORPHISM_BOUND if bound is None else bound
    if not (source.is_finite and target.is_finite):
        raise UnsupportedGroupError("isomorphism search needs finite groups")
    if source.order > bound:
        logger.error(f"Isomorphism search refused for |G| = {source.order}")
        raise BoundExceededError("|G|", source.order, bound)
    if source.order != target.order:
        return []
    gens = source.generators
    candidates = [[y for y in target.elements if target.element_order(y) == source.element_order(g)]
                  for g in gens]
    result = []
    for images in product(*candidates):
        table = _extend(source, target, gens, images)
        if table is not None and len(set(table.values())) == target.order:
            result.append(GroupMap(source, target, table))
    logger.debug(f"Found {len(result)} isomorphisms {source.name} -> {target.name}")
    return result


def automorphisms(group: Group, bound: Optional[int] = None) -> List[GroupMap]:
    """Complete list of automorphisms of a finite group (the identity comes first)."""
    autos = isomorphisms(group, group, bound)
    autos.sort(key=lambda phi: (not phi.is_identity(),))
    return autos
