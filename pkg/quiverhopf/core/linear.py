# quiverhopf/core/linear.py
import logging
from typing import Any, Callable, Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

from quiverhopf.core.scalar import Scalar

# Configure logger
logger = logging.getLogger(__name__)


class LinearCombination:
    """
    Finite formal sum of hashable basis keys with Scalar coefficients.

    Zero coefficients are never stored. Subclasses keep their own type through the
    arithmetic, so a sum of two path elements is again a path element.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Dict[Hashable, Any]] = None):
        self._terms: Dict[Hashable, Scalar] = {}
        for key, coefficient in (terms or {}).items():
            coefficient = Scalar.coerce(coefficient)
            if coefficient:
                self._terms[key] = coefficient

    @classmethod
    def monomial(cls, key: Hashable, coefficient: Any = 1) -> "LinearCombination":
        return cls({key: coefficient})

    @classmethod
    def zero(cls) -> "LinearCombination":
        return cls()

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[Any, Hashable]]) -> "LinearCombination":
        """Sums (coefficient, key) pairs, merging repeated keys."""
        result = cls()
        for coefficient, key in pairs:
            result._accumulate(key, Scalar.coerce(coefficient))
        return result

    def _accumulate(self, key: Hashable, coefficient: Scalar) -> None:
        total = self._terms.get(key, Scalar.zero()) + coefficient
        if total:
            self._terms[key] = total
        else:
            self._terms.pop(key, None)

    # ------------------------------------------------------------------ access

    def items(self):
        return self._terms.items()

    def keys(self):
        return self._terms.keys()

    def coefficient(self, key: Hashable) -> Scalar:
        return self._terms.get(key, Scalar.zero())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(self._terms.items())

    def __eq__(self, other):
        if not isinstance(other, LinearCombination):
            return NotImplemented
        if self._terms.keys() != other._terms.keys():
            return False
        return all(self._terms[k] == other._terms[k] for k in self._terms)

    __hash__ = None

    # ------------------------------------------------------------------ arithmetic

    def __add__(self, other):
        if not isinstance(other, LinearCombination):
            return NotImplemented
        result = type(self)(self._terms)
        for key, coefficient in other._terms.items():
            result._accumulate(key, coefficient)
        return result

    def __neg__(self):
        return type(self)({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, LinearCombination):
            return NotImplemented
        return self + (-other)

    def scale(self, scalar: Any) -> "LinearCombination":
        scalar = Scalar.coerce(scalar)
        if not scalar:
            return type(self)()
        return type(self)({k: c * scalar for k, c in self._terms.items()})

    def __rmul__(self, scalar):
        try:
            return self.scale(scalar)
        except TypeError:
            return NotImplemented

    def map_linear(self, image: Callable[[Hashable], "LinearCombination"]) -> "LinearCombination":
        """Extends a map defined on basis keys linearly."""
        result = None
        for key, coefficient in self._terms.items():
            term = image(key).scale(coefficient)
            result = term if result is None else result + term
        return result if result is not None else type(self)()

    def bilinear(self, other: "LinearCombination",
                 product: Callable[[Hashable, Hashable], "LinearCombination"]) -> "LinearCombination":
        """Extends a product defined on pairs of basis keys bilinearly."""
        result = None
        for a, ca in self._terms.items():
            for b, cb in other._terms.items():
                term = product(a, b).scale(ca * cb)
                result = term if result is None else result + term
        return result if result is not None else type(self)()

    # ------------------------------------------------------------------ rendering

    def sorted_items(self, sort_key: Callable[[Hashable], Any] = repr) -> List[Tuple[Hashable, Scalar]]:
        return sorted(self._terms.items(), key=lambda item: sort_key(item[0]))

    def to_string(self, render: Callable[[Hashable], str] = str,
                  sort_key: Callable[[Hashable], Any] = repr) -> str:
        if not self._terms:
            return "0"
        parts = []
        for key, coefficient in self.sorted_items(sort_key):
            body = render(key)
            if coefficient.is_one():
                parts.append(body)
            elif coefficient == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"({coefficient})*{body}")
        return " + ".join(parts)

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"{type(self).__name__}({self.to_string()})"


def tensor(left: LinearCombination, right: LinearCombination) -> LinearCombination:
    """Tensor product of two combinations, keyed by pairs of keys."""
    return LinearCombination.from_pairs(
        (ca * cb, (a, b)) for a, ca in left.items() for b, cb in right.items()
    )


# ---------------------------------------------------------------------- elimination

def row_reduce(rows: List[List[Scalar]]) -> Tuple[List[List[Scalar]], List[int]]:
    """
    Reduced row echelon form over exact scalars.

    Returns:
        Tuple[List[List[Scalar]], List[int]]: The nonzero reduced rows and their pivot columns.
    """
    rows = [list(row) for row in rows]
    if not rows:
        return [], []
    width = len(rows[0])
    pivots: List[int] = []
    i = 0
    for j in range(width):
        pivot = next((r for r in range(i, len(rows)) if rows[r][j]), None)
        if pivot is None:
            continue
        rows[i], rows[pivot] = rows[pivot], rows[i]
        inverse = rows[i][j].inverse()
        rows[i] = [c * inverse for c in rows[i]]
        for r in range(len(rows)):
            if r != i and rows[r][j]:
                factor = rows[r][j]
                rows[r] = [c - factor * p for c, p in zip(rows[r], rows[i])]
        pivots.append(j)
        i += 1
        if i == len(rows):
            break
    return rows[:i], pivots


def _matrix(vectors: Sequence[LinearCombination]) -> Tuple[List[List[Scalar]], List[Hashable]]:
    """Rows indexed by the union of supports, one column per vector."""
    support: List[Hashable] = []
    seen = set()
    for vector in vectors:
        for key, _ in vector.sorted_items():
            if key not in seen:
                seen.add(key)
                support.append(key)
    rows = [[vector.coefficient(key) for vector in vectors] for key in support]
    return rows, support


def rank(vectors: Sequence[LinearCombination]) -> int:
    """Dimension of the span of the given combinations."""
    if not vectors:
        return 0
    rows, _ = _matrix(vectors)
    reduced, _ = row_reduce(rows)
    return len(reduced)


def kernel(images: Sequence[LinearCombination]) -> List[List[Scalar]]:
    """
    Basis of the relations among the given combinations.

    Returns:
        List[List[Scalar]]: Coefficient vectors c with sum(c_i * images[i]) = 0.
    """
    n = len(images)
    if n == 0:
        return []
    rows, _ = _matrix(images)
    reduced, pivots = row_reduce(rows) if rows else ([], [])
    free = [j for j in range(n) if j not in pivots]
    basis = []
    for f in free:
        vector = [Scalar.zero()] * n
        vector[f] = Scalar.one()
        for row, p in zip(reduced, pivots):
            vector[p] = -row[f]
        basis.append(vector)
    logger.debug(f"Kernel of {n} vectors has dimension {len(basis)}")
    return basis


def is_linearly_independent(vectors: Sequence[LinearCombination]) -> bool:
    return rank(vectors) == len(vectors)
