from abc import ABC, abstractmethod
from typing import Any, Hashable, List, Tuple, Type

from quiverhopf.core.linear import LinearCombination
from quiverhopf.core.scalar import Scalar


class GradedHopfAlgebra(ABC):
    """
    Abstract base class for the graded Hopf algebras of the library.
    Subclasses define the structure maps on basis keys; elements are linear
    combinations of keys and the maps are extended (bi)linearly here.
    """

    element_type: Type[LinearCombination] = LinearCombination
    name: str = "algebra"

    @abstractmethod
    def basis(self, cutoff: int) -> List[Hashable]:
        """
        Lists the basis keys of degree at most cutoff.

        Args:
            cutoff (int): Largest degree to enumerate.

        Returns:
            List[Hashable]: Basis keys in a deterministic order.
        """
        pass

    @abstractmethod
    def degree(self, key: Hashable) -> int:
        """
        Degree of a basis key.

        Args:
            key (Hashable): A basis key.

        Returns:
            int: Its degree in the grading.
        """
        pass

    @abstractmethod
    def unit_key(self) -> Hashable:
        """
        Gets the basis key of the unit.

        Returns:
            Hashable: The key of 1.
        """
        pass

    @abstractmethod
    def multiply_basis(self, a: Hashable, b: Hashable) -> LinearCombination:
        """
        Multiplies two basis keys.

        Args:
            a (Hashable): Left factor.
            b (Hashable): Right factor.

        Returns:
            LinearCombination: The product ab.

        Raises:
            BoundExceededError: If the product leaves the configured degree cutoff.
        """
        pass

    @abstractmethod
    def comultiply_basis(self, a: Hashable) -> LinearCombination:
        """
        Comultiplies a basis key.

        Args:
            a (Hashable): A basis key.

        Returns:
            LinearCombination: Delta(a), keyed by pairs of basis keys.
        """
        pass

    @abstractmethod
    def counit_basis(self, a: Hashable) -> Scalar:
        """
        Evaluates the counit on a basis key.

        Args:
            a (Hashable): A basis key.

        Returns:
            Scalar: epsilon(a).
        """
        pass

    @abstractmethod
    def antipode_basis(self, a: Hashable) -> LinearCombination:
        """
        Applies the antipode to a basis key.

        Args:
            a (Hashable): A basis key.

        Returns:
            LinearCombination: S(a).
        """
        pass

    def render(self, key: Hashable) -> str:
        return str(key)

    def sort_key(self, key: Hashable) -> Any:
        return repr(key)

    # ------------------------------------------------------------------ elements

    def element(self, key: Hashable, coefficient: Any = 1) -> LinearCombination:
        return self.element_type.monomial(key, coefficient)

    def one(self) -> LinearCombination:
        return self.element(self.unit_key())

    def multiply(self, x: LinearCombination, y: LinearCombination) -> LinearCombination:
        return self.element_type(dict(x.bilinear(y, self.multiply_basis).items()))

    def product(self, *factors: LinearCombination) -> LinearCombination:
        result = self.one()
        for factor in factors:
            result = self.multiply(result, factor)
        return result

    def comultiply(self, x: LinearCombination) -> LinearCombination:
        return LinearCombination(dict(x.map_linear(self.comultiply_basis).items()))

    def counit(self, x: LinearCombination) -> Scalar:
        total = Scalar.zero()
        for key, coefficient in x.items():
            total = total + coefficient * self.counit_basis(key)
        return total

    def antipode(self, x: LinearCombination) -> LinearCombination:
        return self.element_type(dict(x.map_linear(self.antipode_basis).items()))

    def tensor_multiply(self, x: LinearCombination, y: LinearCombination) -> LinearCombination:
        """Product in A (x) A, componentwise."""
        pairs = []
        for (a1, a2), ca in x.items():
            for (b1, b2), cb in y.items():
                left = self.multiply_basis(a1, b1)
                right = self.multiply_basis(a2, b2)
                for p1, c1 in left.items():
                    for p2, c2 in right.items():
                        pairs.append((ca * cb * c1 * c2, (p1, p2)))
        return LinearCombination.from_pairs(pairs)

    def format(self, x: LinearCombination) -> str:
        return x.to_string(self.render, self.sort_key)

    def format_tensor(self, x: LinearCombination) -> str:
        return x.to_string(lambda pair: " ⊗ ".join(self.render(k) for k in pair),
                           lambda pair: tuple(self.sort_key(k) for k in pair))

    def degree_slices(self, cutoff: int) -> List[Tuple[int, List[Hashable]]]:
        basis = self.basis(cutoff)
        return [(d, [k for k in basis if self.degree(k) == d]) for d in range(cutoff + 1)]
