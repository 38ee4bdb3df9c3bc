from math import inf

import pytest

from quiverhopf.core.algebras.taft import PBWMonomial, TaftAlgebra, dimension
from quiverhopf.core.algebras.verification import verify_hopf_axioms
from quiverhopf.core.group import Character, Group
from quiverhopf.core.scalar import Scalar
from quiverhopf.exceptions import PreconditionError
from quiverhopf.models.structure import ESC


def taft_esc(n):
    group = Group.cyclic(n)
    return ESC.from_items(group, [((1,), Character.from_values(group, [Scalar.zeta(n)]))])


def klein_esc():
    group = Group.abelian([2, 2])
    return ESC.from_items(group, [((1, 0), Character.from_exponents(group, [1, 0])),
                                  ((0, 1), Character.from_exponents(group, [0, 1]))])


def qls_esc():
    group = Group.abelian([3, 3])
    return ESC.from_items(group, [((1, 0), Character.from_exponents(group, [1, 0])),
                                  ((0, 1), Character.from_exponents(group, [0, 1]))])


class TestTaftDimension:

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_taft_dimension(self, n):
        """Test dim = n^2 for the Taft algebra of Z_n"""
        e = taft_esc(n)
        assert dimension(e) == n * n
        assert len(TaftAlgebra(e).pbw_basis()) == n * n

    def test_klein_four(self):
        """Test dim = 16 over Z2 x Z2 with two generators"""
        assert dimension(klein_esc()) == 16

    def test_diagram_basis(self):
        """Test the coinvariant monomials over Z2 x Z2, graded by degree"""
        basis = TaftAlgebra(klein_esc()).diagram_basis(2)

        assert [k.exponents for k in basis] == [(0, 0), (0, 1), (1, 0), (1, 1)]
        assert all(k.g == (0, 0) for k in basis)

    def test_infinite(self):
        """Test that a free abelian group gives an infinite dimension"""
        group = Group.free_abelian(1)
        e = ESC.from_items(group, [((1,), Character.from_values(group, [Scalar.coerce("v**2")]))])
        algebra = TaftAlgebra(e, cutoff=3)

        assert dimension(e) == inf
        assert not algebra.is_finite
        assert max(k.degree for k in algebra.pbw_basis()) == 3

    def test_not_weakly_commutative(self):
        """Test that chi_1(g_2) chi_2(g_1) != 1 is rejected"""
        group = Group.cyclic(3)
        zeta = Character.from_values(group, [Scalar.zeta(3)])
        e = ESC.from_items(group, [((1,), zeta), ((1,), zeta)])
        with pytest.raises(PreconditionError):
            TaftAlgebra(e)


class TestTaftProduct:

    def test_nilpotent_generator(self):
        """Test E^n = 0 and E^(n-1) != 0"""
        algebra = TaftAlgebra(taft_esc(3))
        e = algebra.generator(0)

        assert algebra.product(e, e, e).is_zero()
        assert not algebra.product(e, e).is_zero()

    def test_group_commutation(self):
        """Test E g = zeta g E"""
        algebra = TaftAlgebra(taft_esc(3))
        g = (1,)
        lhs = algebra.multiply(algebra.generator(0), algebra.group_element(g))
        rhs = algebra.multiply(algebra.group_element(g), algebra.generator(0)).scale(Scalar.zeta(3))
        assert lhs == rhs

    def test_quantum_relation(self):
        """Test E2 E1 = chi_1(g_2^-1) E1 E2 over Z3 x Z3"""
        e = qls_esc()
        algebra = TaftAlgebra(e)
        e1, e2 = algebra.generator(0), algebra.generator(1)
        factor = e.chi[0](e.group.inverse(e.g[1]))
        assert algebra.multiply(e2, e1) == algebra.multiply(e1, e2).scale(factor)

    def test_render(self):
        """Test the rendering of PBW monomials"""
        algebra = TaftAlgebra(taft_esc(3))
        assert algebra.render(PBWMonomial((1,), (2,))) == "g^[1] * E1^2"
        assert algebra.render(algebra.unit_key()) == "1"

    @pytest.mark.parametrize("esc", [taft_esc(2), taft_esc(3), taft_esc(4), taft_esc(5), klein_esc()],
                             ids=["Z2", "Z3", "Z4", "Z5", "Z2xZ2"])
    def test_hopf_axioms(self, esc):
        """Test the Hopf axioms on Taft algebras through degree 3"""
        algebra = TaftAlgebra(esc)
        report = verify_hopf_axioms(algebra, 3)
        assert report.passed, report.to_text()


class TestTaftRewriting:

    def test_normal_form(self):
        """Test that E g reduces to zeta g E"""
        algebra = TaftAlgebra(taft_esc(3))
        result = algebra.normal_form([("E", 0), ("g", (1,))])
        assert result == algebra.element(PBWMonomial((1,), (1,)), Scalar.zeta(3))

    def test_normal_form_kills_powers(self):
        """Test that E^3 reduces to zero over Z3"""
        algebra = TaftAlgebra(taft_esc(3))
        assert algebra.normal_form([("E", 0)] * 3).is_zero()

    def test_confluence(self):
        """Test that 200 random words have a unique normal form"""
        report = TaftAlgebra(taft_esc(3)).confluence_check(words=200)
        assert report.passed
        assert report.results["words"] == 200

    def test_confluence_two_generators(self):
        """Test confluence over Z3 x Z3"""
        assert TaftAlgebra(qls_esc()).confluence_check(words=50).passed


class TestTaftChecks:

    def test_embedding(self):
        """Test that the PBW monomials embed multiplicatively in kQ^c"""
        report = TaftAlgebra(taft_esc(3)).embedding_check(cutoff=2)
        assert report.passed, report.to_text()

    @pytest.mark.parametrize("esc", [taft_esc(3), taft_esc(5), qls_esc()])
    def test_nichols(self, esc):
        """Test that the diagram is a Nichols algebra"""
        report = TaftAlgebra(esc, cutoff=4).nichols_check()
        assert report.passed, report.to_text()
        assert report.check("degree1").passed

    def test_presentation(self):
        """Test the characterizing conditions inside kQ^c"""
        report = TaftAlgebra(taft_esc(3), cutoff=2).presentation_check()
        assert report.passed, report.to_text()

    def test_biproduct(self):
        """Test R(G, g, chi^-1) # kG against the Taft algebra"""
        report = TaftAlgebra(taft_esc(3), cutoff=2).biproduct_check()
        assert report.passed, report.to_text()

