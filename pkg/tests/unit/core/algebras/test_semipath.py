import pytest

from quiverhopf.core.algebras.semipath import SemipathAlgebra, TensorWord, coinvariants_basis, tensor_biproduct_check
from quiverhopf.core.algebras.verification import verify_hopf_axioms
from quiverhopf.core.group import Character, Group
from quiverhopf.core.quantum_group import cartan_to_esc, fl_semipath
from quiverhopf.core.scalar import Scalar
from quiverhopf.core.structure import example_rsc_z2
from quiverhopf.exceptions import BoundExceededError
from quiverhopf.models.structure import ESC


@pytest.fixture
def taft_z3():
    group = Group.cyclic(3)
    return ESC.from_items(group, [((1,), Character.from_values(group, [Scalar.zeta(3)]))])


class TestSemipathProduct:

    def test_letter_passes_group_element(self, taft_z3):
        """Test E.h = chi(h) h.E"""
        algebra = SemipathAlgebra.from_esc(taft_z3, cutoff=3)
        for h in taft_z3.group.elements:
            lhs = algebra.multiply(algebra.word(taft_z3.group.identity, 0), algebra.vertex(h))
            assert lhs == algebra.word(h, 0).scale(taft_z3.chi[0](h))

    def test_words_concatenate(self, taft_z3):
        """Test that no relation holds among letters: E^3 is not zero in kQ^s"""
        algebra = SemipathAlgebra.from_esc(taft_z3, cutoff=3)
        e = algebra.word(taft_z3.group.identity, 0)
        cube = algebra.product(e, e, e)

        assert cube == algebra.element(TensorWord(taft_z3.group.identity, (0, 0, 0)))
        assert algebra.format(e) == "E1"

    def test_cutoff(self, taft_z3):
        """Test that words longer than the cutoff are refused"""
        algebra = SemipathAlgebra.from_esc(taft_z3, cutoff=1)
        e = algebra.word(taft_z3.group.identity, 0)
        with pytest.raises(BoundExceededError):
            algebra.multiply(e, e)


class TestSemipathBasis:

    def test_coinvariants(self):
        """Test that the coinvariants are free on the letters"""
        group = Group.abelian([2, 2])
        e = ESC.from_items(group, [((1, 0), Character.from_exponents(group, [1, 0])),
                                   ((0, 1), Character.from_exponents(group, [0, 1]))])
        assert len(coinvariants_basis(e, 2)) == 1 + 2 + 4

    def test_slice_dimension(self, taft_z3):
        """Test dim of the degree t slice = |G| n^t"""
        algebra = SemipathAlgebra.from_esc(taft_z3, cutoff=3)
        assert [algebra.slice_dimension(t) for t in range(4)] == [3, 3, 3, 3]
        assert len([k for k in algebra.basis(2) if k.length == 2]) == algebra.slice_dimension(2)

    def test_rsc_letters(self):
        """Test that an RSC semi-path algebra takes the arrows leaving the identity"""
        algebra = SemipathAlgebra.from_rsc(example_rsc_z2(2, 1), cutoff=2)
        assert len(algebra.letters) == 2
        assert algebra.slice_dimension(1) == 4


class TestSemipathHopf:

    def test_axioms_z3(self, taft_z3):
        """Test the Hopf axioms of kQ^s over Z3 through degree 3"""
        algebra = SemipathAlgebra.from_esc(taft_z3, cutoff=3)
        report = verify_hopf_axioms(algebra, 3)
        assert report.passed, report.to_text()

    def test_axioms_example(self):
        """Test the Hopf axioms of the Z2 example through degree 2"""
        algebra = SemipathAlgebra.from_rsc(example_rsc_z2(2, 1), cutoff=2)
        assert verify_hopf_axioms(algebra, 2).passed

    def test_axioms_sl2(self):
        """Test the Hopf axioms of the sl2 semi-path algebra over Z through degree 3"""
        algebra = fl_semipath(cartan_to_esc([[2]]), cutoff=3)
        report = verify_hopf_axioms(algebra, 3, associativity=False)
        assert report.passed, report.to_text()

    def test_antipode_of_letter(self, taft_z3):
        """Test S(E) = -g^-1 E"""
        algebra = SemipathAlgebra.from_esc(taft_z3, cutoff=2)
        e = algebra.word(taft_z3.group.identity, 0)
        assert algebra.antipode(e) == -algebra.word((2,), 0)


class TestTensorBiproduct:

    def test_z3(self, taft_z3):
        """Test that the bosonized tensor algebra matches kQ^s"""
        report = tensor_biproduct_check(taft_z3, cutoff=2)
        assert report.passed, report.to_text()

    def test_quantum_linear_space(self):
        """Test the comparison for two letters over Z3 x Z3"""
        group = Group.abelian([3, 3])
        e = ESC.from_items(group, [((1, 0), Character.from_exponents(group, [1, 0])),
                                   ((0, 1), Character.from_exponents(group, [0, 1]))])
        assert tensor_biproduct_check(e, cutoff=2).passed
