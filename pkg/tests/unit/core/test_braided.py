from math import inf

import pytest

from quiverhopf.core.algebras.verification import verify_hopf_axioms
from quiverhopf.core.braided import (
    LINEAR,
    SYMMETRIC,
    TENSOR,
    Biproduct,
    BraidedAlgebra,
    YDModule,
    adjoint_arrow_module,
    braided_commutator_residue,
    nilpotency_order,
    pointed_yd_decompose,
)
from quiverhopf.core.group import Character, Group
from quiverhopf.core.scalar import Scalar
from quiverhopf.exceptions import PreconditionError
from quiverhopf.models.structure import ESC


@pytest.fixture
def taft_z3():
    group = Group.cyclic(3)
    return ESC.from_items(group, [((1,), Character.from_values(group, [Scalar.zeta(3)]))])


@pytest.fixture
def qls():
    group = Group.abelian([3, 3])
    return ESC.from_items(group, [((1, 0), Character.from_exponents(group, [1, 0])),
                                  ((0, 1), Character.from_exponents(group, [0, 1]))])


@pytest.fixture
def tangled():
    group = Group.cyclic(3)
    chi = Character.from_values(group, [Scalar.zeta(3)])
    return ESC.from_items(group, [((1,), chi), ((1,), chi)])


def test_nilpotency_order():
    """Test N for roots of unity, 1 and the generic parameter"""
    assert nilpotency_order(Scalar.zeta(5)) == 5
    assert nilpotency_order(Scalar.rational(-1)) == 2
    assert nilpotency_order(Scalar.one()) == inf
    assert nilpotency_order(Scalar.coerce("v")) == inf


class TestYDModule:

    def test_braiding(self, qls):
        """Test c(x_i (x) x_j) = chi_j(g_i) x_j (x) x_i"""
        module = YDModule(qls)
        scalar, swapped = module.braiding(0, 1)

        assert swapped == (1, 0)
        assert scalar == qls.chi[1](qls.g[0])

    def test_verify(self, qls, tangled):
        """Test YD compatibility and the braid relation"""
        assert YDModule(qls).verify().passed
        assert YDModule(tangled).verify().passed

    def test_inverse(self, taft_z3):
        """Test that the inverse module inverts the characters"""
        inverse = YDModule(taft_z3).inverse()
        assert inverse.action((1,), 0) == Scalar.zeta(3, 2)
        assert inverse.coaction(0) == (1,)

    def test_commutator_residue(self, qls, tangled):
        """Test that x_i x_j - chi_j(g_i) x_j x_i is primitive iff chi_j(g_i) chi_i(g_j) = 1"""
        assert braided_commutator_residue(YDModule(qls), 0, 1).is_zero()
        assert not braided_commutator_residue(YDModule(tangled), 0, 1).is_zero()


class TestBraidedAlgebra:

    def test_linear_space_basis(self, taft_z3):
        """Test that x^3 = 0 in the quantum linear space over Z3"""
        algebra = BraidedAlgebra(YDModule(taft_z3), LINEAR, cutoff=4)
        assert algebra.basis(4) == [(), (0,), (0, 0)]
        assert algebra.word(0, 0, 0).is_zero()

    def test_symmetric_reorders(self, qls):
        """Test x2 x1 = chi_1(g_2) x1 x2 in the quantum symmetric algebra"""
        algebra = BraidedAlgebra(YDModule(qls), SYMMETRIC, cutoff=2)
        assert algebra.word(1, 0) == algebra.word(0, 1).scale(qls.chi[0](qls.g[1]))

    def test_needs_weak_commutativity(self, tangled):
        """Test that symmetric and linear flavors need a weakly commutative system"""
        with pytest.raises(PreconditionError):
            BraidedAlgebra(YDModule(tangled), LINEAR)
        assert BraidedAlgebra(YDModule(tangled), TENSOR, cutoff=2).flavor == TENSOR

    def test_unknown_flavor(self, taft_z3):
        """Test that unknown flavors raise ValueError"""
        with pytest.raises(ValueError):
            BraidedAlgebra(YDModule(taft_z3), "exterior")

    def test_tensor_primitives(self, taft_z3):
        """Test that x^3 is primitive in the tensor algebra when q = zeta_3"""
        algebra = BraidedAlgebra(YDModule(taft_z3), TENSOR, cutoff=3)

        assert len(algebra.primitives(1)) == 1
        assert algebra.primitives(2) == []
        (primitive,) = algebra.primitives(3)
        assert list(primitive.keys()) == [(0, 0, 0)]

    def test_relators_generate_coideal(self, qls):
        """Test that the quantum linear space relators span a braided Hopf ideal"""
        algebra = BraidedAlgebra(YDModule(qls), LINEAR, cutoff=3)
        names = [name for name, _ in algebra.relators()]

        assert names == ["x1x2", "x1^3", "x2^3"]
        assert algebra.relator_coideal_check().passed

    @pytest.mark.parametrize("flavor", [TENSOR, LINEAR])
    def test_braided_axioms(self, qls, flavor):
        """Test the braided Hopf axioms through degree 2"""
        algebra = BraidedAlgebra(YDModule(qls), flavor, cutoff=2)
        report = verify_hopf_axioms(algebra, 2)
        assert report.passed, report.to_text()


class TestBiproduct:

    def test_axioms(self, taft_z3):
        """Test that R # kG is an ordinary Hopf algebra"""
        biproduct = Biproduct(BraidedAlgebra(YDModule(taft_z3).inverse(), LINEAR, cutoff=2))
        report = verify_hopf_axioms(biproduct, 2)
        assert report.passed, report.to_text()

    def test_render(self, taft_z3):
        """Test the rendering of r # g"""
        biproduct = Biproduct(BraidedAlgebra(YDModule(taft_z3), TENSOR, cutoff=2))
        assert biproduct.render(((0,), (1,))) == "x1#g^[1]"


class TestConstructions:

    def test_adjoint_arrow_module(self, taft_z3):
        """Test that conjugation on the arrows gives V(G, g, chi^-1)"""
        module = adjoint_arrow_module(taft_z3)
        assert module.esc.chi[0] == taft_z3.chi[0].inverse()
        assert module.coaction(0) == taft_z3.g[0]

    def test_pointed_decompose(self):
        """Test that a diagonal action and coaction give back (g, chi)"""
        group = Group.cyclic(3)
        zeta = Scalar.zeta(3)
        e = pointed_yd_decompose(group, {(1,): [[zeta, 0], [0, zeta ** 2]]}, [(1,), (0,)])

        assert e.g == [(1,), (0,)]
        assert e.chi[1]((1,)) == zeta ** 2

    def test_pointed_decompose_non_diagonal(self):
        """Test that a non-diagonal action is rejected"""
        group = Group.cyclic(2)
        with pytest.raises(PreconditionError):
            pointed_yd_decompose(group, {(1,): [[0, 1], [1, 0]]}, [(1,), (1,)])

    def test_pointed_decompose_missing_generator(self):
        """Test that every generator needs an action matrix"""
        with pytest.raises(ValueError):
            pointed_yd_decompose(Group.cyclic(2), {}, [(1,)])
