import random

import pytest

from quiverhopf.core.algebras.copath import (
    CopathAlgebra,
    commutation_check,
    esc_copath,
    esc_generators,
    one_type_closure_check,
    product_along_powers,
)
from quiverhopf.core.algebras.verification import verify_hopf_axioms
from quiverhopf.core.group import Character, Group
from quiverhopf.core.scalar import Scalar
from quiverhopf.core.structure import example_rsc_z2
from quiverhopf.exceptions import BoundExceededError, PreconditionError
from quiverhopf.models.structure import ESC, RSC

ONE, G = (0,), (1,)


def _loops(algebra, vertex):
    return [algebra.quiver.arrow(vertex, vertex, i) for i in range(algebra.quiver.multiplicities[0])]


def _cyclic_powers(n, exponent=1, cutoff=4):
    group = Group.cyclic(n)
    rsc = RSC.from_dict({"classes": [{"rep": "g", "r": 1, "chars": [[exponent]]}]}, group)
    return CopathAlgebra.from_rsc(rsc, cutoff=cutoff)


class TestExampleProducts:

    @pytest.mark.parametrize("n", [0, 1, 2])
    def test_sign_table(self, n):
        """Test x_i.x_j, x_i.y_j and y_i.y_j for m = 2 against the sign of chi_i(g)"""
        algebra = CopathAlgebra.from_rsc(example_rsc_z2(2, n), cutoff=3)
        xs, ys = _loops(algebra, ONE), _loops(algebra, G)
        for i in range(2):
            sign = 1 if i < n else -1
            for j in range(2):
                xx = algebra.path(xs[i], xs[j]) + algebra.path(xs[j], xs[i])
                yy = algebra.path(ys[i], ys[j]) + algebra.path(ys[j], ys[i])

                assert algebra.multiply(algebra.path(xs[i]), algebra.path(xs[j])) == xx
                assert algebra.multiply(algebra.path(xs[i]), algebra.path(ys[j])) == yy.scale(sign)
                assert algebra.multiply(algebra.path(ys[i]), algebra.path(ys[j])) == xx.scale(sign)

    def test_group_acts_on_loops(self):
        """Test g.x_i = y_i inside the algebra"""
        algebra = CopathAlgebra.from_rsc(example_rsc_z2(2, 1), cutoff=2)
        xs, ys = _loops(algebra, ONE), _loops(algebra, G)

        assert algebra.multiply(algebra.vertex(G), algebra.path(xs[0])) == algebra.path(ys[0])
        assert algebra.multiply(algebra.path(xs[1]), algebra.vertex(G)) == -algebra.path(ys[1])

    def test_degree_cutoff(self):
        """Test that products above the cutoff are refused"""
        algebra = CopathAlgebra.from_rsc(example_rsc_z2(1, 0), cutoff=1)
        x = algebra.path(_loops(algebra, ONE)[0])
        with pytest.raises(BoundExceededError):
            algebra.multiply(x, x)


class TestCopathHopf:

    def test_example_axioms(self):
        """Test the Hopf axioms of the Z2 example through degree 3"""
        algebra = CopathAlgebra.from_rsc(example_rsc_z2(2, 1), cutoff=3)
        report = verify_hopf_axioms(algebra, 3)
        assert report.passed, report.to_text()

    def test_single_loop_degree_four(self):
        """Test the Hopf axioms of a single-loop example through degree 4"""
        algebra = CopathAlgebra.from_rsc(example_rsc_z2(1, 0), cutoff=4)
        assert verify_hopf_axioms(algebra, 4, associativity=False).passed

    def test_non_central_axioms(self):
        """Test the Hopf axioms of the S3 transposition RSC through degree 3"""
        s3 = Group.symmetric(3)
        rsc = RSC.from_dict({"classes": [{"rep": "#1", "r": 1, "chars": [{"#0": "1", "#1": "-1"}]}]}, s3)
        algebra = CopathAlgebra.from_rsc(rsc, cutoff=3)
        report = verify_hopf_axioms(algebra, 3)
        assert report.passed, report.to_text()
        assert report.check("antipode_left").passed

    def test_coproduct_of_path(self):
        """Test Delta(a2 a1) = a2a1 (x) s + a2 (x) a1 + t (x) a2a1"""
        algebra = CopathAlgebra.from_rsc(example_rsc_z2(1, 0), cutoff=2)
        x = _loops(algebra, ONE)[0]
        p = algebra.path(x, x)
        assert len(algebra.comultiply(p)) == 3
        assert algebra.counit(p).is_zero()

    def test_antipode_of_arrow(self):
        """Test S(a) = -t(a)^-1 a s(a)^-1 on a loop"""
        algebra = CopathAlgebra.from_rsc(example_rsc_z2(1, 1), cutoff=2)
        x = algebra.path(_loops(algebra, ONE)[0])
        assert algebra.antipode(x) == -x


class TestPowerProducts:

    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_random_exponents(self, m):
        """Test power products over Z4 against the closed form"""
        algebra = _cyclic_powers(4)
        rng = random.Random(m)
        for _ in range(10):
            exponents = [rng.randrange(4) for _ in range(m)]
            assert product_along_powers(algebra, 0, 0, exponents)

    @pytest.mark.parametrize("exponent", [1, 2])
    def test_four_factors_over_z5(self, exponent):
        """Test m = 4 power products over Z5, where (4)_q! does not vanish"""
        algebra = _cyclic_powers(5, exponent)
        rng = random.Random(exponent)
        for _ in range(10):
            exponents = [rng.randrange(5) for _ in range(4)]
            assert product_along_powers(algebra, 0, 0, exponents)

    def test_vanishes_at_order(self):
        """Test that m = 4 power arrows multiply to zero at a primitive 4th root"""
        algebra = _cyclic_powers(4)
        assert not product_along_powers(algebra, 0, 0, [0, 1, 2, 3])

    def test_non_central_refused(self):
        """Test that power products need a central class"""
        s3 = Group.symmetric(3)
        rsc = RSC.from_dict({"classes": [{"rep": "#1", "r": 1, "chars": [{"#0": "1", "#1": "-1"}]}]}, s3)
        with pytest.raises(PreconditionError):
            product_along_powers(CopathAlgebra.from_rsc(rsc, cutoff=2), 0, 0, [0, 0])


class TestSubalgebra:

    def test_one_type_closure(self):
        """Test that kG and the arrows generate a graded subalgebra"""
        algebra = CopathAlgebra.from_rsc(example_rsc_z2(2, 1), cutoff=2)
        report = one_type_closure_check(algebra, 2)
        assert report.passed
        assert report.results["degree1_rank"] > 0

    def test_commutation(self):
        """Test E1 E2 = chi_2(g_1^-1) E2 E1 exactly when chi_1(g_2) chi_2(g_1) = 1"""
        group = Group.abelian([3, 3])
        e = ESC.from_items(group, [((1, 0), Character.from_exponents(group, [1, 0])),
                                   ((0, 1), Character.from_exponents(group, [0, 1]))])
        report = commutation_check(e)

        assert report.passed
        assert report.results["relation_holds"] == ["E1E2"]

    def test_esc_generators(self):
        """Test that E_j is the arrow from 1 to g_j"""
        group = Group.cyclic(3)
        e = ESC.from_items(group, [((1,), Character.from_values(group, [Scalar.zeta(3)]))])
        algebra = esc_copath(e, cutoff=2)
        (generator,) = esc_generators(algebra, e)
        (path,) = generator.keys()

        assert path.source == group.identity
        assert path.target == (1,)
