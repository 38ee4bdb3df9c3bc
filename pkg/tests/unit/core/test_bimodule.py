import pytest

from quiverhopf.core.bimodule import ArrowBimodule, coset_change_iso
from quiverhopf.core.group import CosetSystem, Group, class_of
from quiverhopf.core.scalar import Scalar
from quiverhopf.core.structure import example_rsc_z2
from quiverhopf.exceptions import UnsupportedGroupError
from quiverhopf.models.structure import RSC


@pytest.fixture
def s3():
    return Group.symmetric(3)


@pytest.fixture
def s3_rsc(s3):
    data = {"name": "RSC(S3, transpositions)",
            "classes": [{"rep": "#1", "r": 1, "chars": [{"#0": "1", "#1": "-1"}]}]}
    return RSC.from_dict(data, s3)


class TestArrowBimodule:

    def test_example_actions(self):
        """Test g.x_i = y_i and x_i.g = -y_i for chi_-"""
        bimodule = ArrowBimodule(example_rsc_z2(2, 1))
        one, g = (0,), (1,)
        x1 = bimodule.quiver.arrow(one, one, 0)
        x2 = bimodule.quiver.arrow(one, one, 1)

        assert bimodule.left_action(g, x1) == bimodule.quiver.arrow(g, g, 0)
        assert bimodule.right_action(x1, g) == (Scalar.one(), bimodule.quiver.arrow(g, g, 0))
        assert bimodule.right_action(x2, g) == (Scalar.rational(-1), bimodule.quiver.arrow(g, g, 1))

    def test_coactions(self):
        """Test delta^-(a) = t(a) (x) a and delta^+(a) = a (x) s(a)"""
        bimodule = ArrowBimodule(example_rsc_z2(1, 0))
        a = bimodule.arrows()[0]
        assert bimodule.coactions(a) == ((a.target, a), (a, a.source))

    def test_verify_central(self):
        """Test the bimodule axioms for Z2 with two loops"""
        report = ArrowBimodule(example_rsc_z2(2, 1)).verify_bimodule()
        assert report.passed
        assert report.check("pointed").passed

    def test_verify_non_central(self, s3_rsc):
        """Test the bimodule axioms for the S3 transposition RSC"""
        report = ArrowBimodule(s3_rsc).verify_bimodule()
        assert report.passed, report.to_text()

    def test_round_trip_recovers_characters(self, s3_rsc):
        """Test that the W functor recovers the input characters"""
        bimodule = ArrowBimodule(s3_rsc)
        recovered = bimodule.recovered_characters()

        assert recovered[0][0] == s3_rsc.classes[0].characters[0]
        assert bimodule.round_trip_check().passed

    @pytest.mark.parametrize("m,n", [(1, 0), (2, 1), (3, 3)])
    def test_round_trip_z2(self, m, n):
        """Test the round trip on the Z2 family"""
        assert ArrowBimodule(example_rsc_z2(m, n)).round_trip_check().passed

    def test_pairing(self, s3_rsc):
        """Test that the dual coactions pair with the actions"""
        assert ArrowBimodule(s3_rsc).pairing_check().passed


class TestCosetChange:

    def test_intertwines_both_actions(self, s3, s3_rsc):
        """Test that the diagonal map intertwines the bimodules of two coset systems"""
        bimodule = ArrowBimodule(s3_rsc)
        alt = [CosetSystem.from_reps(s3, class_of(s3, 1), [1, 4, 5])]
        f, report = coset_change_iso(bimodule, alt)

        assert report.passed, report.to_text()
        assert len(f) == 18
        assert report.results["nontrivial_scalars"] > 0

    def test_left_action_of_second_bimodule_is_checked(self, s3, s3_rsc, monkeypatch):
        """Test that a second bimodule with another left action fails left intertwining"""

        class InverseLeftAction(ArrowBimodule):
            def left_action(self, h, a):
                return super().left_action(self.group.inverse(h), a)

        bimodule = ArrowBimodule(s3_rsc)
        monkeypatch.setattr("quiverhopf.core.bimodule.ArrowBimodule", InverseLeftAction)
        alt = [CosetSystem.from_reps(s3, class_of(s3, 1), [1, 4, 5])]
        _, report = coset_change_iso(bimodule, alt)

        assert not report.check("left_intertwining").passed
        assert report.check("right_intertwining").passed

    def test_wrong_number_of_systems(self, s3_rsc):
        """Test that one coset system per class is required"""
        with pytest.raises(ValueError):
            coset_change_iso(ArrowBimodule(s3_rsc), [])

    def test_free_abelian_refused(self):
        """Test that coset changes need a finite group"""
        group = Group.free_abelian(1)
        rsc = RSC.from_dict({"classes": [{"rep": "g^[1]", "chars": [["v"]]}]}, group)
        with pytest.raises(UnsupportedGroupError):
            coset_change_iso(ArrowBimodule(rsc), [])


class TestFunctorAndDuality:

    def test_w_functor_values(self):
        """Test the diagonal values of the right centralizer action"""
        table = ArrowBimodule(example_rsc_z2(2, 1)).w_functor(0)

        assert table[0] == {(0,): Scalar.one(), (1,): Scalar.one()}
        assert table[1] == {(0,): Scalar.one(), (1,): Scalar.rational(-1)}

    def test_dual_coactions_have_one_term_per_element(self, s3_rsc):
        """Test that both dual coactions sum over all of S3"""
        bimodule = ArrowBimodule(s3_rsc)
        left, right = bimodule.dual_coactions(bimodule.arrows()[0])

        assert len(list(left.keys())) == 6
        assert len(list(right.keys())) == 6
        assert bimodule.pairing_check().passed
