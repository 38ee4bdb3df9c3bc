import pytest

from hypothesis import given, settings, strategies as st

from quiverhopf.core.group import Character, Group
from quiverhopf.core.quantum_group import cartan_to_esc
from quiverhopf.core.scalar import Scalar
from quiverhopf.core.structure import (
    COMMUTATIVE,
    NEITHER,
    WEAKLY_COMMUTATIVE,
    classify_esc,
    classify_rsc,
    commutativity_witness,
    crsc_to_esc,
    esc_isomorphic,
    esc_to_crsc,
    example_rsc_z2,
    fl_types,
    quantum_commutativity,
    require_fl_free,
    rsc_isomorphic,
    validate_fl,
)
from quiverhopf.exceptions import BoundExceededError, ConfigError, PreconditionError, UnsupportedGroupError
from quiverhopf.models.fl_data import FLData
from quiverhopf.models.report import Report
from quiverhopf.models.structure import ESC, RSC


def _esc(group, items):
    return ESC.from_items(group, [(group.normalize(g), Character.from_exponents(group, e)) for g, e in items])


class TestClassification:

    @pytest.mark.parametrize("m", [1, 2, 3, 4])
    def test_z2_has_m_plus_one_classes(self, m):
        """Test that Z2 with r = m at the identity gives m + 1 classes"""
        group = Group.cyclic(2)
        classes = classify_rsc(group, {group.identity: m})

        assert len(classes) == m + 1
        assert [c.name for c in classes][0] == "RSC#1"

    def test_classes_pairwise_non_isomorphic(self):
        """Test that the representatives are pairwise non-isomorphic"""
        group = Group.cyclic(2)
        classes = classify_rsc(group, {group.identity: 3})
        for i, a in enumerate(classes):
            for b in classes[i + 1:]:
                assert rsc_isomorphic(a, b) is None

    def test_automorphisms_merge_classes(self):
        """Test that Aut(Z3) identifies chi and chi^2 on the class of the identity"""
        group = Group.cyclic(3)
        classes = classify_rsc(group, {group.identity: 1})
        assert len(classes) == 2

    def test_classification_bound(self):
        """Test the candidate bound"""
        group = Group.cyclic(2)
        with pytest.raises(BoundExceededError):
            classify_rsc(group, {group.identity: 4}, bound=3)

    def test_non_abelian_refused(self):
        """Test that classification of non-abelian groups is refused"""
        with pytest.raises(UnsupportedGroupError):
            classify_rsc(Group.symmetric(3), {0: 1})

    def test_classify_esc_z2(self):
        """Test ESCs of size 1 over Z2: four (g, chi) pairs, no automorphisms"""
        assert len(classify_esc(Group.cyclic(2), 1)) == 4


class TestIsomorphisms:

    def test_example_rsc_distinct(self):
        """Test that different numbers of chi_+ give non-isomorphic RSCs"""
        assert rsc_isomorphic(example_rsc_z2(2, 0), example_rsc_z2(2, 1)) is None
        assert rsc_isomorphic(example_rsc_z2(2, 1), example_rsc_z2(2, 1)) is not None

    def test_example_rsc_bounds(self):
        """Test that n must lie in 0..m"""
        with pytest.raises(ValueError):
            example_rsc_z2(2, 3)

    def test_esc_isomorphism_through_automorphism(self):
        """Test that (g, chi) and (g^2, chi^2) over Z3 are isomorphic"""
        group = Group.cyclic(3)
        a = _esc(group, [((1,), [1])])
        b = _esc(group, [((2,), [2])])
        witness = esc_isomorphic(a, b)

        assert witness is not None
        assert witness.sigma == [0]

    def test_esc_not_isomorphic(self):
        """Test that a trivial and a nontrivial character are distinguished"""
        group = Group.cyclic(3)
        assert esc_isomorphic(_esc(group, [((1,), [0])]), _esc(group, [((1,), [1])])) is None

    def test_non_central_rsc_isomorphic_to_itself(self):
        """Test the S3 transposition RSC against itself"""
        s3 = Group.symmetric(3)
        data = {"classes": [{"rep": "#1", "r": 1, "chars": [{"#0": "1", "#1": "-1"}]}]}
        a = RSC.from_dict(data, s3)
        b = RSC.from_dict({"classes": [{"rep": "#2", "r": 1, "chars": [{"#0": "1", "#2": "-1"}]}]}, s3)

        assert rsc_isomorphic(a, b) is not None


class TestConversions:

    def test_esc_to_crsc_and_back(self):
        """Test that an ESC and its central RSC carry the same data"""
        group = Group.abelian([2, 2])
        e = _esc(group, [((1, 0), [1, 0]), ((0, 1), [0, 1]), ((1, 0), [0, 0])])
        rsc = esc_to_crsc(e)

        assert rsc.is_central()
        assert rsc.total_rank == 3
        assert esc_isomorphic(crsc_to_esc(rsc), e) is not None

    def test_crsc_to_esc_needs_central(self):
        """Test that non-central ramification is rejected"""
        s3 = Group.symmetric(3)
        rsc = RSC.from_dict({"classes": [{"rep": "#1", "chars": [{"#0": "1", "#1": "1"}]}]}, s3)
        with pytest.raises(PreconditionError):
            crsc_to_esc(rsc)

    def test_rsc_character_domain(self):
        """Test that Cayley characters must live on the centralizer"""
        s3 = Group.symmetric(3)
        with pytest.raises(ValueError):
            RSC.from_dict({"classes": [{"rep": "#1", "chars": [{"#0": "1"}]}]}, s3)

    def test_rsc_r_mismatch(self):
        """Test that r must match the number of characters"""
        with pytest.raises(ValueError):
            RSC.from_dict({"classes": [{"rep": "1", "r": 2, "chars": [[0]]}]}, Group.cyclic(2))


class TestCommutativity:

    def test_weakly_commutative(self):
        """Test a quantum linear space over Z3 x Z3: chi_i(g_j) chi_j(g_i) = 1 only for i != j"""
        group = Group.abelian([3, 3])
        assert quantum_commutativity(_esc(group, [((1, 0), [1, 0]), ((0, 1), [0, 1])])) == WEAKLY_COMMUTATIVE

    def test_trivial_characters(self):
        """Test that trivial characters are commutative"""
        group = Group.cyclic(2)
        assert quantum_commutativity(_esc(group, [((1,), [0]), ((1,), [0])])) == COMMUTATIVE

    def test_neither(self):
        """Test a pair with chi_1(g_2) chi_2(g_1) = zeta_3^2"""
        group = Group.cyclic(3)
        assert quantum_commutativity(_esc(group, [((1,), [1]), ((1,), [1])])) == NEITHER

    def test_witness(self):
        """Test the first pair breaking (weak) commutativity"""
        z3 = Group.cyclic(3)
        assert commutativity_witness(_esc(z3, [((1,), [1]), ((1,), [1])])) == (0, 1)

        qls = _esc(Group.abelian([3, 3]), [((1, 0), [1, 0]), ((0, 1), [0, 1])])
        assert commutativity_witness(qls) is None
        assert commutativity_witness(qls, strict=True) == (0, 0)


class TestValidateFL:

    def test_sl2(self):
        """Test that the sl2 data pass every FL condition"""
        report = validate_fl(cartan_to_esc([[2]]))

        assert report.passed
        assert "FL-quantum-group" in report.results["types"]
        assert "FL-free" in report.results["types"]

    def test_sl3(self):
        """Test sl3 data and the r_ij = 1 - a_ij check"""
        report = validate_fl(cartan_to_esc([[2, -1], [-1, 2]]))

        assert report.passed
        assert report.check("cartan_r").passed
        assert report.check("xi_symmetry").passed

    def test_wrong_r_fails_fl6(self):
        """Test that r_12 = 3 for sl3 breaks FL6"""
        fl = cartan_to_esc([[2, -1], [-1, 2]])
        fl.r[(0, 1)] = 3
        report = validate_fl(fl)

        assert not report.passed
        assert not report.check("FL6").passed
        assert "FL-free" not in report.results["types"]

    def test_missing_indices(self):
        """Test that block indices outside the ESC raise ConfigError"""
        fl = cartan_to_esc([[2]])
        fl.blocks[0].j2 = [5]
        with pytest.raises(ConfigError):
            validate_fl(fl)

    def test_finite_group_is_not_fl7(self):
        """Test that FL7 needs a free abelian group"""
        fl = cartan_to_esc([[2]])
        group = Group.cyclic(4)
        zeta = Scalar.zeta(4)
        e = ESC(group=group, g=[(2,), (2,)],
                chi=[Character.from_values(group, [zeta]), Character.from_values(group, [zeta.inverse()])])
        broken = FLData(esc=e, blocks=fl.blocks, xi=[(1,), (3,)], r={})
        report = validate_fl(broken)

        assert not report.check("FL7").passed

    def test_local_types(self):
        """Test that several blocks give local type names"""
        report = Report(command="fl")
        for name in ["FL1", "FL2", "FL3", "FL4"]:
            report.add(name, True)
        report.add("FL5", False)

        assert fl_types(report, 1) == ["FL-matrix"]
        assert fl_types(report, 2) == ["local FL-matrix"]

    def test_require_fl_free(self):
        """Test that broken FL data is refused before building relations"""
        fl = cartan_to_esc([[2, -1], [-1, 2]])
        assert require_fl_free(fl).passed

        fl.r[(0, 1)] = 3
        with pytest.raises(PreconditionError):
            require_fl_free(fl)


KLEIN = Group.abelian([2, 2])
klein_items = st.lists(
    st.tuples(st.sampled_from(KLEIN.elements), st.tuples(st.integers(0, 1), st.integers(0, 1))),
    min_size=1, max_size=3)


class TestStructureProperties:

    @settings(max_examples=25, deadline=None)
    @given(items=klein_items)
    def test_central_round_trip(self, items):
        """Property: ESC -> central RSC -> ESC gives back an isomorphic ESC"""
        e = _esc(KLEIN, items)
        assert esc_isomorphic(crsc_to_esc(esc_to_crsc(e)), e) is not None

    @settings(max_examples=25, deadline=None)
    @given(items=klein_items, data=st.data())
    def test_reordering_is_an_isomorphism(self, items, data):
        """Property: permuting the items of an ESC gives an isomorphic ESC"""
        shuffled = data.draw(st.permutations(items))
        assert esc_isomorphic(_esc(KLEIN, items), _esc(KLEIN, shuffled)) is not None

    @settings(max_examples=25, deadline=None)
    @given(a=klein_items, b=klein_items)
    def test_isomorphism_is_symmetric(self, a, b):
        """Property: esc_isomorphic(a, b) and esc_isomorphic(b, a) agree"""
        x, y = _esc(KLEIN, a), _esc(KLEIN, b)
        assert (esc_isomorphic(x, y) is None) == (esc_isomorphic(y, x) is None)
