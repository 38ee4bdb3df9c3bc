import pytest

from quiverhopf.core.group import Group
from quiverhopf.core.quiver import HopfQuiver, Path, apply_thin_split, build_hopf_quiver, thin_splits
from quiverhopf.core.structure import example_rsc_z2
from quiverhopf.exceptions import BoundExceededError, UnsupportedGroupError


class TestHopfQuiver:

    def test_z2_loops(self):
        """Test that r1 = m at the identity gives m loops per vertex and no cross arrows"""
        quiver = HopfQuiver.from_rsc(example_rsc_z2(3, 1))
        one, g = (0,), (1,)

        assert len(quiver.arrows_between(one, one)) == 3
        assert len(quiver.arrows_between(g, g)) == 3
        assert quiver.arrows_between(one, g) == []
        assert len(quiver.arrows()) == 6

    def test_s3_transpositions(self):
        """Test that each vertex of S3 has one arrow per transposition"""
        s3 = Group.symmetric(3)
        quiver = build_hopf_quiver(s3, {1: 2})

        assert all(len(quiver.arrows_from(x)) == 6 for x in s3.elements)
        assert len(quiver.arrows()) == 36

    def test_zero_ramification(self):
        """Test that r = 0 gives the arrowless quiver"""
        quiver = build_hopf_quiver(Group.cyclic(3), {(0,): 0})
        assert quiver.arrows() == []

    def test_negative_ramification(self):
        """Test that negative multiplicities are rejected"""
        with pytest.raises(ValueError):
            build_hopf_quiver(Group.cyclic(2), {(0,): -1})

    def test_missing_arrow(self):
        """Test that asking for a non-existent arrow raises ValueError"""
        quiver = HopfQuiver.from_rsc(example_rsc_z2(2, 0))
        with pytest.raises(ValueError):
            quiver.arrow((0,), (1,))
        with pytest.raises(ValueError):
            quiver.arrow((0,), (0,), 2)

    def test_free_abelian_vertices(self):
        """Test that a free abelian quiver has no finite vertex list but local arrows"""
        group = Group.free_abelian(1)
        quiver = build_hopf_quiver(group, {(1,): 1})

        assert len(quiver.arrows_from((5,))) == 1
        assert quiver.arrow((5,), (6,)).target == (6,)
        with pytest.raises(UnsupportedGroupError):
            quiver.vertices()

    def test_paths(self):
        """Test path enumeration and truncations"""
        quiver = build_hopf_quiver(Group.cyclic(3), {(1,): 1})
        paths = quiver.paths(2, starts=[(0,)])

        assert len(paths) == 1
        path = paths[0]
        assert path.target == (2,)
        assert path.lower(1).target == (1,)
        assert path.upper(1).source == (1,)
        assert path.upper(2).is_vertex()

    def test_non_composable(self):
        """Test that non-composable arrows are rejected"""
        quiver = build_hopf_quiver(Group.cyclic(3), {(1,): 1})
        a = quiver.arrow((0,), (1,))
        with pytest.raises(ValueError):
            Path.of([a, a])


class TestThinSplits:

    def test_count(self):
        """Test |D_n^(n+m)| = C(n+m, n)"""
        assert len(thin_splits(2, 2)) == 6
        assert thin_splits(1, 1) == [(0, 1), (1, 0)]
        assert thin_splits(0, 0) == [()]

    def test_bound(self):
        """Test the thin split bound"""
        with pytest.raises(BoundExceededError):
            thin_splits(7, 7, bound=12)

    def test_apply(self):
        """Test that zeros carry the target of the last arrow below them"""
        quiver = build_hopf_quiver(Group.cyclic(3), {(1,): 1})
        a = quiver.arrow((0,), (1,))
        path = Path.of([a])

        assert apply_thin_split((0, 1), path) == [(1,), a]
        assert apply_thin_split((1, 0), path) == [a, (0,)]
        with pytest.raises(ValueError):
            apply_thin_split((1, 1), path)
