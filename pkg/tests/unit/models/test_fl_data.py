import pytest

from quiverhopf.core.group import Group
from quiverhopf.core.quantum_group import cartan_to_esc
from quiverhopf.core.scalar import Scalar
from quiverhopf.models.fl_data import FLBlock, FLData


@pytest.fixture
def sl3():
    return cartan_to_esc([[2, -1], [-1, 2]])


class TestFLData:

    def test_partition(self, sl3):
        """Test J^(1), J^(2), sigma and the partner index"""
        assert sl3.j1 == [0, 1]
        assert sl3.j2 == [2, 3]
        assert sl3.sigma(1) == 3
        assert sl3.sigma_inverse(3) == 1
        assert sl3.partner(2) == 0
        assert sl3.partner(1) == 1

    def test_r_on_second_half(self, sl3):
        """Test r_sigma(i)sigma(j) = r_ij"""
        assert sl3.r_value(2, 3) == sl3.r_value(0, 1) == 2
        assert sl3.r_value(0, 3) is None

    def test_unknown_index(self, sl3):
        """Test that indices outside every block are rejected"""
        with pytest.raises(ValueError):
            sl3.block_of(7)

    def test_block_entries(self, sl3):
        """Test local Cartan entries and symmetrizers"""
        block = sl3.blocks[0]
        assert block.a(0, 1) == -1
        assert block.d_of(1) == 1
        assert block.local(1) == 1

    def test_dict_round_trip(self, sl3):
        """Test that to_dict and from_dict preserve the data"""
        restored = FLData.from_dict(sl3.to_dict(), Group.free_abelian(2))

        assert restored.xi == sl3.xi
        assert restored.r == sl3.r
        assert restored.esc.labels == sl3.esc.labels
        assert restored.chi_xi(0, 1) == sl3.chi_xi(0, 1)

    def test_block_from_dict(self):
        """Test that q literals are parsed as scalars"""
        block = FLBlock.from_dict({"j1": [0], "j2": [1], "cartan": [[2]], "d": [1], "q": "v**2"})
        assert block.q == Scalar.v() ** 2
