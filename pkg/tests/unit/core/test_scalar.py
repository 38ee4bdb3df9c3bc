import pytest
from fractions import Fraction
from math import inf

from hypothesis import given, settings, strategies as st

from quiverhopf.core.scalar import Scalar
from quiverhopf.exceptions import PreconditionError, ScalarModeError


class TestScalar:

    def test_rational_arithmetic(self):
        """Test exact rational arithmetic and canonical strings"""
        a = Scalar.rational(1, 2)
        b = Scalar.rational(-3, 4)

        assert (a + b).to_string() == "-1/4"
        assert (a * b).to_string() == "-3/8"
        assert (a / b).to_string() == "-2/3"
        assert Scalar.rational(4, 8).to_string() == "1/2"
        assert (a - a).is_zero()

    def test_zero_denominator(self):
        """Test that a zero denominator is rejected"""
        with pytest.raises(ZeroDivisionError):
            Scalar.rational(1, 0)
        with pytest.raises(ZeroDivisionError):
            Scalar.zero().inverse()

    def test_roots_of_unity(self):
        """Test cyclotomic roots of unity and their orders"""
        zeta = Scalar.zeta(6)

        assert zeta ** 6 == 1
        assert zeta ** 3 == -1
        assert zeta.multiplicative_order() == 6
        assert Scalar.zeta(4, 2) == -1
        assert Scalar.zeta(5, 5).is_one()

    def test_cyclotomic_relation(self):
        """Test that 1 + zeta_3 + zeta_3^2 reduces to zero"""
        zeta = Scalar.zeta(3)
        assert (1 + zeta + zeta ** 2).is_zero()

    def test_mixed_orders(self):
        """Test arithmetic between roots of unity of different orders"""
        i = Scalar.zeta(4)
        w = Scalar.zeta(3)
        product = i * w

        assert product.multiplicative_order() == 12
        assert product ** 12 == 1

    def test_rational_function(self):
        """Test the rational function field with q = v^2"""
        v = Scalar.v()
        q = Scalar.q()

        assert v * v == q
        assert (q - 1) / (v - 1) == v + 1
        assert q.multiplicative_order() == inf
        assert (v ** 3 / v ** 3).is_one()

    def test_rational_values_collapse(self):
        """Test that rational-valued results are stored in rational mode"""
        v = Scalar.v()
        assert (v / v).is_rational()
        assert (Scalar.zeta(3) ** 3).is_rational()

    def test_incompatible_modes(self):
        """Test that cyclotomic and rational-function scalars are not mixed"""
        with pytest.raises(ScalarModeError):
            Scalar.zeta(3) + Scalar.v()
        assert Scalar.zeta(3) != Scalar.v()

    def test_from_string(self):
        """Test parsing of the serialized forms"""
        assert Scalar.from_string("3/6") == Scalar.rational(1, 2)
        assert Scalar.from_string("zeta_4**2") == -1
        assert Scalar.from_string("v**2") == Scalar.q()
        assert Scalar.from_string("q") == Scalar.q()
        assert Scalar.from_string("(v**2 - 1)/(v)") == Scalar.v() - Scalar.v().inverse()

    def test_invalid_literal(self):
        """Test that malformed literals raise ValueError"""
        with pytest.raises(ValueError):
            Scalar.from_string("v +* 2")

    def test_coerce(self):
        """Test coercion from ints, fractions and strings"""
        assert Scalar.coerce(3) == Scalar.rational(3)
        assert Scalar.coerce(Fraction(2, 3)) == Scalar.rational(2, 3)
        assert Scalar.coerce("zeta_3") == Scalar.zeta(3)
        with pytest.raises(TypeError):
            Scalar.coerce(True)

    def test_sqrt(self):
        """Test exact square roots of monomials and roots of unity"""
        v = Scalar.v()

        assert (v ** -4).sqrt() == v ** -2
        assert Scalar.rational(9, 4).sqrt() == Scalar.rational(3, 2)
        assert Scalar.rational(-1).sqrt() ** 2 == -1
        with pytest.raises(PreconditionError):
            Scalar.rational(2).sqrt()
        with pytest.raises(PreconditionError):
            (v + 1).sqrt()

    def test_hash_consistency(self):
        """Test that equal scalars hash alike"""
        assert hash(Scalar.rational(2, 4)) == hash(Scalar.rational(1, 2))
        assert hash(Scalar.zeta(4) ** 2) == hash(Scalar.rational(-1))

    def test_canonical_order(self):
        """Test that a cyclotomic number has one stored form whatever route built it"""
        assert Scalar.zeta(6).to_string() == (Scalar.zeta(3) + 1).to_string()
        assert (Scalar.zeta(12) ** 4).order == 3
        assert (Scalar.zeta(12) ** 4).to_string() == Scalar.zeta(3).to_string()
        assert (Scalar.zeta(12) ** 3).to_string() == Scalar.zeta(4).to_string()
        assert (Scalar.zeta(15) ** 5).to_string() == "zeta_3"
        assert Scalar.zeta(12).order == 12

    def test_cyclotomic_hash(self):
        """Test that equal cyclotomic numbers from different orders collapse in a set"""
        assert hash(Scalar.zeta(6)) == hash(Scalar.zeta(3) + 1)
        assert len({Scalar.zeta(12) ** 4, Scalar.zeta(3), Scalar.zeta(15) ** 5}) == 1
        assert len({Scalar.zeta(3), Scalar.zeta(4), Scalar.zeta(5)}) == 3

    @pytest.mark.parametrize("text", ["0", "-7/3", "zeta_5 + 2", "-zeta_12**3 + zeta_12", "v**3 + 1", "(v + 1)/(v**2 - 2)"])
    def test_string_round_trip(self, text):
        """Test that serialized strings parse back to the same value"""
        value = Scalar.from_string(text)
        assert Scalar.from_string(value.to_string()) == value

    @settings(max_examples=40, deadline=None)
    @given(n=st.integers(min_value=1, max_value=12), k=st.integers(min_value=0, max_value=30))
    def test_zeta_power_law(self, n, k):
        """Property: zeta_n^k times zeta_n^(n-k) is one"""
        assert (Scalar.zeta(n, k) * Scalar.zeta(n, n - k)).is_one()

    @settings(max_examples=40, deadline=None)
    @given(a=st.fractions(max_denominator=50), b=st.fractions(max_denominator=50))
    def test_field_axioms_on_rationals(self, a, b):
        """Property: scalar arithmetic agrees with Fraction arithmetic"""
        x, y = Scalar.coerce(a), Scalar.coerce(b)
        assert (x + y).as_fraction() == a + b
        assert (x * y).as_fraction() == a * b
