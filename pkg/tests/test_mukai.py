"""Tests for numerical class data: squares, divisibility, parity type."""

import pytest

from vwpt.mukai import K3Class, MukaiClass


class TestSquares:
    def test_enriques_square(self):
        assert MukaiClass(1, 0, -1, 0).mukai_square() == 2 - 1
        assert MukaiClass(1, 2, 0).mukai_square() == 1
        assert MukaiClass(0, 2, 1).mukai_square() == 2
        assert MukaiClass(2, 0, 1, 0).mukai_square() == -8

    def test_k3_square(self):
        assert K3Class(1, 0, 0, 0).mukai_square() == -2
        assert K3Class(1, 0, -1, 0).mukai_square() == 0
        assert K3Class(0, 2, 1).mukai_square() == 2
        assert K3Class(2, 8, 0, 2).mukai_square() == 0


class TestParityType:
    # prototype classes whose type is fixed by the classification of
    # primitive orbits: rank-1 point classes are odd, (0,beta,0) and
    # (0,beta,1) with primitive beta are even, (0,0,1) and (2,0,odd) are odd
    def test_prototypes(self):
        assert MukaiClass(1, 0, -3, 0).parity == "odd"
        assert MukaiClass(0, 2, 0).parity == "even"
        assert MukaiClass(0, 2, 1).parity == "even"
        assert MukaiClass(0, 0, 1, 0).parity == "odd"
        assert MukaiClass(2, 0, 3, 0).parity == "odd"
        assert MukaiClass(0, 8, 1, 2).parity == "odd"

    def test_square_parity_consistency(self):
        # odd Mukai square forces odd rank hence odd type
        for cls in (MukaiClass(1, 0, -3, 0), MukaiClass(1, 2, 1)):
            assert cls.mukai_square() % 2 == 1
            assert cls.parity == "odd"

    def test_even_rank_square_divisible_by_8(self):
        # primitive even-rank zero-beta classes have square divisible by 8
        for n in (1, 3, 5):
            cls = MukaiClass(2, 0, n, 0)
            assert cls.div == 1
            assert cls.mukai_square() % 8 == 0


class TestDivisibility:
    def test_div_and_divide(self):
        cls = MukaiClass(2, 8, 4, 2)
        assert cls.div == 2
        half = cls.divide(2)
        assert (half.r, half.beta_sq, half.n, half.beta_div) == (1, 2, 2, 1)
        assert cls.primitive() == half

    def test_zero_beta_divide(self):
        cls = MukaiClass(2, 0, 4, 0)
        assert cls.div == 2
        assert cls.divide(2) == MukaiClass(1, 0, 2, 0)

    def test_bad_divide(self):
        with pytest.raises(ValueError):
            MukaiClass(1, 2, 0).divide(2)

    def test_k3_divide_keeps_type(self):
        assert isinstance(K3Class(2, 0, 4, 0).divide(2), K3Class)


class TestValidation:
    def test_rejects_zero_class(self):
        with pytest.raises(ValueError):
            MukaiClass(0, 0, 0, 0)

    def test_rejects_odd_beta_sq(self):
        with pytest.raises(ValueError):
            MukaiClass(1, 3, 0)

    def test_rejects_inconsistent_divisibility(self):
        # divisibility 2 forces beta_sq divisible by 8
        with pytest.raises(ValueError):
            MukaiClass(0, 2, 0, 2)

    def test_rejects_nonzero_square_for_zero_class(self):
        with pytest.raises(ValueError):
            MukaiClass(1, 2, 0, 0)

    def test_default_beta_div(self):
        assert MukaiClass(1, 2, 0).beta_div == 1
        assert MukaiClass(1, 0, 2).beta_div == 0


class TestSerialization:
    def test_as_dict(self):
        d = MukaiClass(1, 0, -1, 0).as_dict()
        assert d == {"r": 1, "beta_sq": 0, "n": -1, "div": 1, "parity": "odd"}

    def test_eq_hash(self):
        a = MukaiClass(1, 2, 0)
        b = MukaiClass(1, 2, 0, 1)
        assert a == b and hash(a) == hash(b)
        assert a != K3Class(1, 2, 0)
