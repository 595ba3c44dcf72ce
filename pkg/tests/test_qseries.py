import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hookbias.errors import DomainError, ExactnessError
from hookbias.partitions import PartitionClass, enumerate_partitions
from hookbias.qseries import (BivariateSeries, TruncatedSeries, divide_exact, gaussian_binomial,
                              geometric_ratio, invert_unit, poch)

coeff_lists = st.lists(st.integers(-5, 5), min_size=1, max_size=12)


def S(coeffs, n):
    return TruncatedSeries(coeffs, n)


class TestArithmetic:
    def test_examples(self):
        assert invert_unit(S([1, -1], 4)) == S([1, 1, 1, 1, 1], 4)
        assert S([1, -1], 4) * S([1, 1], 4) == S([1, 0, -1], 4)
        assert divide_exact(S([1, 0, 0, 0, -1], 4), S([1, 0, -1], 4)) == S([1, 0, 1], 4)

    def test_mixed_truncation(self):
        s = S([1, 2, 3], 2) + S([1, 1, 1, 1, 1], 4)
        assert s.trunc == 2 and s == S([2, 3, 4], 2)

    def test_equality_up_to_common_order(self):
        assert S([1, 2, 3], 2) == S([1, 2, 3, 9], 3)

    @given(coeff_lists, coeff_lists)
    def test_ring_laws(self, a, b):
        x, y = S(a, 10), S(b, 10)
        assert x * y == y * x
        assert (x + y) - y == x
        assert x * (y + TruncatedSeries.one(10)) == x * y + x

    @given(coeff_lists)
    def test_inverse(self, a):
        x = S([1] + a, 10)
        assert x * invert_unit(x) == TruncatedSeries.one(10)
        y = S([-1] + a, 10)
        assert y * invert_unit(y) == TruncatedSeries.one(10)

    def test_non_unit(self):
        with pytest.raises(DomainError):
            invert_unit(S([0, 1], 3))
        with pytest.raises(DomainError):
            divide_exact(S([1], 3), S([2, 1], 3))

    def test_polynomial_remainder(self):
        with pytest.raises(ExactnessError):
            divide_exact(S([1, 0, 1], 4), S([1, -1], 4), polynomial=True)

    def test_shift_down_requires_divisibility(self):
        with pytest.raises(ExactnessError):
            S([1, 1], 3).shift_down(1)
        assert S([0, 0, 5], 3).shift_down(2)[0] == 5

    def test_json_round_trip(self):
        s = S([1, Fraction(-1, 3), 0, 7], 3)
        d = s.to_dict()
        assert d == {"trunc": 3, "coeffs": [1, "-1/3", 0, 7]}
        assert TruncatedSeries.from_dict(d) == s


class TestPoch:
    def test_examples(self):
        assert poch(1, 1, 2, 2, 5) == S([1, -1, 0, -1, 1], 5)
        assert poch(1, 3, 1, 0, 5) == TruncatedSeries.one(5)
        assert poch(-1, 2, 1, 2, 5) == S([1, 0, 1, 1, 0, 1], 5)
        assert poch(-1, 3, 1, -2, 5) == TruncatedSeries.one(5)

    def test_infinite_product_counts_distinct_partitions(self):
        s = poch(-1, 1, 1, math.inf, 25)
        assert list(s) == [PartitionClass.distinct_unbounded().count(n) for n in range(26)]


class TestGaussian:
    def test_examples(self):
        assert gaussian_binomial(4, 2) == S([1, 1, 2, 1, 1], 4)
        assert gaussian_binomial(5, 0) == S([1], 0)
        assert gaussian_binomial(2, 3).is_zero()

    @pytest.mark.parametrize("m", range(13))
    def test_q_one_and_symmetry(self, m):
        for n in range(m + 1):
            g = gaussian_binomial(m, n)
            assert g.value_at_one() == math.comb(m, n)
            assert g == gaussian_binomial(m, m - n)
            assert g.coeffs == g.coeffs[::-1]

    @pytest.mark.parametrize("a", range(1, 9))
    def test_box_counts(self, a):
        for b in range(1, 9):
            g = gaussian_binomial(a + b, b)
            cls = PartitionClass.box(a, b)
            assert [cls.count(j) for j in range(a * b + 1)] == list(g)

    def test_scaled(self):
        assert gaussian_binomial(3, 1, r=2) == S([1, 0, 1, 0, 1], 4)

    def test_large_path_agrees(self):
        from hookbias.qseries import _gauss, _gauss_iterative
        assert _gauss_iterative(20, 7) == _gauss(20, 7)

    def test_geometric_ratio(self):
        assert geometric_ratio(6, 2) == S([1, 0, 1, 0, 1], 4)
        with pytest.raises(ExactnessError):
            geometric_ratio(5, 2)


class TestBivariate:
    def test_specialize_and_moment(self):
        b = BivariateSeries({(0, 0): 1, (1, 2): 3, (2, 3): 1}, 4)
        assert b.specialize(1) == S([1, 0, 3, 1], 4)
        assert b.moment(lambda m: m) == S([0, 0, 3, 2], 4)

    def test_substitute(self):
        # y -> 1 - z applied twice is the identity
        b = BivariateSeries({(0, 0): 2, (1, 1): -1, (3, 2): 5}, 3)
        assert b.substitute(1, -1).substitute(1, -1) == b

    def test_product(self):
        x = BivariateSeries({(0, 0): 1, (1, 1): 1}, 3)
        sq = x * x
        assert sq.table() == {(0, 0): 1, (1, 1): 2, (2, 2): 1}
