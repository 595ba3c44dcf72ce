import pytest
from hypothesis import given, strategies as st

from conftest import partitions
from hookbias.errors import DomainError
from hookbias.partitions import Partition, PartitionClass, alternating_sum, enumerate_partitions
from hookbias.sylvester import PairPartition, enumerate_a, enumerate_b, phi, psi, sigma, verify_injection


def pair(a, b):
    return PairPartition(Partition(a), Partition(b))


class TestPsiSigma:
    def test_examples(self):
        assert psi(Partition((7, 5, 3, 3))) == (7, 6, 4, 1)
        assert psi(Partition()) == ()
        assert psi(Partition((5,))) == (3, 2)
        assert psi(Partition((1,))) == (1,)
        assert sigma(Partition((7, 6, 4, 1))) == (7, 5, 3, 3)
        assert sigma(Partition((6, 5))) == (11,)
        assert sigma(Partition((6, 5, 1))) == (9, 3)

    def test_domain(self):
        with pytest.raises(DomainError):
            psi(Partition((4, 1)))
        with pytest.raises(DomainError):
            sigma(Partition((2, 2)))

    @pytest.mark.parametrize("n", range(0, 36))
    def test_round_trips_exhaustive(self, n):
        odd = list(enumerate_partitions(n, PartitionClass.odd_unbounded()))
        images = set()
        for p in odd:
            d = psi(p)
            assert d.size == n and d.is_distinct()
            assert sigma(d) == p
            assert alternating_sum(d) == p.num_parts
            images.add(d)
        for d in enumerate_partitions(n, PartitionClass.distinct_unbounded()):
            o = sigma(d)
            assert o.size == n and o.is_odd()
            assert psi(o) == d
            if d:
                assert o.largest_part <= 2 * d.largest_part - 1
        assert len(images) == len(odd)

    @given(partitions(60, odd=True))
    def test_round_trip_random_larger(self, p):
        assert sigma(psi(p)) == p


class TestPairs:
    def test_enumeration_examples(self):
        assert set(enumerate_a(2, 1)) == {pair((1,), ()), pair((), (1,))}
        assert list(enumerate_a(1, 2)) == [pair((1, 1), ())]
        assert set(enumerate_b(4, 2)) == {pair((2,), ()), pair((), (2,))}
        assert list(enumerate_b(3, 1)) == [pair((), (1,))]
        for L in (1, 4, 9):
            assert list(enumerate_a(L, 0)) == [pair((), ())]
            assert list(enumerate_b(L, 0)) == [pair((), ())]

    @given(st.integers(1, 6), st.integers(0, 14))
    def test_membership(self, L, n):
        for p in enumerate_a(L, n):
            assert p.in_a(L) and p.size == n
        for p in enumerate_b(L, n):
            assert p.in_b(L) and p.size == n

    def test_phi_figures(self):
        assert phi(7, pair((6, 5), ())) == pair((11,), ())
        assert phi(7, pair((6, 5), (5,))) == pair((11,), (5,))
        assert phi(7, pair((6, 5), (2,))) == pair((9, 3), (1,))
        assert str(phi(7, pair((6, 5), (2,)))) == "9,3|1"

    def test_phi_rejects_non_b(self):
        with pytest.raises(DomainError):
            phi(7, pair((6, 5, 1), ()))

    @pytest.mark.parametrize("L", range(1, 9))
    def test_injection(self, L):
        rep = verify_injection(L, 30)
        assert rep.status == "verified", rep.first_violation
        assert all(b <= a for _, b, a in rep.details["table"])

    def test_injection_trivial_range(self):
        rep = verify_injection(4, 0)
        assert rep.ok and rep.details["table"] == [[0, 1, 1]]
