import pytest
from hypothesis import given, strategies as st

from hookbias.census import (CensusTable, census_refined, census_total, crossover_scan, hook_totals,
                             side_class, weighted_census)
from hookbias.errors import DomainError
from hookbias.partitions import PartitionClass, count_beck


def test_small_examples():
    assert census_total("distinct", 2, 5, 7)[7] == 4
    assert census_total("distinct", 3, 5, 7)[7] == 4
    for side in ("odd", "distinct"):
        for t in (1, 2, 5):
            assert census_total(side, t, None, 4)[0] == 0


def test_refined():
    table = census_refined("distinct", 5, 7)
    assert sum(m * v for (m, n), v in table.values.items() if n == 7) == 4
    assert table[(0, 0)] == 1
    assert table.column_totals() == [PartitionClass.distinct_bounded(5).count(n) for n in range(8)]
    assert weighted_census(table, "m")[7] == 4
    assert weighted_census(table, lambda m: m * m)[7] >= 4


def test_binom_weight_ignores_small_m():
    table = CensusTable("odd", 1, 3, None, {(0, 0): 1, (1, 2): 5, (1, 3): 2})
    assert weighted_census(table, "binom2") == [0, 0, 0, 0]


def test_weighted_needs_refined():
    with pytest.raises(DomainError):
        weighted_census(census_total("odd", 2, 3, 5))


def test_csv():
    text = census_total("distinct", 2, 5, 3).to_csv()
    assert text.splitlines() == ["n,value", "0,0", "1,0", "2,1", "3,1"]
    assert census_refined("odd", 2, 2).to_csv().splitlines()[0] == "m,n,value"


def test_bad_inputs():
    with pytest.raises(DomainError):
        census_total("even", 2, 3, 5)
    with pytest.raises(DomainError):
        census_total("odd", 0, 3, 5)


@pytest.mark.parametrize("side", ["odd", "distinct"])
@pytest.mark.parametrize("L", [None, 1, 2, 4, 7])
def test_counting_route_matches_enumeration(side, L):
    N = 24
    fast = hook_totals(side_class(side, L), 8, N)
    for t in range(1, 9):
        assert fast[t] == census_total(side, t, L, N).values


@given(st.integers(1, 6), st.integers(0, 22))
def test_counting_route_random(t, n):
    for side in ("odd", "distinct"):
        fast = hook_totals(side_class(side, None), t, n)[t][n]
        assert fast == census_total(side, t, None, n)[n]


def test_beck_difference():
    a1 = census_total("odd", 1, None, 30).values
    b1 = census_total("distinct", 1, None, 30).values
    assert [y - x for x, y in zip(a1, b1)] == [count_beck(n) for n in range(31)]


def test_crossover():
    last, diffs = crossover_scan(2, 60)
    assert last == -1 and min(diffs) >= 0
    assert crossover_scan(3, 60)[0] == 7
    assert crossover_scan(3, 30, method="enumerate") == crossover_scan(3, 30)
    assert crossover_scan(10, 100)[0] == 59
    with pytest.raises(DomainError):
        crossover_scan(3, 10, method="magic")
