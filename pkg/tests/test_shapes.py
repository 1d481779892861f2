from itertools import product
from math import comb

import pytest
from hypothesis import given, strategies as st

from vtab.di import di_forward
from vtab.shapes import (
    LatticePath,
    ballot,
    ballot_matches_syt,
    bell,
    catalan,
    count_reference,
    is_hook_sequence,
    is_one_row,
    is_two_row_sequence,
    one_row_count,
    one_row_to_set_partition,
    set_partition_to_one_row,
    stirling2,
    syt_from_second_row,
    two_row_decompose,
    two_row_from_syt,
)
from vtab.tableaux import SetPartition, Tableau, count_syt, enumerate_syt, set_partitions

# Row k of the Stirling triangle of the second kind, i = 0..k.
STIRLING_ROWS = {
    4: [0, 1, 7, 6, 1],
    5: [0, 1, 15, 25, 10, 1],
    6: [0, 1, 31, 90, 65, 15, 1],
}
CATALAN = [1, 1, 2, 5, 14, 42, 132]


def shapes_of(n, k):
    return {seq: di_forward(seq, n).shape for seq in product(range(1, n + 1), repeat=k)}


def test_reference_counts():
    for k, row in STIRLING_ROWS.items():
        assert [stirling2(k, i) for i in range(k + 1)] == row
    assert [catalan(m) for m in range(7)] == CATALAN
    assert [bell(k) for k in range(7)] == [sum(1 for _ in set_partitions(k)) for k in range(7)]
    assert one_row_count(2, 4) == 1 + 7
    assert count_reference("binomial", 5, 2) == 10
    with pytest.raises(ValueError):
        count_reference("fibonacci", 3)


def test_one_row_examples():
    assert is_one_row((3, 4, 4), 4)
    assert not is_one_row((3, 2, 4), 4)
    assert is_one_row((), 3)
    assert one_row_to_set_partition((3, 4, 4), 4) == SetPartition(((1,), (2, 3)))
    assert set_partition_to_one_row(SetPartition(((1,), (2, 3))), 4) == (3, 4, 4)
    with pytest.raises(ValueError):
        one_row_to_set_partition((1,), 3)
    with pytest.raises(ValueError):
        set_partition_to_one_row(SetPartition(((1,), (2,), (3,))), 2)


def test_hook_examples():
    assert is_hook_sequence((4, 2, 1), 5)
    assert not is_hook_sequence((5, 2, 1), 5)
    assert not is_hook_sequence((4, 4), 5)


def test_two_row_worked_example():
    p = Tableau(((1, 2, 4, 7, 8, 9, 11, 15), (3, 5, 6, 10, 12, 13, 14)))
    seq = two_row_from_syt(p)
    assert seq == (2, 4, 4, 9, 11, 11, 11)
    d = two_row_decompose(seq, 15)
    assert d.v == (2, 3, 3, 6, 7, 7, 7)
    assert d.eps == (0, 1, 1, 3, 4, 4, 4)
    assert d.second_row == p.rows[1]
    assert d.path.north_xs == d.v
    assert syt_from_second_row(d.second_row, 15) == p
    assert di_forward(seq, 15).p == p


def test_two_row_small_cases():
    d = two_row_decompose((2, 2), 4)
    assert (d.v, d.eps) == ((2, 2), (0, 0))
    d = two_row_decompose((1, 3), 4)
    assert (d.v, d.eps) == ((1, 2), (0, 1))
    for seq in [(3, 2), (1, 1), (4, 4)]:
        assert not is_two_row_sequence(seq, 4)
    with pytest.raises(ValueError):
        two_row_decompose((1, 2, 3), 5)


def test_lattice_path():
    path = LatticePath.from_north_xs((1, 2), 2)
    assert path.steps == "ENEN"
    with pytest.raises(ValueError):
        LatticePath("NE")
    with pytest.raises(ValueError):
        LatticePath("EX")


@pytest.mark.parametrize("n", range(1, 7))
def test_one_row_characterization(n):
    for k in range(0, 5):
        table = shapes_of(n, k)
        members = [s for s, lam in table.items() if lam == (n,)]
        assert members == [s for s in table if is_one_row(s, n)]
        assert len(members) == sum(stirling2(k, i) for i in range(n + 1))
        for s in members:
            assert set_partition_to_one_row(one_row_to_set_partition(s, n), n) == s


@pytest.mark.parametrize("n", range(2, 7))
def test_hook_characterization(n):
    for k in range(1, n):
        hook = (n - k,) + (1,) * k
        table = shapes_of(n, k)
        members = [s for s, lam in table.items() if lam == hook]
        assert members == [s for s in table if is_hook_sequence(s, n)]
        assert len(members) == comb(n - 1, k) == count_syt(hook)


@pytest.mark.parametrize("n", range(2, 7))
def test_two_row_characterization(n):
    for k in range(1, n // 2 + 1):
        table = shapes_of(n, k)
        members = {s for s, lam in table.items() if lam == (n - k, k)}
        assert members == {s for s in table if is_two_row_sequence(s, n)}
        from_syt = {two_row_from_syt(p) for p in enumerate_syt((n - k, k))}
        assert from_syt == members
        assert len(members) == count_syt((n - k, k)) == ballot(n, k)
        for s in members:
            d = two_row_decompose(s, n)
            assert di_forward(s, n).p.rows[1] == d.second_row
            assert tuple(a + b for a, b in zip(d.v, d.eps)) == s


def test_catalan_specialization():
    for m in range(1, 6):
        assert count_syt((m, m)) == catalan(m) == ballot(2 * m, m)


@given(st.integers(1, 20), st.integers(0, 10))
def test_ballot_is_syt_count(n, k):
    if 2 * k <= n:
        assert ballot_matches_syt(n, k)
