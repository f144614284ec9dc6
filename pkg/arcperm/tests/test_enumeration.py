import math

import pytest

from arcperm.enumeration import (TABLE2, DistributionTable, EnumerationError, SetPartition, catalan,
                                 crossing_distribution, iterate_permutations, joint_distribution,
                                 k_noncrossing_counts, max_crossing_count, max_nesting_closed_form,
                                 max_nesting_count, noncrossing_partitions, noncrossing_to_partition,
                                 pair_count_distribution, partition_to_noncrossing, permutation_blocks,
                                 set_partitions, tally, verify_bijection, verify_closure, verify_symmetry,
                                 verify_table2)
from arcperm.perm_core import Permutation
from arcperm.statistics import ChainKind


def _partition(n, *blocks):
    return SetPartition(n, tuple(frozenset(b) for b in blocks))


def test_iterate_permutations():
    assert list(iterate_permutations(1)) == [Permutation((1,))]
    perms = list(iterate_permutations(3))
    assert len(perms) == 6
    assert perms[0] == Permutation((1, 2, 3)) and perms[-1] == Permutation((3, 2, 1))
    assert perms == sorted(perms, key=lambda p: p.image)
    assert sum(1 for _ in iterate_permutations(7)) == math.factorial(7)


def test_iterate_permutations_rejects():
    with pytest.raises(EnumerationError):
        list(iterate_permutations(0))
    with pytest.raises(EnumerationError):
        list(iterate_permutations(13))
    with pytest.raises(EnumerationError):
        list(iterate_permutations(3, (1, 1)))


def test_blocks_are_contiguous_and_cover():
    for n in (1, 2, 5):
        blocks = permutation_blocks(n)
        joined = [p for prefix in blocks for p in iterate_permutations(n, prefix)]
        assert joined == list(iterate_permutations(n))


def test_crossing_distribution_table2():
    assert crossing_distribution(4).entries == {1: 14, 2: 10}
    assert crossing_distribution(6).entries == {1: 132, 2: 543, 3: 45}
    for n in range(1, 8):
        table = crossing_distribution(n)
        assert [table[k] for k in range(1, len(TABLE2[n]) + 1)] == TABLE2[n]
        assert table.total == math.factorial(n)


def test_nesting_distribution_matches_crossing():
    for n in range(1, 7):
        assert crossing_distribution(n, ChainKind.NESTING).entries == crossing_distribution(n).entries


def test_joint_distribution():
    assert joint_distribution(1).entries == {(1, 1): 1}
    assert joint_distribution(3).entries == {(1, 1): 4, (1, 2): 1, (2, 1): 1}
    refined = joint_distribution(3, refine=True)
    assert refined[(2, 1, 'OUC')] == 1 and refined[(1, 2, 'OUC')] == 1
    assert refined.total == 6


def test_joint_distribution_bounds():
    with pytest.raises(EnumerationError):
        joint_distribution(9)
    with pytest.raises(EnumerationError):
        joint_distribution(8, refine=True)


def test_to_frame():
    frame = joint_distribution(3, refine=True).to_frame()
    assert list(frame.columns) == ['n', 'cr', 'ne', 'degree_class', 'count']
    assert frame['count'].sum() == 6
    frame = crossing_distribution(4).to_frame()
    assert frame.values.tolist() == [[4, 1, 14], [4, 2, 10]]


def test_distribution_table_checks_total():
    with pytest.raises(AssertionError):
        DistributionTable(3, {1: 5})


def test_parallel_tally_matches_sequential():
    assert tally(6, 'refined', jobs=2) == tally(6, 'refined', jobs=1)
    assert tally(7, 'crossing', jobs=3) == tally(7, 'crossing', jobs=1)


def test_verify_symmetry():
    assert verify_symmetry(1).passed
    assert verify_symmetry(3, refine=True).passed
    assert verify_symmetry(6).passed
    assert verify_symmetry(6, refine=True).passed


def test_verify_symmetry_reports_violations():
    broken = DistributionTable(3, {(1, 1): 4, (1, 2): 2})
    report = verify_symmetry(3, table=broken)
    assert not report.passed
    assert 'NC(1,2)=2' in report.failures[0]


@pytest.mark.parametrize('n, count', [(4, 10), (5, 2), (6, 45), (7, 6)])
def test_max_nesting(n, count):
    assert max_nesting_count(n) == count
    assert max_crossing_count(n) == count
    assert max_nesting_closed_form(n) == count


def test_max_nesting_closed_form():
    assert [max_nesting_closed_form(n) for n in range(4, 10)] == [10, 2, 45, 6, 233, 24]
    assert max_nesting_closed_form(2) == 2
    assert max_nesting_closed_form(1) == 1
    with pytest.raises(EnumerationError):
        max_nesting_closed_form(0)
    with pytest.raises(EnumerationError):
        max_nesting_count(10)


def test_catalan():
    assert [catalan(n) for n in range(10)] == [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862]
    with pytest.raises(EnumerationError):
        catalan(-1)


def test_set_partition_validation():
    with pytest.raises(EnumerationError):
        _partition(3, {1, 2})
    with pytest.raises(EnumerationError):
        _partition(2, {1, 2}, set())
    assert str(_partition(3, {3, 1}, {2})) == '{{1,3},{2}}'


def test_set_partitions_counts():
    # Bell numbers and Catalan numbers
    assert [sum(1 for _ in set_partitions(n)) for n in range(1, 7)] == [1, 2, 5, 15, 52, 203]
    assert [sum(1 for _ in noncrossing_partitions(n)) for n in range(1, 8)] == [catalan(n) for n in range(1, 8)]
    assert not _partition(4, {1, 3}, {2, 4}).is_noncrossing()
    assert _partition(4, {1, 4}, {2, 3}).is_noncrossing()


def test_noncrossing_to_partition():
    assert noncrossing_to_partition(Permutation((3, 1, 2))) == _partition(3, {1, 2, 3})
    assert noncrossing_to_partition(Permutation((1, 2, 3))) == _partition(3, {1}, {2}, {3})
    assert noncrossing_to_partition(Permutation((3, 2, 1))) == _partition(3, {1, 3}, {2})
    with pytest.raises(EnumerationError):
        noncrossing_to_partition(Permutation((2, 3, 1)))


def test_partition_to_noncrossing():
    assert partition_to_noncrossing(_partition(3, {1, 2, 3})) == Permutation((3, 1, 2))
    assert partition_to_noncrossing(_partition(3, {1, 3}, {2})) == Permutation((3, 2, 1))
    with pytest.raises(EnumerationError):
        partition_to_noncrossing(_partition(4, {1, 3}, {2, 4}))
    for p in noncrossing_partitions(6):
        assert noncrossing_to_partition(partition_to_noncrossing(p)) == p


def test_verify_bijection():
    for n in range(1, 7):
        report = verify_bijection(n)
        assert report.passed, report.failures
        assert report.checked == catalan(n)


def test_pair_count_distribution():
    crossings, nestings = pair_count_distribution(5)
    assert crossings == nestings
    assert sum(crossings.values()) == 120


def test_k_noncrossing_counts():
    counts = k_noncrossing_counts(4)
    assert counts[2] == (14, 14)
    assert counts[3] == (24, 24)
    assert counts[5] == (24, 24)


def test_verify_closure():
    assert verify_closure(5, 'no_lower_transient').passed
    assert verify_closure(5, 'no_upper_transient').passed
    with pytest.raises(EnumerationError):
        verify_closure(3, 'odd')


def test_verify_table2():
    report = verify_table2(7)
    assert report.passed and report.checked == 7


def test_verify_table2_from_min_n():
    report = verify_table2(6, min_n=5)
    assert report.passed and report.checked == 2
    with pytest.raises(EnumerationError):
        verify_table2(4, min_n=5)
    with pytest.raises(EnumerationError):
        verify_table2(10)
