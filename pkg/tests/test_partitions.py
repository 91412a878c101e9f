import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qtau.arith import binom_mod2
from qtau.errors import DomainError
from qtau.partitions import (SERIES_PAIR_BUDGET, FrequencyConstraint, PartitionShape, bounded_frequency_count,
                             bounded_frequency_table, composition_weighted_sum, composition_weighted_sum_brute,
                             composition_weighted_table, count_partitions, distinct_table, enum_partitions,
                             frequency_set_count, frequency_set_table, p_count, partition_numbers, q_distinct,
                             regular_count, regular_table, series_pairs, weak_compositions)
from qtau.series import eta_factor, invert

P_VALUES = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176, 231, 297, 385, 490, 627]


def test_shape_from_parts():
    shape = PartitionShape.from_parts([1, 3, 1, 3, 2])
    assert shape.pairs == ((3, 2), (2, 1), (1, 2))
    assert shape.size == 10
    assert shape.frequencies == (2, 1, 2)
    assert shape.parts() == [3, 3, 2, 1, 1]
    assert len(shape) == 5
    assert str(shape) == '3^2 2^1 1^2'
    assert str(PartitionShape()) == '()'


def test_shape_validation():
    with pytest.raises(DomainError):
        PartitionShape(((1, 1), (2, 1)))
    with pytest.raises(DomainError):
        PartitionShape(((2, 0),))


def test_enumeration_order():
    assert [shape.parts() for shape in enum_partitions(4)] == [[4], [3, 1], [2, 2], [2, 1, 1], [1, 1, 1, 1]]
    assert [shape.pairs for shape in enum_partitions(0)] == [()]
    with pytest.raises(DomainError):
        list(enum_partitions(-1))


def test_enumeration_yields_valid_distinct_partitions():
    shapes = list(enum_partitions(12))
    assert len(shapes) == len(set(shapes)) == 77
    assert all(shape.size == 12 for shape in shapes)


def test_constraint_factories():
    with pytest.raises(DomainError):
        FrequencyConstraint.frequency_set([])
    with pytest.raises(DomainError):
        FrequencyConstraint.frequency_set([0, 2])
    with pytest.raises(DomainError):
        FrequencyConstraint.max_frequency(0)
    regular = FrequencyConstraint.no_part_divisible_by(3)
    assert regular.allows_part(4) and not regular.allows_part(6)
    assert not FrequencyConstraint.distinct_parts().allows_frequency(2)


def test_partition_numbers():
    assert partition_numbers(20) == P_VALUES
    assert p_count(100) == 190569292
    assert p_count(0) == 1
    with pytest.raises(DomainError):
        p_count(-1)


def test_partition_numbers_invert_the_euler_product():
    assert partition_numbers(2000) == list(invert(eta_factor(1, 2000)).coeffs)


def test_partition_numbers_returns_a_copy():
    table = partition_numbers(5)
    table[0] = 99
    assert partition_numbers(5)[0] == 1


def test_partition_numbers_match_enumeration():
    assert [count_partitions(n) for n in range(21)] == P_VALUES


def test_distinct_parts():
    assert distinct_table(10) == [1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10]
    assert q_distinct(30) == count_partitions(30, FrequencyConstraint.distinct_parts())


@pytest.mark.parametrize('t', range(2, 8))
def test_regular_series_matches_enumeration(t):
    constraint = FrequencyConstraint.no_part_divisible_by(t)
    assert regular_table(t, 60) == [count_partitions(n, constraint) for n in range(61)]


def test_regular_known_values():
    assert regular_table(9, 3) == [1, 1, 2, 3]
    assert regular_table(4, 6) == [1, 1, 2, 3, 4, 6, 9]
    assert regular_count(2, 10) == q_distinct(10)
    with pytest.raises(DomainError):
        regular_table(1, 5)


@pytest.mark.parametrize('t', range(1, 7))
def test_bounded_frequency_equals_regular(t):
    assert bounded_frequency_table(t, 500) == regular_table(t + 1, 500)


def test_bounded_frequency_matches_enumeration():
    assert [count_partitions(n, FrequencyConstraint.max_frequency(2)) for n in range(30)] == \
        bounded_frequency_table(2, 29)
    assert bounded_frequency_count(3, 40) == regular_count(4, 40)
    with pytest.raises(DomainError):
        bounded_frequency_table(0, 5)


@settings(max_examples=30, deadline=None)
@given(st.frozensets(st.integers(min_value=1, max_value=8), min_size=1, max_size=4))
def test_frequency_set_methods_agree(allowed):
    assert frequency_set_table(allowed, 25, method='series') == frequency_set_table(allowed, 25, method='enumerate')


def test_auto_budget_counts_series_shift_passes():
    assert series_pairs({1, 3}, 10) == 13
    wide = [a for a in range(1, 96) if binom_mod2(95, a)]
    assert len(wide) == 63
    assert series_pairs(wide, 300) <= SERIES_PAIR_BUDGET
    assert frequency_set_table(wide, 300) == frequency_set_table(wide, 300, method='series')


def test_auto_falls_back_to_enumeration_past_the_budget(monkeypatch):
    monkeypatch.setattr('qtau.partitions.SERIES_PAIR_BUDGET', 0)
    assert frequency_set_table({1, 2}, 12) == frequency_set_table({1, 2}, 12, method='series')


def test_frequency_set_examples():
    assert frequency_set_table({1}, 10) == distinct_table(10)
    assert frequency_set_count({1, 3, 5}, 20) == count_partitions(20, FrequencyConstraint.frequency_set({1, 3, 5}))
    assert frequency_set_table({1000}, 5, method='auto') == [1, 0, 0, 0, 0, 0]
    with pytest.raises(DomainError):
        frequency_set_table({1}, 5, method='magic')
    with pytest.raises(DomainError):
        frequency_set_table({1}, -1)


def test_weak_compositions():
    assert list(weak_compositions(2, 2)) == [(0, 2), (1, 1), (2, 0)]
    assert list(weak_compositions(0, 3)) == [(0, 0, 0)]
    assert len(list(weak_compositions(6, 3))) == 28
    with pytest.raises(DomainError):
        list(weak_compositions(3, 0))


@pytest.mark.parametrize('k', range(1, 5))
def test_composition_convolution_matches_brute_force(k):
    assert composition_weighted_table(k, 25) == [composition_weighted_sum_brute(k, n) for n in range(26)]


def test_composition_weighted_sum():
    assert composition_weighted_sum(1, 10) == p_count(10)
    # two-coloured partitions
    assert composition_weighted_table(2, 5) == [1, 2, 5, 10, 20, 36]
    with pytest.raises(DomainError):
        composition_weighted_table(0, 5)
