from math import comb

import pytest

from granula.combinatorics import (
    bell,
    granule_count,
    restricted_growth_strings,
    set_partitions,
    subsets,
    subsets_by_size,
)

BELL = [1, 1, 2, 5, 15, 52, 203, 877]


@pytest.mark.parametrize("n", range(8))
def test_bell_numbers(n):
    assert bell(n) == BELL[n]


@pytest.mark.parametrize("n", range(7))
def test_rgs_count_and_shape(n):
    strings = list(restricted_growth_strings(n))
    assert len(strings) == BELL[n]
    assert len(set(map(tuple, strings))) == len(strings)
    for s in strings:
        top = -1
        for x in s:
            assert x <= top + 1
            top = max(top, x)


def test_set_partitions_of_three():
    parts = [sorted(map(sorted, p)) for p in set_partitions([1, 2, 3])]
    assert len(parts) == 5
    assert [[1], [2], [3]] in parts and [[1, 2, 3]] in parts


@pytest.mark.parametrize("n", range(1, 7))
def test_granule_count_formula(n):
    assert granule_count(n) == sum(comb(n, k) * BELL[k] for k in range(1, n + 1))


def test_granule_counts_frozen():
    assert [granule_count(n) for n in range(1, 6)] == [1, 4, 14, 51, 202]


def test_subsets():
    assert len(list(subsets(4))) == 16
    sized = list(subsets_by_size(3, nonempty=True))
    assert len(sized) == 7
    assert [len(s) for s in sized] == sorted(len(s) for s in sized)
