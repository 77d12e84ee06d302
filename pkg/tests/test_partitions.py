"""Partition enumeration against independent oracles."""

from functools import lru_cache

import pytest

from chigenus.partitions import as_partition, merge, partitions_of, weight


@lru_cache(maxsize=None)
def pentagonal_count(n: int) -> int:
    """Partition counts via Euler's pentagonal-number recurrence."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    total = 0
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        g2 = k * (3 * k + 1) // 2
        if g1 > n and g2 > n:
            break
        sign = 1 if k % 2 == 1 else -1
        total += sign * (pentagonal_count(n - g1) + pentagonal_count(n - g2))
        k += 1
    return total


def brute_force_partitions(n: int) -> set[tuple[int, ...]]:
    """Exhaustive enumeration by a different recursion (smallest part last)."""
    if n == 0:
        return {()}
    found = set()
    for first in range(1, n + 1):
        for rest in brute_force_partitions(n - first):
            candidate = tuple(sorted((first,) + rest, reverse=True))
            found.add(candidate)
    return found


def test_zero_has_single_empty_partition():
    assert partitions_of(0) == [()]


def test_two():
    assert partitions_of(2) == [(2,), (1, 1)]


def test_six_has_eleven_partitions():
    result = partitions_of(6)
    assert len(result) == 11
    assert set(result) == brute_force_partitions(6)


def test_counts_match_pentagonal_recurrence():
    for n in range(21):
        assert len(partitions_of(n)) == pentagonal_count(n)


def test_reverse_lexicographic_order():
    for n in range(1, 12):
        listing = partitions_of(n)
        assert listing == sorted(listing, reverse=True)
        assert len(set(listing)) == len(listing)
        assert all(weight(p) == n for p in listing)
        assert all(all(p[i] >= p[i + 1] for i in range(len(p) - 1)) for p in listing)


def test_negative_rejected():
    with pytest.raises(ValueError):
        partitions_of(-1)


def test_merge_sorts():
    assert merge((3, 1), (2, 2)) == (3, 2, 2, 1)
    assert merge((), (5,)) == (5,)


def test_as_partition():
    assert as_partition([1, 3, 2]) == (3, 2, 1)
    with pytest.raises(ValueError):
        as_partition([2, 0])
