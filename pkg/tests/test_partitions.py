from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conjprob.partitions import (
    centralizer_order,
    class_size_power_sums,
    conjugacy_class_size,
    count_partitions,
    decode_cycle_type,
    encode_cycle_type,
    enumerate_partitions,
    validate_cycle_type,
)


def test_empty_partition():
    assert list(enumerate_partitions(0)) == [()]
    assert count_partitions(0) == 1
    assert centralizer_order(()) == 1


def test_reverse_lexicographic_order_n4():
    assert list(enumerate_partitions(4)) == [
        (4,),
        (3, 1),
        (2, 2),
        (2, 1, 1),
        (1, 1, 1, 1),
    ]


def test_enumeration_is_deterministic():
    for n in (5, 9, 14):
        assert list(enumerate_partitions(n)) == list(enumerate_partitions(n))


@pytest.mark.parametrize("n,expected", [(0, 1), (1, 1), (5, 7), (10, 42), (100, 190569292)])
def test_count_partitions_known_values(n, expected):
    assert count_partitions(n) == expected


def test_enumeration_count_matches_recurrence():
    for n in range(41):
        assert sum(1 for _ in enumerate_partitions(n)) == count_partitions(n)


@pytest.mark.slow
def test_enumeration_count_n80():
    assert sum(1 for _ in enumerate_partitions(80)) == 15796476 == count_partitions(80)


def test_capped_enumeration_agrees_with_filtering():
    for n in range(0, 16):
        for cap in (1, 2, 3, 5, n):
            capped = list(enumerate_partitions(n, max_part=cap))
            filtered = [p for p in enumerate_partitions(n) if not p or p[0] <= cap]
            assert sorted(capped) == sorted(filtered)
            # order must still be reverse lexicographic
            assert capped == sorted(capped, reverse=True)


def test_partition_shape():
    for n in range(20):
        for parts in enumerate_partitions(n):
            validate_cycle_type(parts)
            assert sum(parts) == n


@pytest.mark.parametrize(
    "parts,z",
    [
        ((5,), 5),
        ((7,), 7),
        ((1,) * 6, factorial(6)),
        ((2, 1, 1), 4),  # centralizer of a transposition in S_4
        ((2, 2), 8),
        ((3, 1), 3),
    ],
)
def test_centralizer_order_values(parts, z):
    assert centralizer_order(parts) == z


def test_class_sizes_partition_the_group():
    # sum over classes of their size is n!, i.e. sum of 1/z is 1
    sums = class_size_power_sums(40, power=1)
    for n in range(41):
        assert sums[n] == factorial(n)


def test_class_size_power_sums_match_direct_enumeration():
    for n in range(13):
        direct = sum(conjugacy_class_size(p) ** 2 for p in enumerate_partitions(n))
        assert class_size_power_sums(n)[n] == direct


def test_capped_power_sums_match_direct_enumeration():
    for n in range(12):
        for cap in (1, 2, 4):
            direct = sum(
                conjugacy_class_size(p)
                for p in enumerate_partitions(n, max_part=cap)
            )
            assert class_size_power_sums(n, power=1, max_part=cap)[n] == direct


def test_encoding_roundtrip_and_injectivity():
    for n in range(18):
        seen = set()
        for parts in enumerate_partitions(n):
            blob = encode_cycle_type(parts)
            assert decode_cycle_type(blob) == parts
            seen.add(blob)
        assert len(seen) == count_partitions(n)


def test_encoding_format():
    assert encode_cycle_type(()) == b""
    assert encode_cycle_type((3, 1, 1)) == b"3x1.1x2"
    assert encode_cycle_type((4, 4, 2)) == b"4x2.2x1"


@given(st.integers(min_value=0, max_value=60))
@settings(max_examples=30, deadline=None)
def test_first_partition_is_singleton(n):
    first = next(iter(enumerate_partitions(n)))
    assert first == ((n,) if n else ())


@given(st.lists(st.integers(min_value=1, max_value=12), min_size=0, max_size=10))
@settings(max_examples=100, deadline=None)
def test_centralizer_divides_factorial(parts):
    parts = tuple(sorted(parts, reverse=True))
    n = sum(parts)
    assert factorial(n) % centralizer_order(parts) == 0


def test_validate_rejects_bad_input():
    with pytest.raises(ValueError):
        validate_cycle_type((1, 2))
    with pytest.raises(ValueError):
        validate_cycle_type((3, 0))
    with pytest.raises(ValueError):
        list(enumerate_partitions(-1))
