import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orbipolya.setpart import (
    SetPartition,
    UnionFind,
    cycle_partition,
    join,
    meet,
    orbit_partition,
)

M = 8
labels = st.lists(st.integers(0, 7), min_size=M, max_size=M)


def from_labels(ls):
    blocks = {}
    for i, label in enumerate(ls, 1):
        blocks.setdefault(label, []).append(i)
    return SetPartition(M, blocks.values())


parts = labels.map(from_labels)


def test_parse_and_str():
    p = SetPartition.parse("{4,5}{1,2,3}")
    assert str(p) == "{1,2,3}{4,5}"
    assert p.block_profile() == {3: 1, 2: 1}


def test_join_examples():
    a = SetPartition.parse("{1,2}{3}{4}")
    b = SetPartition.parse("{1}{2,3}{4}")
    assert str(a | b) == "{1,2,3}{4}"
    assert str(a & b) == "{1}{2}{3}{4}"


def test_cycle_partition():
    assert str(cycle_partition([2, 3, 1, 5, 4])) == "{1,2,3}{4,5}"
    assert cycle_partition([1, 2, 3]) == SetPartition.discrete(3)


def test_orbit_partition_of_commuting_pair():
    g = (2, 1, 4, 3)
    h = (3, 4, 1, 2)
    assert orbit_partition(4, [g, h]) == SetPartition.indiscrete(4)


def test_union_find():
    uf = UnionFind(5)
    uf.union(0, 3)
    uf.union(3, 4)
    assert uf.find(4) == uf.find(0) != uf.find(1)


@settings(max_examples=80, deadline=None)
@given(parts, parts, parts)
def test_lattice_laws(a, b, c):
    assert a | b == b | a and a & b == b & a
    assert (a | b) | c == a | (b | c)
    assert (a & b) & c == a & (b & c)
    assert a | (a & b) == a and a & (a | b) == a
    assert a <= a | b and a & b <= a
    assert a | a == a


@settings(max_examples=80, deadline=None)
@given(parts, parts)
def test_join_is_least_upper_bound(a, b):
    j = join(a, b)
    assert a <= j and b <= j
    assert meet(a, b) <= a
    # a partition coarser than both contains the join
    assert j <= SetPartition.indiscrete(M)
    assert SetPartition.discrete(M) | a == a


def test_mismatched_ground_sets():
    with pytest.raises(ValueError):
        SetPartition.discrete(3) | SetPartition.discrete(4)
