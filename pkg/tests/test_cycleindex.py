import random
from fractions import Fraction

import pytest

from orbipolya.cycleindex import (
    AS_PRINTED,
    TOP_IS_0_MOD_4,
    TOP_IS_2_MOD_4,
    cycle_index,
    cycle_index_cyclic,
    cycle_index_dihedral,
    cycle_index_symmetric,
    depth2_partitions,
    integer_partitions,
    orbicycle_index,
    orbicycle_index_cyclic,
    orbicycle_index_dihedral,
    orbicycle_index_symmetric,
)
from orbipolya.permgroup import builtin_group
from orbipolya.polyring import MultiPoly

x = MultiPoly.var


def test_small_indices():
    S3 = builtin_group("symmetric", 3)
    assert cycle_index(S3) == x(1, 3) / 6 + x(1) * x(2) / 2 + x(3) / 3
    assert orbicycle_index(S3).to_text() == "1/6*x1^3 + 3/2*x1*x2 + 4/3*x3"
    assert orbicycle_index(builtin_group("cyclic", 3)).to_text() == "1/3*x1^3 + 8/3*x3"
    assert orbicycle_index(builtin_group("cyclic", 1)) == x(1)
    assert orbicycle_index(builtin_group("trivial", 4)) == x(1, 4)


def test_partition_counts():
    assert [sum(1 for _ in integer_partitions(n)) for n in range(1, 9)] == [1, 2, 3, 5, 7, 11, 15, 22]
    # a depth-2 partition is a multiset of (i, j) parts of size i*j, and there
    # are d(k) parts of size k: Euler transform of the divisor function
    want = [1] + [0] * 8
    for k in range(1, 9):
        for _ in range(sum(1 for i in range(1, k + 1) if k % i == 0)):
            for s in range(k, 9):
                want[s] += want[s - k]
    assert [len(depth2_partitions(n)) for n in range(1, 9)] == want[1:]
    assert want[1:8] == [1, 3, 5, 11, 17, 34, 52]
    for beta in depth2_partitions(5):
        assert beta.n == 5 and beta.alpha().n == 5


@pytest.mark.parametrize("n", range(1, 13))
def test_cyclic_closed_forms(n):
    G = builtin_group("cyclic", n)
    assert cycle_index_cyclic(n) == cycle_index(G)
    assert orbicycle_index_cyclic(n) == orbicycle_index(G)


@pytest.mark.parametrize("n", range(3, 13))
def test_dihedral_closed_forms(n):
    G = builtin_group("dihedral", n)
    assert cycle_index_dihedral(n) == cycle_index(G)
    assert orbicycle_index_dihedral(n) == orbicycle_index(G)


@pytest.mark.parametrize("n", range(1, 7))
def test_symmetric_closed_forms(n):
    G = builtin_group("symmetric", n)
    assert cycle_index_symmetric(n) == cycle_index(G)
    assert orbicycle_index_symmetric(n) == orbicycle_index(G)


def test_symmetric_closed_form_is_integral_at_integers():
    # |[b]^n /orb S_n| must be an integer for every b
    for n in range(1, 10):
        for b in range(0, 4):
            assert orbicycle_index_symmetric(n).evaluate(b).denominator == 1


def test_printed_odd_dihedral_differs_by_cyclic_index():
    for n in (3, 5, 7, 9):
        truth = orbicycle_index(builtin_group("dihedral", n))
        printed = orbicycle_index_dihedral(n, AS_PRINTED)
        assert truth - printed == cycle_index_cyclic(n) * Fraction(3, 2)
    printed3 = orbicycle_index_dihedral(3, AS_PRINTED)
    assert (orbicycle_index(builtin_group("dihedral", 3)) - printed3).to_text() == "1/2*x1^3 + x3"


def test_printed_even_dihedral_brace_readings():
    for n in (4, 6, 8, 10):
        with pytest.raises(ValueError):
            orbicycle_index_dihedral(n, AS_PRINTED, TOP_IS_0_MOD_4)
        printed = orbicycle_index_dihedral(n, AS_PRINTED, TOP_IS_2_MOD_4)
        assert printed != orbicycle_index(builtin_group("dihedral", n))


def test_unknown_variant():
    with pytest.raises(ValueError):
        orbicycle_index_dihedral(5, "other")
    with pytest.raises(ValueError):
        orbicycle_index_dihedral(2)


@pytest.mark.parametrize("spec", ["D:6", "S:4", "C:6"])
def test_representative_independence(spec):
    from orbipolya.permgroup import parse_group_spec

    G = parse_group_spec(spec)
    base = orbicycle_index(G)
    for seed in range(5):
        assert orbicycle_index(G, random.Random(seed)) == base


def test_structural_invariants():
    for fam, n in [("cyclic", 6), ("dihedral", 7), ("symmetric", 5), ("trivial", 2)]:
        G = builtin_group(fam, n)
        P, Q = cycle_index(G), orbicycle_index(G)
        assert P.evaluate(1) == 1
        assert Q.evaluate(1) == len(G.classes)
        for poly in (P, Q):
            for mono, c in poly.terms.items():
                assert c > 0 and mono.weighted_degree == n
