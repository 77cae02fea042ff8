from fractions import Fraction

import pytest

from orbipolya import oracle
from orbipolya.counting import (
    ORBI,
    PLAIN,
    ExponentSumWarning,
    NonIntegralCountError,
    c_orb_cyclic,
    coloring_coefficient,
    coloring_gf,
    cycles_on_quotient,
    necklace_count,
    orbi_polya_count,
    orbifold_cohomology_dimension,
    orbinecklace_count,
    orbiquotient_count,
    polya_count,
    quotient_count,
)
from orbipolya.permgroup import builtin_group
from orbipolya.polyring import MultiPoly
from orbipolya.weighted import GroupAction, WeightedSet

S = lambda n: builtin_group("symmetric", n)
C = lambda n: builtin_group("cyclic", n)


def value(p):
    return p.constant_value()


def test_fixed_values():
    assert value(orbi_polya_count(S(2), WeightedSet.uniform(2))) == 5
    assert value(orbi_polya_count(S(3), WeightedSet.uniform(2))) == 10
    assert value(polya_count(C(3), WeightedSet.uniform(2))) == 4
    assert value(polya_count(S(3), WeightedSet.uniform(2))) == 4


def test_generic_weights():
    gf = orbi_polya_count(C(2), WeightedSet.generic(2))
    assert gf.to_text() == "2*x1^2 + x1*x2 + 2*x2^2"
    assert gf == coloring_gf(C(2), 2, orbi=True)


def test_orbit_counts_on_natural_action():
    G = builtin_group("dihedral", 4)
    A = GroupAction.natural(G)
    assert value(quotient_count(A)) == 1
    # X^g / Z(g) summed over the 5 classes
    assert value(orbiquotient_count(A)) == len(oracle.enumerate_orbiquotient(A))


def test_non_integral_weights_are_not_rejected():
    X = WeightedSet([1, 2], {1: Fraction(1, 2), 2: Fraction(1, 2)})
    assert value(polya_count(C(2), X)) == Fraction(3, 4)


def test_non_integral_result_raises():
    # an unchecked map that is not an action breaks Burnside's integrality
    G = C(2)
    A = GroupAction(G, WeightedSet(["a", "b"]), lambda g, x: x if g.is_identity() else "a", check=False)
    with pytest.raises(NonIntegralCountError):
        quotient_count(A)


def test_coefficients():
    assert coloring_coefficient(C(2), [2, 0], orbi=True) == 2
    assert coloring_coefficient(C(2), [1, 1], orbi=True) == 1
    with pytest.warns(ExponentSumWarning):
        assert coloring_coefficient(C(3), [1, 1], orbi=True) == 0
    with pytest.raises(ValueError):
        coloring_coefficient(C(2), [3, -1])


def test_c_orb_cyclic_matches_coefficient():
    for n in range(1, 7):
        for i in range(n + 1):
            e = [i, n - i]
            assert c_orb_cyclic(n, e) == coloring_coefficient(C(n), e, orbi=True)


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_necklaces(p):
    for r in range(1, 5):
        assert necklace_count(p, r) == value(polya_count(C(p), WeightedSet.uniform(r)))
        assert orbinecklace_count(p, r) == value(orbi_polya_count(C(p), WeightedSet.uniform(r)))
    with pytest.raises(ValueError):
        necklace_count(4, 2)


def test_orbinecklace_example():
    assert orbinecklace_count(3, 2) == 8


def test_cycles_examples():
    inner = (S(2), WeightedSet.uniform(1))
    assert value(cycles_on_quotient(2, inner, ORBI, ORBI)) == 5
    assert value(cycles_on_quotient(2, inner, PLAIN, PLAIN)) == 1
    assert value(cycles_on_quotient(1, inner, ORBI, PLAIN)) == 2


@pytest.mark.parametrize("q", [PLAIN, ORBI])
@pytest.mark.parametrize("c", [PLAIN, ORBI])
def test_cycles_match_direct_construction(q, c):
    for G in (C(2), S(3)):
        X = WeightedSet.uniform(2)
        A = oracle.induced_power_action(G, X)
        for n in (1, 2, 3):
            got = cycles_on_quotient(n, (G, X), q, c)
            assert got == cycles_on_quotient(n, A, q, c)
            assert got == oracle.cycles_on_quotient_direct(n, A, q == ORBI, c == ORBI)


def test_cycles_rejects_bad_flags():
    with pytest.raises(ValueError):
        cycles_on_quotient(2, (C(2), WeightedSet.uniform(2)), "other", ORBI)
    with pytest.raises(ValueError):
        cycles_on_quotient(0, (C(2), WeightedSet.uniform(2)))


def test_cohomology_dimension():
    assert orbifold_cohomology_dimension(2, 2) == 5
    assert orbifold_cohomology_dimension(3, 2) == 10
    assert orbifold_cohomology_dimension(3, 0) == 0
    for n in range(1, 5):
        for b in range(1, 3):
            A = oracle.induced_power_action(S(n), WeightedSet.uniform(b))
            assert orbifold_cohomology_dimension(n, b) == len(oracle.enumerate_orbiquotient(A))
