import pytest

from orbipolya.permgroup import builtin_group
from orbipolya.polyring import MultiPoly
from orbipolya.weighted import (
    ActionError,
    GroupAction,
    WeightNotInvariantError,
    WeightedSet,
    fixed_weight,
    weighted_cardinality,
)


def test_cardinality_uses_pointwise_power():
    X = WeightedSet.generic(2)
    assert X.cardinality(2) == MultiPoly.var(1, 2) + MultiPoly.var(2, 2)
    assert weighted_cardinality(WeightedSet.uniform(3)) == MultiPoly.constant(3)
    assert WeightedSet.uniform(3).is_integral()
    assert not X.is_integral()
    assert WeightedSet([1, 2], {1: 2, 2: 5}).powered(2).cardinality() == MultiPoly.constant(29)


def test_duplicate_and_missing_weights():
    with pytest.raises(ValueError):
        WeightedSet([1, 1])
    with pytest.raises(ValueError):
        WeightedSet([1, 2], {1: 1})


def test_natural_action_fixed_points():
    G = builtin_group("cyclic", 4)
    A = GroupAction.natural(G)
    g = next(p for p in G if p.order() == 2)
    assert A.fixed_points(g) == []
    assert fixed_weight(A, [G.identity]) == MultiPoly.constant(4)


def test_weight_must_be_invariant():
    G = builtin_group("cyclic", 3)
    with pytest.raises(WeightNotInvariantError):
        GroupAction.natural(G, WeightedSet.generic(3))


def test_non_action_rejected():
    G = builtin_group("cyclic", 3)
    X = WeightedSet(["a", "b"])
    with pytest.raises(ActionError):
        GroupAction(G, X, lambda g, x: "a")
