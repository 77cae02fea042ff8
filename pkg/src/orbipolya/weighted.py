"""Weighted finite sets and group actions on them."""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Hashable, Iterable, Mapping, Sequence, Union

from .permgroup import Permutation, PermutationGroup
from .polyring import MultiPoly, poly_sum

Label = Hashable
WeightLike = Union[MultiPoly, int, Fraction]


class ActionError(ValueError):
    pass


class WeightNotInvariantError(ActionError):
    pass


def _as_poly(w: WeightLike) -> MultiPoly:
    return w if isinstance(w, MultiPoly) else MultiPoly.constant(w)


class WeightedSet:
    """A finite ordered set of labels, each carrying a polynomial weight.

    ``weight`` may be a mapping, a callable, or ``None`` for the trivial
    weight 1.
    """

    def __init__(
        self,
        elements: Iterable[Label],
        weight: Mapping[Label, WeightLike] | Callable[[Label], WeightLike] | None = None,
    ):
        self.elements: tuple[Label, ...] = tuple(elements)
        if len(set(self.elements)) != len(self.elements):
            raise ValueError("weighted set elements must be distinct")
        if weight is None:
            one = MultiPoly.constant(1)
            self.weights = {x: one for x in self.elements}
        elif callable(weight):
            self.weights = {x: _as_poly(weight(x)) for x in self.elements}
        else:
            missing = [x for x in self.elements if x not in weight]
            if missing:
                raise ValueError(f"no weight given for {missing[:3]}")
            self.weights = {x: _as_poly(weight[x]) for x in self.elements}

    @classmethod
    def uniform(cls, r: int) -> "WeightedSet":
        """[r] = {1..r} with every weight 1."""
        return cls(range(1, r + 1))

    @classmethod
    def generic(cls, r: int) -> "WeightedSet":
        """[r] with f(i) = x_i."""
        return cls(range(1, r + 1), lambda i: MultiPoly.var(i))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def weight(self, x: Label) -> MultiPoly:
        return self.weights[x]

    def cardinality(self, power: int = 1) -> MultiPoly:
        """|X|_{f^k} = sum of f(x)^k (pointwise power, then sum)."""
        if power < 1:
            raise ValueError(f"power must be >= 1, got {power}")
        return poly_sum(self.weights[x] ** power for x in self.elements)

    def powered(self, k: int) -> "WeightedSet":
        """Same labels with weight f^k."""
        return WeightedSet(self.elements, {x: self.weights[x] ** k for x in self.elements})

    def is_integral(self) -> bool:
        """True when every weight is a constant integer."""
        for w in self.weights.values():
            if not w.is_constant() or w.constant_value().denominator != 1:
                return False
        return True

    def __repr__(self) -> str:
        return f"WeightedSet({len(self.elements)} elements)"


def weighted_cardinality(X: WeightedSet, power: int = 1) -> MultiPoly:
    return X.cardinality(power)


class GroupAction:
    """An action of a permutation group on a weighted set.

    The action is tabulated eagerly: ``table(g)[i]`` is the index of
    ``g . elements[i]``.  Construction checks that the identity acts
    trivially, that the action is compatible with composition, and that the
    weight is invariant.
    """

    def __init__(
        self,
        group: PermutationGroup,
        carrier: WeightedSet,
        action: Callable[[Permutation, Label], Label] | Mapping[tuple[Permutation, Label], Label],
        check: bool = True,
    ):
        self.group = group
        self.carrier = carrier
        index = {x: i for i, x in enumerate(carrier.elements)}
        self._index = index
        act = action if callable(action) else (lambda g, x: action[(g, x)])
        tables: dict[Permutation, tuple[int, ...]] = {}
        for g in group.elements:
            row = []
            for x in carrier.elements:
                y = act(g, x)
                if y not in index:
                    raise ActionError(f"{g} sends {x!r} outside the carrier")
                row.append(index[y])
            tables[g] = tuple(row)
        self._tables = tables
        if check:
            self._validate()

    def _validate(self) -> None:
        n = len(self.carrier)
        ident = self._tables[self.group.identity]
        if ident != tuple(range(n)):
            raise ActionError("identity does not act trivially")
        for g in self.group.elements:
            tg = self._tables[g]
            if len(set(tg)) != n:
                raise ActionError(f"{g} does not act bijectively")
            for s in self.group.generators:
                ts = self._tables[s]
                composed = tuple(tg[ts[i]] for i in range(n))
                if composed != self._tables[g * s]:
                    raise ActionError(f"action is not compatible with composition at {g} * {s}")
        elems = self.carrier.elements
        for s in self.group.generators:
            ts = self._tables[s]
            for i, x in enumerate(elems):
                if self.carrier.weights[elems[ts[i]]] != self.carrier.weights[x]:
                    raise WeightNotInvariantError(
                        f"weight not invariant: f({s}.{x!r}) != f({x!r})"
                    )

    @classmethod
    def natural(cls, group: PermutationGroup, carrier: WeightedSet | None = None) -> "GroupAction":
        """G <= S_m acting on [m] by evaluation."""
        if carrier is None:
            carrier = WeightedSet.uniform(group.degree)
        return cls(group, carrier, lambda g, x: g(x))

    def table(self, g: Permutation) -> tuple[int, ...]:
        return self._tables[g]

    def act(self, g: Permutation, x: Label) -> Label:
        return self.carrier.elements[self._tables[g][self._index[x]]]

    def fixed_indices(self, g: Permutation) -> list[int]:
        return [i for i, j in enumerate(self._tables[g]) if i == j]

    def fixed_points(self, g: Permutation) -> list[Label]:
        return [self.carrier.elements[i] for i in self.fixed_indices(g)]

    def with_weight_power(self, k: int) -> "GroupAction":
        """The same action on (X, f^k)."""
        out = GroupAction.__new__(GroupAction)
        out.group = self.group
        out.carrier = self.carrier.powered(k)
        out._index = self._index
        out._tables = self._tables
        return out

    def __repr__(self) -> str:
        return f"GroupAction({self.group!r} on {len(self.carrier)} points)"


def fixed_weight(action: GroupAction, gs: Sequence[Permutation]) -> MultiPoly:
    """|X^S|_f for the set S = gs."""
    elems = action.carrier.elements
    tables = [action.table(g) for g in gs]
    return poly_sum(
        action.carrier.weights[x]
        for i, x in enumerate(elems)
        if all(t[i] == i for t in tables)
    )
