"""Brute-force ground truth by direct enumeration.

Nothing here calls the cycle-index or counting code: orbits, fixed sets,
conjugacy classes and centralizers are recomputed from their definitions
so that agreement with the formulas is evidence rather than tautology.
"""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass, field
from itertools import product
from typing import Hashable, Sequence

from .permgroup import Permutation, PermutationGroup, builtin_group
from .polyring import MultiPoly, poly_sum
from .weighted import GroupAction, WeightedSet

DEFAULT_MAX_CARRIER = 10**6


class CarrierTooLargeError(RuntimeError):
    pass


@dataclass(frozen=True)
class OracleClass:
    representative: Permutation
    members: frozenset
    centralizer: tuple[Permutation, ...]


def conjugacy_classes(group: PermutationGroup, rng: random.Random | None = None) -> list[OracleClass]:
    """Classes by conjugating with every element; centralizers by commutation tests."""
    elements = list(group.elements)
    inverses = {k: k.inverse() for k in elements}
    done: set[Permutation] = set()
    out = []
    for g in elements:
        if g in done:
            continue
        members = frozenset(k * g * inverses[k] for k in elements)
        done |= members
        rep = g if rng is None else rng.choice(sorted(members))
        centralizer = tuple(h for h in elements if h * rep == rep * h)
        out.append(OracleClass(rep, members, centralizer))
    return out


def _apply(action: GroupAction, g: Permutation, x: Hashable) -> Hashable:
    return action.act(g, x)


def _orbits_under(action: GroupAction, gens: Sequence[Permutation], points: Sequence[Hashable]) -> list[frozenset]:
    """Orbits of the subgroup whose elements are ``gens`` on ``points``."""
    remaining = list(points)
    seen: set = set()
    orbits = []
    for x in remaining:
        if x in seen:
            continue
        orbit = frozenset(_apply(action, k, x) for k in gens)
        seen |= orbit
        orbits.append(orbit)
    return orbits


def enumerate_orbits(action: GroupAction) -> list[frozenset]:
    """X/G as a list of orbits {g x : g in G}."""
    return _orbits_under(action, action.group.elements, action.carrier.elements)


def orbit_weight(action: GroupAction, orbit: frozenset) -> MultiPoly:
    return action.carrier.weight(next(iter(orbit)))


def weighted_orbit_count(action: GroupAction) -> MultiPoly:
    return poly_sum(orbit_weight(action, o) for o in enumerate_orbits(action))


def enumerate_orbiquotient(action: GroupAction, rng: random.Random | None = None) -> list[tuple[int, frozenset]]:
    """The disjoint union over classes of X^g / Z(g), as (class index, orbit)."""
    out = []
    for ci, cls in enumerate(conjugacy_classes(action.group, rng)):
        g = cls.representative
        fixed = [x for x in action.carrier.elements if _apply(action, g, x) == x]
        for orbit in _orbits_under(action, cls.centralizer, fixed):
            out.append((ci, orbit))
    return out


def weighted_orbiquotient_count(action: GroupAction, rng: random.Random | None = None) -> MultiPoly:
    return poly_sum(orbit_weight(action, o) for _, o in enumerate_orbiquotient(action, rng))


def induced_power_action(
    group: PermutationGroup, X: WeightedSet, max_carrier: int = DEFAULT_MAX_CARRIER
) -> GroupAction:
    """G <= S_m acting on functions alpha: [m] -> X by (g.alpha)(i) = alpha(g^-1(i)).

    Functions are tuples ``(alpha(1), ..., alpha(m))`` weighted by
    prod_i f(alpha(i)).
    """
    m = group.degree
    size = len(X) ** m
    if size > max_carrier:
        raise CarrierTooLargeError(f"|X|^m = {size} exceeds the bound {max_carrier}")
    funcs = list(product(X.elements, repeat=m))
    weights = {}
    for alpha in funcs:
        w = MultiPoly.constant(1)
        for x in alpha:
            w = w * X.weight(x)
        weights[alpha] = w

    def act(g: Permutation, alpha: tuple) -> tuple:
        out = [None] * m
        for j in range(m):
            out[g.images[j] - 1] = alpha[j]
        return tuple(out)

    return GroupAction(group, WeightedSet(funcs, weights), act)


def invariant_colorations(group: PermutationGroup, exponents: Sequence[int], orbi: bool) -> int:
    """Colorations of [m] with ``exponents[k]`` points of color k+1, up to symmetry.

    Plain: G-orbits.  Orbi: for each class representative g, the
    g-invariant colorations modulo Z(g), summed over classes.
    """
    m = group.degree
    n = len(exponents)
    if sum(exponents) != m:
        return 0
    colorings = [
        c for c in product(range(1, n + 1), repeat=m)
        if all(c.count(k + 1) == e for k, e in enumerate(exponents))
    ]

    def act(g: Permutation, c: tuple) -> tuple:
        out = [0] * m
        for j in range(m):
            out[g.images[j] - 1] = c[j]
        return tuple(out)

    def count_orbits(gens, points) -> int:
        seen: set = set()
        k = 0
        for c in points:
            if c in seen:
                continue
            seen |= {act(h, c) for h in gens}
            k += 1
        return k

    if not orbi:
        return count_orbits(group.elements, colorings)
    total = 0
    for cls in conjugacy_classes(group):
        g = cls.representative
        fixed = [c for c in colorings if act(g, c) == c]
        total += count_orbits(cls.centralizer, fixed)
    return total


def quotient_as_weighted_set(action: GroupAction, orbi: bool) -> WeightedSet:
    """X/G or X/^orb G materialised as a weighted set of orbit labels."""
    if orbi:
        entries = enumerate_orbiquotient(action)
        return WeightedSet(entries, lambda e: orbit_weight(action, e[1]))
    orbits = enumerate_orbits(action)
    return WeightedSet(orbits, lambda o: orbit_weight(action, o))


def cycles_on_quotient_direct(
    n: int, action: GroupAction, quotient_orbi: bool, cycles_orbi: bool
) -> MultiPoly:
    """Count (orbi) n-cycles on the (orbi)quotient by building everything explicitly."""
    Q = quotient_as_weighted_set(action, quotient_orbi)
    rot = builtin_group("cyclic", n)
    cyc_action = induced_power_action(rot, Q)
    if cycles_orbi:
        return weighted_orbiquotient_count(cyc_action)
    return weighted_orbit_count(cyc_action)


@dataclass
class InertiaVerdict:
    inertia_size: int
    inertia_quotient_size: int
    orbiquotient_size: int
    per_class: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.inertia_quotient_size == self.orbiquotient_size and all(
            c["inertia"] == c["orbiquotient"] for c in self.per_class
        )

    def to_dict(self) -> dict:
        d = asdict(self)
        d["ok"] = self.ok
        return d


def inertia_check(action: GroupAction) -> InertiaVerdict:
    """Compare I(G,X)/G, with k.(g,x) = (k g k^-1, k x), against X/^orb G."""
    G = action.group
    inertia = [(g, x) for g in G.elements for x in action.carrier.elements if _apply(action, g, x) == x]
    inverses = {k: k.inverse() for k in G.elements}
    seen: set = set()
    orbit_reps = []
    for g, x in inertia:
        if (g, x) in seen:
            continue
        orbit = {(k * g * inverses[k], _apply(action, k, x)) for k in G.elements}
        seen |= orbit
        orbit_reps.append(g)

    classes = conjugacy_classes(G)
    orbi = enumerate_orbiquotient(action)
    per_class = []
    for ci, cls in enumerate(classes):
        per_class.append({
            "representative": str(cls.representative),
            "inertia": sum(1 for g in orbit_reps if g in cls.members),
            "orbiquotient": sum(1 for c, _ in orbi if c == ci),
        })
    return InertiaVerdict(len(inertia), len(orbit_reps), len(orbi), per_class)
