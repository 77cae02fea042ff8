"""Permutations of [m] and finite permutation groups.

Permutations act on the left: ``(p * q)(x) == p(q(x))``.  Points are 1-based.
Groups are enumerated exhaustively at construction time, together with
their conjugacy classes, centralizers and the commuting-pair table
``P(G) = {(class, h) : h in Z(representative)}``.
"""

from __future__ import annotations

import os
import random
import re
from collections import deque
from dataclasses import dataclass, field
from math import factorial, lcm
from typing import Iterable, Iterator, Sequence

DEFAULT_MAX_ELEMENTS = 10**6
MAX_GROUP_ENV = "ORBIPOLYA_MAX_GROUP"


class PermutationError(ValueError):
    pass


class GroupTooLargeError(RuntimeError):
    def __init__(self, bound: int):
        super().__init__(f"group too large: more than {bound} elements")
        self.bound = bound


def default_max_elements() -> int:
    value = os.environ.get(MAX_GROUP_ENV)
    if value is None:
        return DEFAULT_MAX_ELEMENTS
    try:
        bound = int(value)
    except ValueError:
        raise PermutationError(f"{MAX_GROUP_ENV} must be an integer, got {value!r}") from None
    if bound < 1:
        raise PermutationError(f"{MAX_GROUP_ENV} must be positive, got {bound}")
    return bound


class Permutation:
    """Bijection of {1..m} stored as an image table (``images[i-1] = p(i)``)."""

    __slots__ = ("images", "_hash")

    def __init__(self, images: Sequence[int]):
        images = tuple(int(x) for x in images)
        m = len(images)
        if sorted(images) != list(range(1, m + 1)):
            raise PermutationError(f"{list(images)} is not a permutation of 1..{m}")
        self.images = images
        self._hash = hash(images)

    @classmethod
    def _trusted(cls, images: tuple[int, ...]) -> "Permutation":
        p = cls.__new__(cls)
        p.images = images
        p._hash = hash(images)
        return p

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls._trusted(tuple(range(1, degree + 1)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> "Permutation":
        images = list(range(1, degree + 1))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                images[a - 1] = b
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, y in enumerate(self.images, 1):
            inv[y - 1] = i
        return Permutation._trusted(tuple(inv))

    def __pow__(self, k: int) -> "Permutation":
        base = self if k >= 0 else self.inverse()
        result = Permutation.identity(self.degree)
        for _ in range(abs(k)):
            result = compose(base, result)
        return result

    def is_identity(self) -> bool:
        return all(y == i for i, y in enumerate(self.images, 1))

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            x = self.images[start - 1]
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self.images[x - 1]
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def cycle_type(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for c in self.cycles(include_fixed=True):
            counts[len(c)] = counts.get(len(c), 0) + 1
        return dict(sorted(counts.items()))

    def order(self) -> int:
        return lcm(*(len(c) for c in self.cycles(include_fixed=True))) if self.degree else 1

    def commutes_with(self, other: "Permutation") -> bool:
        a, b = self.images, other.images
        return all(a[b[i] - 1] == b[a[i] - 1] for i in range(len(a)))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)

    def __repr__(self) -> str:
        return f"Permutation({list(self.images)})"


def compose(p: Permutation, q: Permutation) -> Permutation:
    """The permutation x -> p(q(x))."""
    if p.degree != q.degree:
        raise PermutationError(f"degree mismatch: {p.degree} != {q.degree}")
    pi = p.images
    return Permutation._trusted(tuple(pi[y - 1] for y in q.images))


def conjugate(k: Permutation, g: Permutation) -> Permutation:
    """k g k^-1."""
    # (k g k^-1)(k(x)) = k(g(x))
    out = [0] * g.degree
    ki, gi = k.images, g.images
    for x in range(g.degree):
        out[ki[x] - 1] = ki[gi[x] - 1]
    return Permutation._trusted(tuple(out))


_TOKEN = re.compile(r"\(|\)|[^\s()]+")


def parse_permutation(text: str, degree: int) -> Permutation:
    """Parse disjoint-cycle notation such as ``"(1 2 3)(4 5)"``.

    Commas between cycle entries are accepted as separators.  The empty
    string is the identity.
    """
    images = list(range(1, degree + 1))
    used: set[int] = set()
    current: list[int] | None = None
    for tok in _TOKEN.findall(text.replace(",", " ")):
        if tok == "(":
            if current is not None:
                raise PermutationError(f"nested '(' in {text!r}")
            current = []
        elif tok == ")":
            if current is None:
                raise PermutationError(f"unbalanced ')' in {text!r}")
            for a, b in zip(current, current[1:] + current[:1]):
                images[a - 1] = b
            current = None
        else:
            if current is None:
                raise PermutationError(f"token {tok!r} outside parentheses in {text!r}")
            try:
                x = int(tok)
            except ValueError:
                raise PermutationError(f"bad point {tok!r} in {text!r}") from None
            if not 1 <= x <= degree:
                raise PermutationError(f"point {tok!r} out of range 1..{degree}")
            if x in used:
                raise PermutationError(f"point {tok!r} repeated in {text!r}")
            used.add(x)
            current.append(x)
    if current is not None:
        raise PermutationError(f"unclosed '(' in {text!r}")
    return Permutation._trusted(tuple(images))


@dataclass(frozen=True)
class ConjugacyClass:
    representative: Permutation
    members: tuple[Permutation, ...]
    centralizer: tuple[Permutation, ...]

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class CommutingPairTable:
    """The pairs (class, h) with h in the centralizer of the class representative.

    ``pairs[i] = (class_index, h)`` and ``class_size[i]`` is the size of
    that class.
    """

    pairs: tuple[tuple[int, Permutation], ...]
    class_size: tuple[int, ...]
    representatives: tuple[Permutation, ...] = field(default=(), repr=False)

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self) -> Iterator[tuple[Permutation, Permutation, int]]:
        """Yield ``(g, h, |class of g|)`` with g the class representative."""
        for (ci, h), size in zip(self.pairs, self.class_size):
            yield self.representatives[ci], h, size

    def weighted_count(self) -> int:
        return sum(self.class_size)


def _closure(generators: Sequence[Permutation], degree: int, bound: int) -> list[Permutation]:
    identity = Permutation.identity(degree)
    seen = {identity.images}
    queue = deque([identity])
    gens = [g.images for g in generators]
    while queue:
        p = queue.popleft()
        pi = p.images
        for g in gens:
            img = tuple(g[y - 1] for y in pi)
            if img not in seen:
                seen.add(img)
                if len(seen) > bound:
                    raise GroupTooLargeError(bound)
                queue.append(Permutation._trusted(img))
    return [Permutation._trusted(t) for t in sorted(seen)]


def _classes(
    elements: Sequence[Permutation],
    generators: Sequence[Permutation],
    rng: random.Random | None = None,
) -> list[ConjugacyClass]:
    index = {p: i for i, p in enumerate(elements)}
    assigned = [False] * len(elements)
    gen_invs = [g.inverse() for g in generators]
    classes = []
    for i, p in enumerate(elements):
        if assigned[i]:
            continue
        orbit = [p]
        assigned[i] = True
        queue = deque([p])
        while queue:
            q = queue.popleft()
            for k in gen_invs:
                c = conjugate(k, q)
                j = index[c]
                if not assigned[j]:
                    assigned[j] = True
                    orbit.append(c)
                    queue.append(c)
        members = tuple(sorted(orbit))
        rep = members[0] if rng is None else rng.choice(members)
        centralizer = tuple(h for h in elements if h.commutes_with(rep))
        classes.append(ConjugacyClass(rep, members, centralizer))
    return classes


def _pair_table(classes: Sequence[ConjugacyClass]) -> CommutingPairTable:
    pairs = []
    sizes = []
    for ci, cls in enumerate(classes):
        for h in cls.centralizer:
            pairs.append((ci, h))
            sizes.append(cls.size)
    return CommutingPairTable(tuple(pairs), tuple(sizes), tuple(c.representative for c in classes))


class PermutationGroup:
    """A finite group of permutations of [m], fully enumerated.

    Parameters
    ----------
    generators : iterable of Permutation
        Generating set; may be empty (trivial group).
    degree : int
        The m of [m].
    family_tag : str, optional
        Label such as ``"cyclic 4"``; informational only.
    max_elements : int, optional
        Enumeration bound; defaults to ``$ORBIPOLYA_MAX_GROUP`` or 10**6.
    """

    def __init__(
        self,
        generators: Iterable[Permutation],
        degree: int,
        family_tag: str | None = None,
        max_elements: int | None = None,
    ):
        if degree < 1:
            raise PermutationError(f"degree must be positive, got {degree}")
        gens = tuple(generators)
        for g in gens:
            if g.degree != degree:
                raise PermutationError(f"generator {g} has degree {g.degree}, expected {degree}")
        self.degree = degree
        self.generators = gens
        self.family_tag = family_tag or "custom"
        self.max_elements = max_elements if max_elements is not None else default_max_elements()
        self.elements: tuple[Permutation, ...] = tuple(_closure(gens, degree, self.max_elements))
        self._index = {p: i for i, p in enumerate(self.elements)}
        self.classes: tuple[ConjugacyClass, ...] = tuple(_classes(self.elements, gens))
        self._class_of = {p: ci for ci, c in enumerate(self.classes) for p in c.members}
        self.pair_table = _pair_table(self.classes)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.elements)

    def __contains__(self, p: object) -> bool:
        return p in self._index

    @property
    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def class_index(self, p: Permutation) -> int:
        return self._class_of[p]

    def centralizer(self, g: Permutation) -> tuple[Permutation, ...]:
        return tuple(h for h in self.elements if h.commutes_with(g))

    def is_abelian(self) -> bool:
        return all(g.commutes_with(h) for g in self.generators for h in self.generators)

    def __repr__(self) -> str:
        return f"PermutationGroup({self.family_tag}, degree={self.degree}, order={self.order})"


def generate_elements(
    generators: Iterable[Permutation], degree: int, max_elements: int | None = None
) -> PermutationGroup:
    return PermutationGroup(generators, degree, max_elements=max_elements)


def conjugacy_data(
    group: PermutationGroup, rng: random.Random | None = None
) -> tuple[tuple[ConjugacyClass, ...], CommutingPairTable]:
    """Classes and commuting-pair table of ``group``.

    With ``rng`` the class representatives are drawn at random instead of
    taking the lexicographically smallest member; everything downstream
    must be independent of that choice.
    """
    if rng is None:
        return group.classes, group.pair_table
    classes = tuple(_classes(group.elements, group.generators, rng))
    return classes, _pair_table(classes)


def _cycle(n: int) -> Permutation:
    return Permutation._trusted(tuple(list(range(2, n + 1)) + [1]))


def _reflection(n: int) -> Permutation:
    # x -> n + 2 - x (mod n) on 1..n, fixes the point 1
    return Permutation._trusted(tuple((1 - x) % n + 1 for x in range(1, n + 1)))


_FAMILIES = {"C": "cyclic", "D": "dihedral", "S": "symmetric", "T": "trivial"}


def builtin_group(family: str, n: int, max_elements: int | None = None) -> PermutationGroup:
    """Built-in families: ``cyclic``, ``dihedral``, ``symmetric``, ``trivial``.

    The dihedral group D_n (n >= 3) acts on the vertices of an n-gon; the
    rotation is (1 2 ... n) and the reflection x -> n + 2 - x fixes 1.
    ``trivial`` n is the trivial group of degree n.  Symmetric groups of
    degree 9 or more are refused unless a larger ``max_elements`` (or
    ``$ORBIPOLYA_MAX_GROUP``) is given explicitly.
    """
    family = _FAMILIES.get(family, family)
    if not isinstance(n, int) or n < 1:
        raise PermutationError(f"{family} group size must be a positive integer, got {n!r}")
    if family == "trivial":
        return PermutationGroup([], n, "trivial", max_elements)
    if family == "cyclic":
        gens = [_cycle(n)] if n > 1 else []
        return PermutationGroup(gens, n, f"cyclic {n}", max_elements)
    if family == "dihedral":
        if n < 3:
            raise PermutationError(f"dihedral group needs n >= 3, got {n}")
        rho, tau = _cycle(n), _reflection(n)
        if compose(tau, rho) != compose(rho ** (n - 1), tau):
            raise AssertionError("dihedral relation failed")
        return PermutationGroup([rho, tau], n, f"dihedral {n}", max_elements)
    if family == "symmetric":
        explicit = max_elements is not None or MAX_GROUP_ENV in os.environ
        bound = max_elements if max_elements is not None else default_max_elements()
        if factorial(n) > bound or (n >= 9 and not explicit):
            raise GroupTooLargeError(bound if factorial(n) > bound else factorial(8))
        if n == 1:
            gens = []
        elif n == 2:
            gens = [_cycle(2)]
        else:
            gens = [Permutation.from_cycles([(1, 2)], n), _cycle(n)]
        return PermutationGroup(gens, n, f"symmetric {n}", max_elements)
    raise PermutationError(f"unsupported group family {family!r}")


def parse_group_spec(spec: str, max_elements: int | None = None) -> PermutationGroup:
    """Build a group from ``C:n``, ``D:n``, ``S:n``, ``T:m`` or
    ``G:m:(1 2 3)(4 5),(1 2)`` (comma-separated generators)."""
    spec = spec.strip()
    head, _, rest = spec.partition(":")
    if not rest:
        raise PermutationError(f"unknown group spec {spec!r}")
    if head == "G":
        deg_text, _, gens_text = rest.partition(":")
        try:
            degree = int(deg_text)
        except ValueError:
            raise PermutationError(f"bad degree in group spec {spec!r}") from None
        if degree < 1:
            raise PermutationError(f"bad degree in group spec {spec!r}")
        gens = []
        for chunk in re.findall(r"(?:\([^()]*\))+", gens_text):
            gens.append(parse_permutation(chunk, degree))
        leftover = re.sub(r"(?:\([^()]*\))+", "", gens_text).replace(",", "").strip()
        if leftover:
            raise PermutationError(f"cannot parse generators {gens_text!r}")
        return PermutationGroup(gens, degree, f"custom {degree}", max_elements)
    if head not in _FAMILIES:
        raise PermutationError(f"unknown group family {head!r} in {spec!r}")
    try:
        n = int(rest)
    except ValueError:
        raise PermutationError(f"bad size in group spec {spec!r}") from None
    return builtin_group(_FAMILIES[head], n, max_elements)
