"""Set partitions of [m] = {1, ..., m} and their lattice operations."""

from __future__ import annotations

from collections import Counter
from typing import Iterable, Sequence


class UnionFind:
    """Disjoint sets over 1..m with path compression and union by size."""

    def __init__(self, size: int):
        self._parent = list(range(size + 1))
        self._size = [1] * (size + 1)

    def find(self, x: int) -> int:
        root = x
        while self._parent[root] != root:
            root = self._parent[root]
        while self._parent[x] != root:
            self._parent[x], x = root, self._parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return
        if self._size[ra] < self._size[rb]:
            ra, rb = rb, ra
        self._parent[rb] = ra
        self._size[ra] += self._size[rb]


class SetPartition:
    """A partition of {1..m} stored in canonical form.

    Blocks are sorted tuples ordered by their least element, so equal
    partitions have identical representations.
    """

    __slots__ = ("ground_size", "blocks")

    def __init__(self, ground_size: int, blocks: Iterable[Iterable[int]]):
        canon = sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0] if b else 0)
        seen: set[int] = set()
        for b in canon:
            if not b:
                raise ValueError("empty block")
            for x in b:
                if not 1 <= x <= ground_size:
                    raise ValueError(f"point {x} outside 1..{ground_size}")
                if x in seen:
                    raise ValueError(f"point {x} appears in two blocks")
                seen.add(x)
        if len(seen) != ground_size:
            missing = sorted(set(range(1, ground_size + 1)) - seen)
            raise ValueError(f"blocks do not cover points {missing}")
        self.ground_size = ground_size
        self.blocks: tuple[tuple[int, ...], ...] = tuple(canon)

    @classmethod
    def discrete(cls, m: int) -> "SetPartition":
        return cls(m, [(i,) for i in range(1, m + 1)])

    @classmethod
    def indiscrete(cls, m: int) -> "SetPartition":
        return cls(m, [tuple(range(1, m + 1))] if m else [])

    @classmethod
    def from_union_find(cls, m: int, uf: UnionFind) -> "SetPartition":
        groups: dict[int, list[int]] = {}
        for x in range(1, m + 1):
            groups.setdefault(uf.find(x), []).append(x)
        return cls(m, groups.values())

    @classmethod
    def parse(cls, text: str, ground_size: int | None = None) -> "SetPartition":
        """Inverse of :meth:`__str__`: ``"{1,2,3}{4,5}"``."""
        blocks = []
        for chunk in text.replace(" ", "").split("}"):
            if not chunk:
                continue
            if not chunk.startswith("{"):
                raise ValueError(f"malformed block {chunk!r}")
            body = chunk[1:]
            blocks.append([int(t) for t in body.split(",") if t])
        m = ground_size if ground_size is not None else sum(len(b) for b in blocks)
        return cls(m, blocks)

    def block_of(self) -> dict[int, int]:
        """Map each point to the index of its block."""
        return {x: i for i, b in enumerate(self.blocks) for x in b}

    def block_profile(self) -> dict[int, int]:
        """``{k: b_k}`` where b_k is the number of blocks of size k."""
        return dict(sorted(Counter(len(b) for b in self.blocks).items()))

    def cycle_counts(self) -> dict[int, int]:
        return self.block_profile()

    def __len__(self) -> int:
        return len(self.blocks)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SetPartition)
            and self.ground_size == other.ground_size
            and self.blocks == other.blocks
        )

    def __hash__(self) -> int:
        return hash((self.ground_size, self.blocks))

    def __le__(self, other: "SetPartition") -> bool:
        """Refinement order: self is finer than or equal to other."""
        _check_sizes(self, other)
        where = other.block_of()
        return all(len({where[x] for x in b}) == 1 for b in self.blocks)

    def __or__(self, other: "SetPartition") -> "SetPartition":
        return join(self, other)

    def __and__(self, other: "SetPartition") -> "SetPartition":
        return meet(self, other)

    def __str__(self) -> str:
        return "".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks)

    def __repr__(self) -> str:
        return f"SetPartition({self.ground_size}, {str(self)!r})"


def _check_sizes(a: SetPartition, b: SetPartition) -> None:
    if a.ground_size != b.ground_size:
        raise ValueError(f"ground sizes differ: {a.ground_size} != {b.ground_size}")


def join(*parts: SetPartition) -> SetPartition:
    """Finest partition coarser than every argument."""
    if not parts:
        raise ValueError("join of no partitions")
    m = parts[0].ground_size
    for p in parts[1:]:
        _check_sizes(parts[0], p)
    uf = UnionFind(m)
    for p in parts:
        for b in p.blocks:
            for x in b[1:]:
                uf.union(b[0], x)
    return SetPartition.from_union_find(m, uf)


def meet(a: SetPartition, b: SetPartition) -> SetPartition:
    """All nonempty pairwise intersections of blocks."""
    _check_sizes(a, b)
    where = b.block_of()
    pieces: dict[tuple[int, int], list[int]] = {}
    for i, block in enumerate(a.blocks):
        for x in block:
            pieces.setdefault((i, where[x]), []).append(x)
    return SetPartition(a.ground_size, pieces.values())


def cycle_partition(images: Sequence[int]) -> SetPartition:
    """Orbits of <g> on [m] for the permutation with 1-based ``images``.

    Accepts a :class:`~orbipolya.permgroup.Permutation` or a raw image table.
    """
    images = getattr(images, "images", images)
    m = len(images)
    seen = [False] * (m + 1)
    blocks = []
    for start in range(1, m + 1):
        if seen[start]:
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = True
            cyc.append(x)
            x = images[x - 1]
        blocks.append(cyc)
    return SetPartition(m, blocks)


def block_profile(p: SetPartition) -> dict[int, int]:
    return p.block_profile()


def orbit_partition(m: int, generators: Iterable[Sequence[int]]) -> SetPartition:
    """Orbits on [m] of the group generated by the given image tables.

    Equals the join of the generators' cycle partitions.
    """
    uf = UnionFind(m)
    for g in generators:
        images = getattr(g, "images", g)
        for x in range(1, m + 1):
            uf.union(x, images[x - 1])
    return SetPartition.from_union_find(m, uf)
