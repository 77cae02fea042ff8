"""Verification suites: closed forms against definitions, formulas against
brute-force enumeration.  Used by ``orbipolya verify``."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Iterator

from . import cycleindex as ci
from . import oracle
from .counting import (
    c_orb_cyclic,
    coloring_gf,
    necklace_count,
    orbi_polya_count,
    orbifold_cohomology_dimension,
    orbinecklace_count,
    orbiquotient_count,
    polya_count,
    quotient_count,
)
from .numtheory import is_prime
from .permgroup import Permutation, PermutationGroup, builtin_group
from .polyring import Monomial, MultiPoly
from .setpart import orbit_partition
from .weighted import GroupAction, WeightedSet

PASS = "pass"
FAIL = "fail"
DEVIATION = "documented deviation"
SKIPPED = "skipped"

SUITES = ("all", "cyclic", "dihedral", "symmetric", "counting", "oracle")


@dataclass
class Check:
    check: str
    instance: str
    anchor: str
    status: str
    detail: str = ""

    def to_dict(self) -> dict:
        d = {"check": self.check, "instance": self.instance, "anchor": self.anchor, "status": self.status}
        if self.detail:
            d["detail"] = self.detail
        return d


@dataclass
class Bounds:
    max_n: int | None = None
    max_degree: int = 4
    max_colors: int = 3
    variant: str = ci.CORRECTED
    seed: int = 0


@dataclass
class Report:
    suite: str
    bounds: Bounds
    checks: list[Check] = field(default_factory=list)

    def counts(self) -> dict[str, int]:
        out = {PASS: 0, FAIL: 0, DEVIATION: 0, SKIPPED: 0}
        for c in self.checks:
            out[c.status] += 1
        return out

    @property
    def ok(self) -> bool:
        return not any(c.status == FAIL for c in self.checks)

    def first_failure(self) -> Check | None:
        return next((c for c in self.checks if c.status == FAIL), None)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "bounds": {
                "max": self.bounds.max_n,
                "max_degree": self.bounds.max_degree,
                "max_colors": self.bounds.max_colors,
                "variant": self.bounds.variant,
                "seed": self.bounds.seed,
            },
            "summary": self.counts(),
            "ok": self.ok,
            "checks": [c.to_dict() for c in self.checks],
        }


def _skip(name: str, instance: str, anchor: str, reason: str) -> Check:
    return Check(name, instance, anchor, SKIPPED, reason)


def _eq(name: str, instance: str, anchor: str, got, want) -> Check:
    if got == want:
        return Check(name, instance, anchor, PASS)
    return Check(name, instance, anchor, FAIL, f"got {got}, expected {want}")


# ---------------------------------------------------------------------------


def _structural(group: PermutationGroup, label: str) -> Iterator[Check]:
    p = ci.cycle_index(group)
    q = ci.orbicycle_index(group)
    anchor = "index normalisation and degree"
    yield _eq("cycle_index_at_ones", label, anchor, p.evaluate(1), 1)
    yield _eq("orbicycle_index_at_ones", label, anchor, q.evaluate(1), len(group.classes))
    yield _eq("orbicycle_index_nonnegative", label, anchor, all(c >= 0 for _, c in q), True)
    degrees = {m.weighted_degree for m, _ in p} | {m.weighted_degree for m, _ in q}
    yield _eq("weighted_degree", label, anchor, degrees, {group.degree})


def cyclic_suite(b: Bounds) -> Iterator[Check]:
    top = b.max_n or 12
    for n in range(1, top + 1):
        G = builtin_group("cyclic", n)
        yield _eq("orbicycle_index_cyclic", f"n={n}", "Z_n orbicycle index = J_2 divisor sum",
                  ci.orbicycle_index_cyclic(n), ci.orbicycle_index(G))
        yield _eq("cycle_index_cyclic", f"n={n}", "Z_n cycle index = phi divisor sum",
                  ci.cycle_index_cyclic(n), ci.cycle_index(G))
        yield from _structural(G, f"C:{n}")
    for p in (q for q in range(2, top + 1) if is_prime(q)):
        G = builtin_group("cyclic", p)
        for r in range(1, 5):
            X = WeightedSet.uniform(r)
            yield _eq("necklaces", f"p={p},r={r}", "necklaces r + (r^p - r)/p",
                      necklace_count(p, r), polya_count(G, X).constant_value())
            yield _eq("orbinecklaces", f"p={p},r={r}", "orbi-necklaces rp + (r^p - r)/p",
                      orbinecklace_count(p, r), orbi_polya_count(G, X).constant_value())


def _dihedral_table_check(n: int, G: PermutationGroup) -> Check:
    """Class sizes and centralizer orders of D_n against the standard tables."""
    if n % 2:
        want = sorted([(1, 2 * n)] + [(2, n)] * ((n - 1) // 2) + [(n, 2)])
    else:
        want = sorted([(1, 2 * n), (1, 2 * n)] + [(2, n)] * (n // 2 - 1) + [(n // 2, 4), (n // 2, 4)])
    got = sorted((c.size, len(c.centralizer)) for c in G.classes)
    return _eq("dihedral_class_table", f"n={n}", "dihedral conjugacy class table", got, want)


def dihedral_suite(b: Bounds) -> Iterator[Check]:
    top = b.max_n or 12
    for n in range(3, top + 1):
        G = builtin_group("dihedral", n)
        truth = ci.orbicycle_index(G)
        yield _dihedral_table_check(n, G)
        yield _eq("cycle_index_dihedral", f"n={n}", "D_n cycle index", ci.cycle_index_dihedral(n), ci.cycle_index(G))
        yield from _structural(G, f"D:{n}")
        if b.variant == ci.CORRECTED:
            yield _eq("orbicycle_index_dihedral", f"n={n}", "D_n orbicycle index (corrected)",
                      ci.orbicycle_index_dihedral(n, ci.CORRECTED), truth)
            continue
        anchor = "D_n orbicycle index (as printed, odd)" if n % 2 else "D_n orbicycle index (as printed, even)"
        try:
            printed = ci.orbicycle_index_dihedral(n, ci.AS_PRINTED)
        except ValueError as exc:
            yield Check("orbicycle_index_dihedral_printed", f"n={n}", anchor, DEVIATION, str(exc))
            continue
        if printed == truth:
            yield Check("orbicycle_index_dihedral_printed", f"n={n}", anchor, PASS)
        else:
            yield Check("orbicycle_index_dihedral_printed", f"n={n}", anchor, DEVIATION,
                        f"definition minus printed = {truth - printed}")


def symmetric_suite(b: Bounds) -> Iterator[Check]:
    top = b.max_n or 6
    for n in range(1, top + 1):
        G = builtin_group("symmetric", n)
        yield _eq("orbicycle_index_symmetric", f"n={n}", "S_n orbicycle index via depth-2 partitions",
                  ci.orbicycle_index_symmetric(n), ci.orbicycle_index(G))
        yield _eq("cycle_index_symmetric", f"n={n}", "S_n cycle index", ci.cycle_index_symmetric(n), ci.cycle_index(G))
        yield from _structural(G, f"S:{n}")
        for basis in range(0, 4):
            if basis**n > 10**4:
                yield _skip("cohomology_dimension", f"n={n},b={basis}", "orbifold cohomology dimension",
                            f"oracle carrier {basis}^{n} exceeds 10^4")
                continue
            if basis == 0:
                want = 0
            else:
                A = oracle.induced_power_action(G, WeightedSet.uniform(basis))
                want = len(oracle.enumerate_orbiquotient(A))
            yield _eq("cohomology_dimension", f"n={n},b={basis}", "orbifold cohomology dimension",
                      orbifold_cohomology_dimension(n, basis), want)


def sweep_groups(max_degree: int) -> Iterator[tuple[str, PermutationGroup]]:
    for m in range(1, max_degree + 1):
        yield f"T:{m}", builtin_group("trivial", m)
        yield f"C:{m}", builtin_group("cyclic", m)
        if m >= 3:
            yield f"D:{m}", builtin_group("dihedral", m)
        yield f"S:{m}", builtin_group("symmetric", m)


def random_groups(count: int, max_degree: int, seed: int) -> list[tuple[str, PermutationGroup]]:
    """Random custom groups with 1-2 random generators of degree <= max_degree."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        m = rng.randint(1, max_degree)
        gens = []
        for _ in range(rng.randint(1, 2)):
            img = list(range(1, m + 1))
            rng.shuffle(img)
            gens.append(Permutation(img))
        G = PermutationGroup(gens, m, f"custom {m}")
        label = f"G:{m}:" + ",".join(str(g) for g in gens)
        out.append((label, G))
    return out


def counting_suite(b: Bounds) -> Iterator[Check]:
    for label, G in sweep_groups(b.max_degree):
        for r in range(1, b.max_colors + 1):
            if r**G.degree > 10**5:
                yield _skip("orbi_polya", f"{label},|X|={r}", "orbi-Polya: P^orb_G(|X|_f, |X|_f^2, ...)",
                            f"oracle carrier {r}^{G.degree} exceeds 10^5")
                continue
            for weights in ("trivial", "generic"):
                X = WeightedSet.generic(r) if weights == "generic" else WeightedSet.uniform(r)
                inst = f"{label},|X|={r},{weights}"
                A = oracle.induced_power_action(G, X)
                yield _eq("orbi_polya", inst, "orbi-Polya: P^orb_G(|X|_f, |X|_f^2, ...)",
                          orbi_polya_count(G, X), oracle.weighted_orbiquotient_count(A))
                yield _eq("polya", inst, "Polya-Redfield", polya_count(G, X), oracle.weighted_orbit_count(A))
        A = GroupAction.natural(G, _orbit_weighted_points(G))
        yield _eq("orbi_orbit_counting", f"{label},natural", "orbi orbit-counting theorem",
                  orbiquotient_count(A), oracle.weighted_orbiquotient_count(A))
        yield _eq("orbit_counting", f"{label},natural", "orbit-counting lemma",
                  quotient_count(A), oracle.weighted_orbit_count(A))
        if G.degree <= 5:
            for n_colors in range(1, b.max_colors + 1):
                if G.degree > 4 and n_colors > 2:
                    yield _skip("orbi_coefficient", f"{label},colors={n_colors}", "orbi coloration coefficients",
                                "brute-force colorations limited to 2 colors above degree 4")
                    continue
                yield from _coefficient_checks(label, G, n_colors)
    for n in range(1, 9):
        for n_colors in range(1, b.max_colors + 1):
            gf = coloring_gf(builtin_group("cyclic", n), n_colors, orbi=True)
            for exps in _compositions(n, n_colors):
                mono = Monomial({j: e for j, e in enumerate(exps, 1)})
                yield _eq("c_orb_cyclic", f"n={n},i={exps}", "c^orb of Z_n by multinomial divisor sum",
                          c_orb_cyclic(n, exps), gf.coefficient(mono))


def _orbit_weighted_points(G: PermutationGroup) -> WeightedSet:
    """[m] with f(i) = x_b, b the index of the G-orbit containing i."""
    orbits = orbit_partition(G.degree, G.generators)
    where = orbits.block_of()
    return WeightedSet(range(1, G.degree + 1), lambda i: MultiPoly.var(where[i] + 1))


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    for head in product(range(total + 1), repeat=parts - 1):
        last = total - sum(head)
        if last >= 0:
            yield head + (last,)


def _coefficient_checks(label: str, G: PermutationGroup, n_colors: int) -> Iterator[Check]:
    gf_orbi = coloring_gf(G, n_colors, orbi=True)
    gf = coloring_gf(G, n_colors, orbi=False)
    for exps in _compositions(G.degree, n_colors):
        mono = Monomial({j: e for j, e in enumerate(exps, 1)})
        inst = f"{label},i={exps}"
        yield _eq("orbi_coefficient", inst, "orbi coloration coefficients",
                  gf_orbi.coefficient(mono), Fraction(oracle.invariant_colorations(G, exps, orbi=True)))
        yield _eq("coefficient", inst, "coloration coefficients",
                  gf.coefficient(mono), Fraction(oracle.invariant_colorations(G, exps, orbi=False)))


def oracle_suite(b: Bounds) -> Iterator[Check]:
    groups = list(sweep_groups(b.max_degree)) + random_groups(20, min(b.max_degree + 1, 5), b.seed)
    for label, G in groups:
        for r in range(1, b.max_colors + 1):
            if r**G.degree > 10**4:
                yield _skip("inertia", f"{label},|X|={r}", "inertia set quotient = orbiquotient",
                            f"oracle carrier {r}^{G.degree} exceeds 10^4")
                continue
            inst = f"{label},|X|={r}"
            A = oracle.induced_power_action(G, WeightedSet.uniform(r))
            verdict = oracle.inertia_check(A)
            yield Check("inertia", inst, "inertia set quotient = orbiquotient",
                        PASS if verdict.ok else FAIL,
                        "" if verdict.ok else str(verdict.to_dict()))
            base = len(oracle.enumerate_orbiquotient(A))
            counts = {len(oracle.enumerate_orbiquotient(A, random.Random(b.seed + s))) for s in range(3)}
            yield _eq("representative_independence", inst, "orbiquotient independent of representatives",
                      counts, {base})
            yield _eq("orbi_orbit_counting", inst, "orbi orbit-counting theorem",
                      orbiquotient_count(A).constant_value(), base)


_SUITE_FUNCS = {
    "cyclic": cyclic_suite,
    "dihedral": dihedral_suite,
    "symmetric": symmetric_suite,
    "counting": counting_suite,
    "oracle": oracle_suite,
}


def run_suite(suite: str, bounds: Bounds | None = None) -> Report:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    bounds = bounds or Bounds()
    report = Report(suite, bounds)
    names = list(_SUITE_FUNCS) if suite == "all" else [suite]
    for name in names:
        report.checks.extend(_SUITE_FUNCS[name](bounds))
    return report
