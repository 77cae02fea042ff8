"""Cycle index and orbicycle index polynomials.

:func:`cycle_index` and :func:`orbicycle_index` compute the polynomials
straight from their definitions by summing over group elements or commuting
pairs.  Those are the ground truth.  The ``*_cyclic``, ``*_dihedral`` and
``*_symmetric`` functions are closed forms; each is checked against the
ground truth in the test suite.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import factorial
from typing import Iterator

from .numtheory import divisors, euler_phi, generalized_phi, jordan_totient
from .permgroup import PermutationGroup, conjugacy_data
from .polyring import Monomial, MultiPoly
from .setpart import cycle_partition, orbit_partition

AS_PRINTED = "as_printed"
CORRECTED = "corrected"

# Which row of the two-row brace in the even dihedral display belongs to
# which residue of n mod 4.
TOP_IS_2_MOD_4 = "top=2mod4"
TOP_IS_0_MOD_4 = "top=0mod4"


@dataclass(frozen=True)
class IntegerPartition:
    """Partition of n as multiplicities ``{part: count}``."""

    multiplicities: tuple[tuple[int, int], ...]

    @property
    def n(self) -> int:
        return sum(i * a for i, a in self.multiplicities)

    def as_dict(self) -> dict[int, int]:
        return dict(self.multiplicities)


@dataclass(frozen=True)
class Depth2Partition:
    """Map (i, j) -> beta(i, j) with sum of i * j * beta(i, j) equal to n.

    Read it as: beta(i, j) j-cycles in the permutation of the
    alpha_i = sum_j j * beta(i, j) cycles of length i.
    """

    beta: tuple[tuple[tuple[int, int], int], ...]

    @property
    def n(self) -> int:
        return sum(i * j * b for (i, j), b in self.beta)

    def alpha(self) -> IntegerPartition:
        acc: dict[int, int] = {}
        for (i, j), b in self.beta:
            acc[i] = acc.get(i, 0) + j * b
        return IntegerPartition(tuple(sorted(acc.items())))

    def weight(self) -> Fraction:
        """1 / prod j^beta(i,j) beta(i,j)!"""
        den = 1
        for (_, j), b in self.beta:
            den *= j**b * factorial(b)
        return Fraction(1, den)

    def monomial(self) -> Monomial:
        """prod_k x_k^{sum_{d | k} beta(d, k/d)}: j cycles of length i merge into a block of size i*j."""
        exps: dict[int, int] = {}
        for (i, j), b in self.beta:
            exps[i * j] = exps.get(i * j, 0) + b
        return Monomial(exps)


def integer_partitions(n: int, max_part: int | None = None) -> Iterator[dict[int, int]]:
    """Partitions of n as ``{part: multiplicity}``, largest parts first."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield {}
        return
    for part in range(min(n, max_part), 0, -1):
        for rest in integer_partitions(n - part, part):
            out = dict(rest)
            out[part] = out.get(part, 0) + 1
            yield out


def depth2_partitions(n: int) -> list[Depth2Partition]:
    """All depth-2 partitions of n, sorted lexicographically on their (i, j) entries."""
    out = []
    for alpha in integer_partitions(n):
        sizes = sorted(alpha)
        inner = [list(integer_partitions(alpha[i])) for i in sizes]
        for choice in product(*inner):
            beta = {}
            for i, part in zip(sizes, choice):
                for j, b in part.items():
                    beta[(i, j)] = b
            out.append(Depth2Partition(tuple(sorted(beta.items()))))
    out.sort(key=lambda p: p.beta)
    return out


# ---------------------------------------------------------------------------
# ground truth


def cycle_index(group: PermutationGroup) -> MultiPoly:
    """(1/|G|) sum over g of prod x_i^{c_i(g)}."""
    counts: dict[Monomial, int] = {}
    for g in group.elements:
        m = Monomial(cycle_partition(g).block_profile())
        counts[m] = counts.get(m, 0) + 1
    return MultiPoly({m: Fraction(c, group.order) for m, c in counts.items()})


def orbicycle_index(group: PermutationGroup, rng: random.Random | None = None) -> MultiPoly:
    """(1/|G|) sum over (class of g, h in Z(g)) of |class| x^{C(g) v C(h)}.

    ``rng`` picks random class representatives; the result must not change.
    """
    _, table = conjugacy_data(group, rng)
    counts: dict[Monomial, int] = {}
    for g, h, size in table:
        m = Monomial(orbit_partition(group.degree, (g, h)).block_profile())
        counts[m] = counts.get(m, 0) + size
    return MultiPoly({m: Fraction(c, group.order) for m, c in counts.items()})


# ---------------------------------------------------------------------------
# closed forms


def _divisor_sum(n: int, weight) -> MultiPoly:
    """(1/n) sum over d | n of weight(d) x_d^{n/d}."""
    return MultiPoly({Monomial.var(d, n // d): Fraction(weight(d), n) for d in divisors(n)})


def cycle_index_cyclic(n: int) -> MultiPoly:
    return _divisor_sum(n, euler_phi)


def orbicycle_index_cyclic(n: int) -> MultiPoly:
    return _divisor_sum(n, lambda d: jordan_totient(2, d))


def _x(**exps: int) -> MultiPoly:
    return MultiPoly.from_monomial(Monomial({int(k[1:]): e for k, e in exps.items()}))


def _reflection_terms(n: int) -> MultiPoly:
    """x^{C(s)} averaged over the n reflections of D_n (scaled by 1/2)."""
    if n % 2:
        return _x(x1=1, x2=(n - 1) // 2) * Fraction(1, 2)
    return (_x(x2=n // 2) + _x(x1=2, x2=(n - 2) // 2)) * Fraction(1, 4)


def cycle_index_dihedral(n: int) -> MultiPoly:
    if n < 3:
        raise ValueError(f"dihedral group needs n >= 3, got {n}")
    return cycle_index_cyclic(n) * Fraction(1, 2) + _reflection_terms(n)


def cycle_index_symmetric(n: int) -> MultiPoly:
    """sum over alpha |- n of prod x_i^{a_i} / (i^{a_i} a_i!)."""
    terms = {}
    for alpha in integer_partitions(n):
        den = 1
        for i, a in alpha.items():
            den *= i**a * factorial(a)
        terms[Monomial(alpha)] = Fraction(1, den)
    return MultiPoly(terms)


def orbicycle_index_symmetric(n: int) -> MultiPoly:
    """Sum over depth-2 partitions beta of n of weight(beta) * monomial(beta).

    Equivalent to the double sum over alpha |- n and tuples of partitions
    beta_i |- alpha_i: an element h of the centralizer of a permutation of
    cycle type alpha permutes the alpha_i cycles of length i, and a j-cycle
    of that permutation merges j of them into one block of size i*j.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    terms: dict[Monomial, Fraction] = {}
    for beta in depth2_partitions(n):
        m = beta.monomial()
        terms[m] = terms.get(m, Fraction(0)) + beta.weight()
    return MultiPoly(terms)


def _dihedral_corrected(n: int) -> MultiPoly:
    half_orbi = orbicycle_index_cyclic(n) * Fraction(1, 2)
    if n % 2:
        return half_orbi + _x(x1=1, x2=(n - 1) // 2) * Fraction(3, 2)
    out = half_orbi + (_x(x2=n // 2) + _x(x1=2, x2=(n - 2) // 2)) * Fraction(3, 4)
    if n % 4 == 2:
        return out + _x(x2=1, x4=(n - 2) // 4) * Fraction(3, 2)
    return out + (_x(x4=n // 4) + _x(x2=2, x4=(n - 4) // 4)) * Fraction(3, 4)


def _exp(numer: int, denom: int, n: int) -> int:
    if numer % denom:
        raise ValueError(f"exponent {numer}/{denom} is not an integer at n={n}")
    if numer < 0:
        raise ValueError(f"exponent {numer}/{denom} is negative at n={n}")
    return numer // denom


def _phi_shifted(m: int) -> int:
    """The generalized phi with a_1(d) = d - 1, evaluated at m."""
    return int(generalized_phi(lambda d: [d - 1], m)[m])


def _dihedral_printed(n: int, brace: str) -> MultiPoly:
    z_orbi = orbicycle_index_cyclic(n)
    z = cycle_index_cyclic(n)
    if n % 2:
        return z_orbi * Fraction(1, 2) - z * Fraction(3, 2) + _x(x1=1, x2=(n - 1) // 2) * Fraction(3, 2)

    out = z_orbi * Fraction(1, 2) - z * 2
    out += (_x(x2=n // 2) + _x(x1=2, x2=(n - 2) // 2)) * Fraction(3 * n + 4, 8 * n)
    for d in divisors(n // 2):
        out += MultiPoly.from_monomial(Monomial.var(n // d, d), Fraction(_phi_shifted(n // (2 * d)), 2 * n))
    if brace not in (TOP_IS_2_MOD_4, TOP_IS_0_MOD_4):
        raise ValueError(f"unknown brace reading {brace!r}")
    top = (n % 4 == 2) == (brace == TOP_IS_2_MOD_4)
    if top:
        out += _x(x2=1, x4=_exp(n - 2, 4, n)) * Fraction(2 * n + 2, n)
    else:
        out += _x(x4=_exp(n, 4, n)) * Fraction(n + 1, n)
        out += _x(x2=2, x4=_exp(n - 4, 2, n)) * Fraction(1, 2)
        out += _x(x2=2, x4=_exp(n - 4, 4, n)) * Fraction(n + 2, 2 * n)
    return out


def orbicycle_index_dihedral(n: int, variant: str = CORRECTED, brace: str = TOP_IS_2_MOD_4) -> MultiPoly:
    """Closed form of the orbicycle index of D_n.

    ``variant="corrected"`` is the form that agrees with
    :func:`orbicycle_index`.  ``variant="as_printed"`` evaluates the
    published displays literally; for even n the ``brace`` argument selects
    which residue of n mod 4 the upper row applies to.  A reading that
    yields a fractional exponent raises :class:`ValueError`.
    """
    if n < 3:
        raise ValueError(f"dihedral group needs n >= 3, got {n}")
    if variant == CORRECTED:
        return _dihedral_corrected(n)
    if variant == AS_PRINTED:
        return _dihedral_printed(n, brace)
    raise ValueError(f"unknown variant {variant!r}")


def evaluate_at_ones(p: MultiPoly) -> Fraction:
    return p.evaluate(1)


def closed_form(family: str, n: int, orbi: bool, variant: str = CORRECTED) -> MultiPoly:
    """Dispatch to the closed form for a built-in family."""
    if family == "trivial":
        return MultiPoly.var(1, n)
    if family == "cyclic":
        return orbicycle_index_cyclic(n) if orbi else cycle_index_cyclic(n)
    if family == "dihedral":
        return orbicycle_index_dihedral(n, variant) if orbi else cycle_index_dihedral(n)
    if family == "symmetric":
        return orbicycle_index_symmetric(n) if orbi else cycle_index_symmetric(n)
    raise ValueError(f"no closed form for family {family!r}")

