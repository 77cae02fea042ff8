"""Counting theorems for quotients and orbiquotients of weighted sets.

All results are exact polynomials (constants for numeric weights).  When
every weight is a constant integer the result must be an integer; anything
else raises :class:`NonIntegralCountError`.
"""

from __future__ import annotations

import warnings
from fractions import Fraction
from math import factorial
from typing import Sequence, Union

from .cycleindex import cycle_index, orbicycle_index, orbicycle_index_symmetric
from .numtheory import divisors, euler_phi, is_prime, jordan_totient, tuple_gcd
from .permgroup import PermutationGroup
from .polyring import Monomial, MultiPoly, power_substitute, power_sum
from .weighted import GroupAction, WeightedSet, fixed_weight, weighted_cardinality

PLAIN = "plain"
ORBI = "orbi"

__all__ = [
    "NonIntegralCountError",
    "weighted_cardinality",
    "quotient_count",
    "orbiquotient_count",
    "polya_count",
    "orbi_polya_count",
    "coloring_gf",
    "coloring_coefficient",
    "c_orb_cyclic",
    "necklace_count",
    "orbinecklace_count",
    "cycles_on_quotient",
    "orbifold_cohomology_dimension",
]


class NonIntegralCountError(ArithmeticError):
    pass


class ExponentSumWarning(UserWarning):
    pass


def _ensure_integral(value: MultiPoly, integral_weights: bool, what: str) -> MultiPoly:
    if integral_weights:
        c = value.constant_value()
        if c.denominator != 1:
            raise NonIntegralCountError(f"{what} gave the non-integer {c}")
    return value


def quotient_count(action: GroupAction) -> MultiPoly:
    """|X/G|_f = (1/|G|) sum over g of |X^g|_f."""
    G = action.group
    total = MultiPoly()
    for g in G.elements:
        total += fixed_weight(action, [g])
    return _ensure_integral(total / G.order, action.carrier.is_integral(), "quotient count")


def orbiquotient_count(action: GroupAction) -> MultiPoly:
    """|X/^orb G|_f = (1/|G|) sum over (class of g, h in Z(g)) of |class| |X^<g,h>|_f."""
    G = action.group
    total = MultiPoly()
    for g, h, size in G.pair_table:
        total += fixed_weight(action, [g, h]) * size
    return _ensure_integral(total / G.order, action.carrier.is_integral(), "orbiquotient count")


def _substitute_powers(index: MultiPoly, X: WeightedSet, scale: int = 1) -> MultiPoly:
    return power_substitute(index, lambda k: X.cardinality(k * scale))


def polya_count(group: PermutationGroup, X: WeightedSet) -> MultiPoly:
    """|X^m / G|_f = P_G(|X|_f, |X|_{f^2}, ...)."""
    return _ensure_integral(
        _substitute_powers(cycle_index(group), X), X.is_integral(), "Polya count"
    )


def orbi_polya_count(group: PermutationGroup, X: WeightedSet) -> MultiPoly:
    """|X^m /^orb G|_f = P^orb_G(|X|_f, |X|_{f^2}, ...)."""
    return _ensure_integral(
        _substitute_powers(orbicycle_index(group), X), X.is_integral(), "orbi-Polya count"
    )


def coloring_gf(group: PermutationGroup, n_colors: int, orbi: bool = False) -> MultiPoly:
    """Colorations of [m] with n colors, by color content.

    Substitutes x_k -> x_1^k + ... + x_n^k into P_G (or P^orb_G); the
    coefficient of x_1^i_1 ... x_n^i_n is c_G(i) (or c^orb_G(i)).
    """
    if n_colors < 1:
        raise ValueError(f"n_colors must be >= 1, got {n_colors}")
    index = orbicycle_index(group) if orbi else cycle_index(group)
    return power_substitute(index, lambda k: power_sum(n_colors, k))


def coloring_coefficient(
    group: PermutationGroup, exponents: Sequence[int], orbi: bool = False
) -> Fraction:
    """c_G(i_1..i_n), or c^orb_G with ``orbi``; n is ``len(exponents)``.

    An exponent vector that does not sum to the degree of the group has
    coefficient 0 and triggers an :class:`ExponentSumWarning`.
    """
    exponents = [int(e) for e in exponents]
    if any(e < 0 for e in exponents):
        raise ValueError(f"exponents must be nonnegative: {exponents}")
    if sum(exponents) != group.degree:
        warnings.warn(
            f"exponents {exponents} sum to {sum(exponents)}, not the degree {group.degree}",
            ExponentSumWarning,
            stacklevel=2,
        )
        return Fraction(0)
    gf = coloring_gf(group, len(exponents), orbi)
    return gf.coefficient(Monomial({j: e for j, e in enumerate(exponents, 1)}))


def c_orb_cyclic(n: int, exponents: Sequence[int]) -> Fraction:
    """c^orb for Z_n: (1/n) sum over d | gcd(i) of J_2(d) * multinomial(i/d)."""
    exponents = [int(e) for e in exponents]
    if sum(exponents) != n:
        raise ValueError(f"exponents {exponents} must sum to n={n}")
    g = tuple_gcd(exponents, n)
    total = 0
    for d in divisors(g):
        parts = [e // d for e in exponents]
        mult = factorial(sum(parts))
        for p in parts:
            mult //= factorial(p)
        total += jordan_totient(2, d) * mult
    return Fraction(total, n)


def _check_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")


def necklace_count(p: int, r: int) -> int:
    """Necklaces with p beads (p prime) and r colors: r + (r^p - r)/p."""
    _check_prime(p)
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    return r + (r**p - r) // p


def orbinecklace_count(p: int, r: int) -> int:
    """Orbi-necklaces: r*p + (r^p - r)/p."""
    _check_prime(p)
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    return r * p + (r**p - r) // p


Inner = Union[GroupAction, tuple[PermutationGroup, WeightedSet]]


def _inner_count(inner: Inner, quotient: str, power: int) -> MultiPoly:
    """(Orbi)quotient count of the inner object with weight f^power."""
    if isinstance(inner, GroupAction):
        action = inner.with_weight_power(power) if power != 1 else inner
        return orbiquotient_count(action) if quotient == ORBI else quotient_count(action)
    group, X = inner
    index = orbicycle_index(group) if quotient == ORBI else cycle_index(group)
    return _substitute_powers(index, X, scale=power)


def _inner_integral(inner: Inner) -> bool:
    X = inner.carrier if isinstance(inner, GroupAction) else inner[1]
    return X.is_integral()


def cycles_on_quotient(n: int, inner: Inner, quotient: str = ORBI, cycles: str = ORBI) -> MultiPoly:
    """Count n-cycles (or orbi n-cycles) on a quotient (or orbiquotient).

    ``inner`` is a :class:`GroupAction` (X, G) or a pair ``(G, X)`` with
    G <= S_m acting on X^m.  With s_d the inner count under the weight f^d,
    the result is (1/n) sum over d | n of w(d) s_d^{n/d}, where w is Euler's
    phi for plain cycles and J_2 for orbi-cycles.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    for name, v in (("quotient", quotient), ("cycles", cycles)):
        if v not in (PLAIN, ORBI):
            raise ValueError(f"{name} must be 'plain' or 'orbi', got {v!r}")
    weight = (lambda d: jordan_totient(2, d)) if cycles == ORBI else euler_phi
    total = MultiPoly()
    for d in divisors(n):
        total += _inner_count(inner, quotient, d) ** (n // d) * weight(d)
    return _ensure_integral(total / n, _inner_integral(inner), "cycle count")


def orbifold_cohomology_dimension(n: int, basis_size: int) -> int:
    """dim H^orb(M^n / S_n) = P^orb_{S_n}(b, ..., b) for a basis of size b."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if basis_size < 0:
        raise ValueError(f"basis size must be >= 0, got {basis_size}")
    value = orbicycle_index_symmetric(n).evaluate(basis_size)
    if value.denominator != 1:
        raise NonIntegralCountError(f"cohomology dimension gave {value}")
    return int(value)


def count_power_action(group: PermutationGroup, r: int, orbi: bool, generic: bool = False) -> MultiPoly:
    """|[r]^m / G| (or /^orb) with the trivial or generic weight."""
    X = WeightedSet.generic(r) if generic else WeightedSet.uniform(r)
    return orbi_polya_count(group, X) if orbi else polya_count(group, X)

