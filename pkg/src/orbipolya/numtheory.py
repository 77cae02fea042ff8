"""Divisor sums: Moebius, Euler phi, Jordan totients and their product-sum
generalisation."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial, gcd
from typing import Callable, Iterable, Mapping, Sequence, Union

Number = Union[int, Fraction]


def _check_positive(n: int, name: str = "n") -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError(f"{name} must be a positive integer, got {n!r}")


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorisation by trial division as ``((p, e), ...)``."""
    _check_positive(n)
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def is_prime(n: int) -> bool:
    return isinstance(n, int) and n >= 2 and factorize(n) == ((n, 1),)


@lru_cache(maxsize=None)
def _divisors(n: int) -> tuple[int, ...]:
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return tuple(sorted(divs))


def divisors(n: int) -> list[int]:
    _check_positive(n)
    return list(_divisors(n))


def mobius(n: int) -> int:
    f = factorize(n)
    if any(e > 1 for _, e in f):
        return 0
    return -1 if len(f) % 2 else 1


def euler_phi(n: int) -> int:
    result = n
    for p, _ in factorize(n):
        result -= result // p
    return result


def jordan_totient(k: int, n: int) -> int:
    """J_k(n) = sum over d | n of mu(n/d) d^k; J_1 is Euler's phi."""
    _check_positive(k, "k")
    _check_positive(n)
    return sum(mobius(n // d) * d**k for d in divisors(n))


def tuple_gcd(values: Iterable[int], n: int) -> int:
    """gcd of the entries together with n, so gcd(0, n) = n."""
    g = n
    for v in values:
        g = gcd(g, v)
    return g


def generalized_phi(
    a_values: Mapping[int, Sequence[Number]] | Callable[[int], Sequence[Number]],
    n: int,
) -> dict[int, Number]:
    """Moebius-inverted product sums  m -> sum_{d | m} a_1(d)...a_k(d) mu(m/d).

    ``a_values`` gives, for each divisor d of ``n``, the list
    ``[a_1(d), ..., a_k(d)]``; it may be a mapping or a callable.  The result
    holds one value per divisor m of ``n``.
    """
    _check_positive(n)

    def values(d: int) -> Sequence[Number]:
        if callable(a_values):
            return a_values(d)
        if d not in a_values:
            raise KeyError(f"a_values has no entry for divisor {d}")
        return a_values[d]

    prods: dict[int, Fraction] = {}
    for d in divisors(n):
        prod = Fraction(1)
        for a in values(d):
            prod *= Fraction(a)
        prods[d] = prod
    out: dict[int, Number] = {}
    for m in divisors(n):
        total = sum((prods[d] * mobius(m // d) for d in divisors(m)), Fraction(0))
        out[m] = int(total) if total.denominator == 1 else total
    return out


def multinomial(parts: Sequence[int]) -> int:
    out = factorial(sum(parts))
    for p in parts:
        out //= factorial(p)
    return out
