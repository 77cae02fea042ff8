"""Sparse multivariate polynomials in x1, x2, ... with exact rational coefficients.

A :class:`Monomial` is a sorted tuple of ``(variable_index, exponent)`` pairs,
and a :class:`MultiPoly` maps monomials to nonzero :class:`fractions.Fraction`
coefficients.  Both are immutable and hashable; equal polynomials compare
equal structurally no matter how they were built.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Mapping, Union

Number = Union[int, Fraction]


class Monomial:
    """Product of powers of the variables x_k, k >= 1."""

    __slots__ = ("_exps", "_hash")

    def __init__(self, exps: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = exps.items() if isinstance(exps, Mapping) else exps
        merged: dict[int, int] = {}
        for k, e in items:
            k, e = int(k), int(e)
            if k < 1:
                raise ValueError(f"variable index must be >= 1, got {k}")
            if e < 0:
                raise ValueError(f"negative exponent {e} for x{k}")
            if e:
                merged[k] = merged.get(k, 0) + e
        self._exps = tuple(sorted(merged.items()))
        self._hash = hash(self._exps)

    @classmethod
    def one(cls) -> "Monomial":
        return cls()

    @classmethod
    def var(cls, k: int, e: int = 1) -> "Monomial":
        return cls({k: e})

    @property
    def exps(self) -> dict[int, int]:
        return dict(self._exps)

    def items(self) -> tuple[tuple[int, int], ...]:
        return self._exps

    def exponent(self, k: int) -> int:
        for i, e in self._exps:
            if i == k:
                return e
        return 0

    @property
    def weighted_degree(self) -> int:
        """Sum of k * e_k; the degree of the group for cycle-index monomials."""
        return sum(k * e for k, e in self._exps)

    @property
    def degree(self) -> int:
        return sum(e for _, e in self._exps)

    @property
    def max_var(self) -> int:
        return self._exps[-1][0] if self._exps else 0

    def exponent_vector(self, length: int | None = None) -> tuple[int, ...]:
        n = self.max_var if length is None else length
        vec = [0] * n
        for k, e in self._exps:
            if k > n:
                raise ValueError(f"x{k} does not fit in a vector of length {n}")
            vec[k - 1] = e
        return tuple(vec)

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(self._exps + other._exps)

    def __pow__(self, n: int) -> "Monomial":
        return Monomial((k, e * n) for k, e in self._exps)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Monomial) and self._exps == other._exps

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Monomial({dict(self._exps)!r})"

    def __str__(self) -> str:
        return _render_monomial(self, latex=False) or "1"


_END = (1 << 62, 0)


def _term_key(mono: Monomial):
    # ascending weighted degree, then descending lex on the exponent vector
    return (mono.weighted_degree, tuple((k, -e) for k, e in mono.items()) + (_END,))


class MultiPoly:
    """Immutable sparse polynomial over the rationals."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Number] | None = None):
        clean: dict[Monomial, Fraction] = {}
        if terms:
            for mono, c in terms.items():
                if not isinstance(mono, Monomial):
                    mono = Monomial(mono)
                c = _as_fraction(c)
                if c:
                    clean[mono] = clean.get(mono, Fraction(0)) + c
                    if not clean[mono]:
                        del clean[mono]
        self._terms = clean
        self._hash: int | None = None

    # construction helpers
    @classmethod
    def zero(cls) -> "MultiPoly":
        return cls()

    @classmethod
    def constant(cls, c: Number) -> "MultiPoly":
        return cls({Monomial(): c})

    @classmethod
    def var(cls, k: int, e: int = 1) -> "MultiPoly":
        return cls({Monomial.var(k, e): 1})

    @classmethod
    def from_monomial(cls, mono: Monomial, coeff: Number = 1) -> "MultiPoly":
        return cls({mono: coeff})

    @classmethod
    def _raw(cls, terms: dict[Monomial, Fraction]) -> "MultiPoly":
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @property
    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    def __iter__(self) -> Iterator[tuple[Monomial, Fraction]]:
        return iter(sorted(self._terms.items(), key=lambda t: _term_key(t[0])))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coefficient(self, mono: Monomial | Mapping[int, int]) -> Fraction:
        if not isinstance(mono, Monomial):
            mono = Monomial(mono)
        return self._terms.get(mono, Fraction(0))

    def is_constant(self) -> bool:
        return all(not m.items() for m in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"polynomial {self} is not constant")
        return self._terms.get(Monomial(), Fraction(0))

    def variables(self) -> list[int]:
        return sorted({k for m in self._terms for k, _ in m.items()})

    # arithmetic
    def __add__(self, other) -> "MultiPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return MultiPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "MultiPoly":
        return (-self) + other

    def __mul__(self, other) -> "MultiPoly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = _coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = m1 * m2
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return MultiPoly._raw(out)

    __rmul__ = __mul__

    def __truediv__(self, other: Number) -> "MultiPoly":
        return self.scale(Fraction(1) / _as_fraction(other))

    def __pow__(self, n: int) -> "MultiPoly":
        if n < 0:
            raise ValueError("negative powers are not supported")
        result = MultiPoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c: Number) -> "MultiPoly":
        c = _as_fraction(c)
        if not c:
            return MultiPoly()
        return MultiPoly._raw({m: v * c for m, v in self._terms.items()})

    def substitute(self, table: Mapping[int, "MultiPoly | Number"] | Callable[[int], "MultiPoly | Number"]) -> "MultiPoly":
        """Replace each x_k by ``table[k]`` and expand; see :func:`power_substitute`."""
        return power_substitute(self, table)

    def evaluate(self, value: Number) -> Fraction:
        """Value with every variable set to ``value``."""
        return power_substitute(self, lambda k: value).constant_value()

    # comparison / hashing
    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"MultiPoly({self.to_text()!r})"

    def __str__(self) -> str:
        return self.to_text()

    # renderings
    def to_text(self) -> str:
        return _render(self, latex=False)

    def to_latex(self) -> str:
        return _render(self, latex=True)

    def to_json_obj(self) -> dict:
        return {
            "terms": [
                {"coeff": fraction_str(c), "exps": {str(k): e for k, e in m.items()}}
                for m, c in self
            ]
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> "MultiPoly":
        terms: dict[Monomial, Fraction] = {}
        for t in obj["terms"]:
            mono = Monomial({int(k): int(e) for k, e in t["exps"].items()})
            terms[mono] = terms.get(mono, Fraction(0)) + Fraction(t["coeff"])
        return cls(terms)

    @classmethod
    def from_json(cls, text: str) -> "MultiPoly":
        return cls.from_json_obj(json.loads(text))


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, bool) or not isinstance(c, int):
        raise TypeError(f"exact coefficient required, got {type(c).__name__}")
    return Fraction(c)


def _coerce(other):
    if isinstance(other, MultiPoly):
        return other
    if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
        return MultiPoly.constant(other)
    return NotImplemented


def fraction_str(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _render_monomial(mono: Monomial, latex: bool) -> str:
    parts = []
    for k, e in mono.items():
        if latex:
            parts.append(f"x_{{{k}}}" + (f"^{{{e}}}" if e > 1 else ""))
        else:
            parts.append(f"x{k}" + (f"^{e}" if e > 1 else ""))
    return (" " if latex else "*").join(parts)


def _render(p: MultiPoly, latex: bool) -> str:
    if not p:
        return "0"
    out = []
    for i, (mono, c) in enumerate(p):
        sign = "-" if c < 0 else "+"
        a = abs(c)
        body = _render_monomial(mono, latex)
        if latex:
            cs = str(a.numerator) if a.denominator == 1 else f"\\frac{{{a.numerator}}}{{{a.denominator}}}"
            term = body if (a == 1 and body) else (f"{cs} {body}" if body else cs)
        else:
            cs = fraction_str(a)
            term = body if (a == 1 and body) else (f"{cs}*{body}" if body else cs)
        if i == 0:
            out.append(f"-{term}" if sign == "-" else term)
        else:
            out.append(f" {sign} {term}")
    return "".join(out)


def monomial_of_profile(profile: Mapping[int, int]) -> Monomial:
    """Monomial prod_k x_k^{b_k} for a block-size profile ``{k: b_k}``."""
    return Monomial(profile)


def monomial_of_partition(partition) -> Monomial:
    """x^pi: exponent of x_k is the number of size-k blocks of ``partition``."""
    return Monomial(partition.block_profile())


def power_substitute(
    poly: MultiPoly,
    table: Mapping[int, "MultiPoly | Number"] | Callable[[int], "MultiPoly | Number"],
) -> MultiPoly:
    """Replace every x_k in ``poly`` by ``table(k)`` and expand.

    ``table`` is a mapping or a callable; entries may be polynomials or exact
    numbers.  A variable with no entry raises :class:`KeyError`.
    """
    cache: dict[int, MultiPoly] = {}
    powers: dict[tuple[int, int], MultiPoly] = {}

    def lookup(k: int) -> MultiPoly:
        if k not in cache:
            if callable(table):
                v = table(k)
            else:
                if k not in table:
                    raise KeyError(f"no substitution given for x{k}")
                v = table[k]
            cache[k] = v if isinstance(v, MultiPoly) else MultiPoly.constant(v)
        return cache[k]

    def power(k: int, e: int) -> MultiPoly:
        key = (k, e)
        if key not in powers:
            powers[key] = lookup(k) ** e
        return powers[key]

    result = MultiPoly()
    for mono, c in poly._terms.items():
        term = MultiPoly.constant(c)
        for k, e in mono.items():
            term = term * power(k, e)
        result = result + term
    return result


def coefficient(poly: MultiPoly, mono: Monomial | Mapping[int, int]) -> Fraction:
    return poly.coefficient(mono)


def poly_sum(polys: Iterable[MultiPoly]) -> MultiPoly:
    acc: dict[Monomial, Fraction] = {}
    for p in polys:
        for m, c in p._terms.items():
            s = acc.get(m, 0) + c
            if s:
                acc[m] = s
            else:
                acc.pop(m, None)
    return MultiPoly._raw(acc)


def power_sum(n_vars: int, k: int) -> MultiPoly:
    """x1^k + ... + x_n^k."""
    return MultiPoly({Monomial.var(j, k): 1 for j in range(1, n_vars + 1)})
