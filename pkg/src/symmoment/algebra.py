"""Exact sparse polynomials standing in for the symmetric algebra S(V).

A polynomial lives over a fixed basis ``x1, ..., xn`` of ``V``.  Monomials are
dense exponent tuples of length ``n``; coefficients are :class:`fractions.Fraction`.
Everything is immutable, so instances can be shared freely.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from numbers import Rational
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Sequence, Union

Monomial = tuple  # dense exponent tuple, e.g. (2, 0, 1) is x1^2 x3
Scalar = Union[int, Fraction]


def as_fraction(value) -> Fraction:
    """Coerce ints, Fractions, decimal strings ("0.25") or "p/q" strings."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError(f"non-finite coefficient {value!r}")
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as a rational")


def is_exact(value) -> bool:
    return isinstance(value, (int, Fraction)) and not isinstance(value, bool)


def total_degree(mono: Monomial) -> int:
    return sum(mono)


def grlex_key(mono: Monomial):
    """Graded lexicographic order with x1 > x2 > ... inside a degree."""
    return (sum(mono), tuple(-e for e in mono))


def monomials_of_degree(nvars: int, degree: int) -> list[Monomial]:
    """All exponent tuples of the given total degree, grlex ordered."""
    out = []
    for bars in itertools.combinations(range(degree + nvars - 1), nvars - 1):
        prev = -1
        exps = []
        for b in bars:
            exps.append(b - prev - 1)
            prev = b
        exps.append(degree + nvars - 2 - prev)
        out.append(tuple(exps))
    out.sort(key=grlex_key)
    return out


def monomials_up_to(nvars: int, degree: int) -> list[Monomial]:
    out: list[Monomial] = []
    for k in range(degree + 1):
        out.extend(monomials_of_degree(nvars, k))
    return out


def add_monomials(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def format_monomial(mono: Monomial) -> str:
    parts = []
    for i, e in enumerate(mono, start=1):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts) if parts else "1"


class Polynomial:
    """Sparse multivariate polynomial with exact rational coefficients.

    Parameters
    ----------
    nvars : int
        Size of the basis ``x1..xn``.
    terms : mapping, optional
        Monomial exponent tuple -> coefficient.  Zero coefficients are dropped.
    """

    __slots__ = ("_nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Monomial, object] | None = None):
        if nvars < 1:
            raise ValueError("nvars must be at least 1")
        clean: dict[Monomial, Fraction] = {}
        for mono, coef in (terms or {}).items():
            mono = tuple(int(e) for e in mono)
            if len(mono) != nvars:
                raise ValueError(f"monomial {mono} does not have {nvars} exponents")
            if any(e < 0 for e in mono):
                raise ValueError(f"negative exponent in {mono}")
            c = clean.get(mono, Fraction(0)) + as_fraction(coef)
            if c:
                clean[mono] = c
            else:
                clean.pop(mono, None)
        self._nvars = nvars
        self._terms = clean
        self._hash = None

    # -- constructors -----------------------------------------------------
    @classmethod
    def constant(cls, value, nvars: int) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def variable(cls, index: int, nvars: int) -> "Polynomial":
        """The basis vector ``x_index`` (1-based)."""
        if not 1 <= index <= nvars:
            raise ValueError(f"variable index {index} outside 1..{nvars}")
        mono = tuple(1 if i == index - 1 else 0 for i in range(nvars))
        return cls(nvars, {mono: 1})

    @classmethod
    def monomial(cls, mono: Monomial, coef=1) -> "Polynomial":
        return cls(len(mono), {tuple(mono): coef})

    @classmethod
    def linear(cls, coefs: Sequence) -> "Polynomial":
        """The element ``sum a_i x_i`` of V."""
        n = len(coefs)
        terms = {}
        for i, a in enumerate(coefs):
            mono = tuple(1 if j == i else 0 for j in range(n))
            terms[mono] = a
        return cls(n, terms)

    @classmethod
    def variables(cls, nvars: int) -> tuple["Polynomial", ...]:
        return tuple(cls.variable(i, nvars) for i in range(1, nvars + 1))

    # -- basic accessors --------------------------------------------------
    @property
    def nvars(self) -> int:
        return self._nvars

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return MappingProxyType(self._terms)

    def items(self) -> list[tuple[Monomial, Fraction]]:
        """Terms in graded lexicographic order."""
        return sorted(self._terms.items(), key=lambda kv: grlex_key(kv[0]))

    def coefficient(self, mono: Monomial) -> Fraction:
        return self._terms.get(tuple(mono), Fraction(0))

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self._terms), default=-1)

    def is_zero(self) -> bool:
        return not self._terms

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self._terms}) <= 1

    def constant_term(self) -> Fraction:
        return self.coefficient((0,) * self._nvars)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[tuple[Monomial, Fraction]]:
        return iter(self.items())

    # -- arithmetic -------------------------------------------------------
    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other._nvars != self._nvars:
                raise ValueError(
                    f"dimension mismatch: {self._nvars} vs {other._nvars} variables"
                )
            return other
        return Polynomial.constant(as_fraction(other), self._nvars)

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        terms = dict(self._terms)
        for mono, c in other._terms.items():
            terms[mono] = terms.get(mono, 0) + c
        return Polynomial(self._nvars, terms)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(self._nvars, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Polynomial":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            c = as_fraction(other)
            return Polynomial(self._nvars, {m: c * v for m, v in self._terms.items()})
        other = self._coerce(other)
        out: dict[Monomial, Fraction] = {}
        if all(c.denominator == 1 for c in self._terms.values()) and all(
            c.denominator == 1 for c in other._terms.values()
        ):
            # integer coefficients: plain int arithmetic is much cheaper than Fraction
            acc: dict[Monomial, int] = {}
            for m1, c1 in self._terms.items():
                a = c1.numerator
                for m2, c2 in other._terms.items():
                    m = add_monomials(m1, m2)
                    acc[m] = acc.get(m, 0) + a * c2.numerator
            return Polynomial(self._nvars, acc)
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = add_monomials(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial(self._nvars, out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Polynomial":
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Polynomial.constant(1, self._nvars)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self._nvars == other._nvars and self._terms == other._terms
        if is_exact(other):
            return self == Polynomial.constant(other, self._nvars)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._nvars, frozenset(self._terms.items())))
        return self._hash

    # -- structure --------------------------------------------------------
    def graded_parts(self) -> dict[int, "Polynomial"]:
        """Homogeneous components keyed by degree (empty for zero)."""
        buckets: dict[int, dict] = {}
        for mono, c in self._terms.items():
            buckets.setdefault(sum(mono), {})[mono] = c
        return {k: Polynomial(self._nvars, buckets[k]) for k in sorted(buckets)}

    def __call__(self, point):
        return evaluate(self, point)

    # -- presentation -----------------------------------------------------
    def __repr__(self) -> str:
        return f"Polynomial({self._nvars}, {self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        chunks = []
        for mono, c in self.items():
            body = format_monomial(mono)
            mag = abs(c)
            if body == "1":
                s = str(mag)
            elif mag == 1:
                s = body
            else:
                s = f"{mag}*{body}"
            sign = "-" if c < 0 else "+"
            chunks.append((sign, s))
        first_sign, first = chunks[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, s in chunks[1:]:
            out += f" {sign} {s}"
        return out

    def to_json(self) -> dict:
        return {
            "nvars": self._nvars,
            "terms": [
                {"exp": list(mono), "coef": _fraction_str(c)} for mono, c in self.items()
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "Polynomial":
        nvars = int(data["nvars"])
        terms: dict[Monomial, Fraction] = {}
        for term in data.get("terms", []):
            mono = tuple(int(e) for e in term["exp"])
            terms[mono] = terms.get(mono, Fraction(0)) + as_fraction(term["coef"])
        return cls(nvars, terms)


def _fraction_str(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def poly_add(f: Polynomial, g: Polynomial) -> Polynomial:
    return f + g


def poly_mul(f: Polynomial, g: Polynomial) -> Polynomial:
    return f * g


def poly_power(f: Polynomial, e: int) -> Polynomial:
    return f**e


def graded_parts(f: Polynomial) -> dict[int, Polynomial]:
    return f.graded_parts()


def poly_sum(polys: Iterable[Polynomial], nvars: int) -> Polynomial:
    total = Polynomial(nvars)
    for p in polys:
        total = total + p
    return total


def evaluate(f: Polynomial, point: Sequence):
    """Evaluate ``f`` at a point of V* = R^n.

    Rational points (ints/Fractions) give an exact Fraction.  Any float entry
    switches to IEEE double arithmetic with round-to-nearest.
    """
    if len(point) != f.nvars:
        raise ValueError(f"point has {len(point)} coordinates, expected {f.nvars}")
    if all(is_exact(x) for x in point):
        pt = [Fraction(x) for x in point]
        total = Fraction(0)
        one = Fraction(1)
    else:
        pt = [float(x) for x in point]
        total = 0.0
        one = 1.0
    maxexp = [0] * f.nvars
    for mono in f.terms:
        for i, e in enumerate(mono):
            if e > maxexp[i]:
                maxexp[i] = e
    powers = []
    for x, top in zip(pt, maxexp):
        row = [one]
        for _ in range(top):
            row.append(row[-1] * x)
        powers.append(row)
    exact = isinstance(total, Fraction)
    for mono, c in f.terms.items():
        term = c if exact else float(c)
        for i, e in enumerate(mono):
            if e:
                term = term * powers[i][e]
        total += term
    return total
