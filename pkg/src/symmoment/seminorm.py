"""Seminorms on V = span(x1..xn) and their dual norms on V* = R^n.

Two kinds are supported, each optionally multiplied by a positive rational
``scale``:

* ``weighted_l1`` with weights ``r``: ``sum |a_i| r_i``
* ``lp`` with exponent ``p >= 1``: ``(sum |a_i|^p)^(1/p)``

Weighted l1 (and l1 itself) evaluates exactly on rational input.  Other
``lp`` values are doubles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Sequence

from .algebra import Polynomial, as_fraction, is_exact

WEIGHTED_L1 = "weighted_l1"
LP = "lp"


class NoClosedForm(ValueError):
    """Raised when a dominance constant is not known in closed form."""


@dataclass(frozen=True)
class SeminormSpec:
    kind: str
    weights: tuple[Fraction, ...] | None = None
    p: float | None = None
    scale: Fraction = Fraction(1)
    nvars: int | None = None

    def __post_init__(self):
        if self.scale <= 0:
            raise ValueError("scale must be positive")
        if self.kind == WEIGHTED_L1:
            if not self.weights:
                raise ValueError("weighted_l1 needs a nonempty weight vector")
            if any(w <= 0 for w in self.weights):
                raise ValueError("weights must be strictly positive")
            if self.nvars is not None and self.nvars != len(self.weights):
                raise ValueError("nvars disagrees with the weight vector")
            object.__setattr__(self, "nvars", len(self.weights))
        elif self.kind == LP:
            if self.p is None or not (1 <= self.p < math.inf):
                raise ValueError("lp exponent must satisfy 1 <= p < inf")
        else:
            raise ValueError(f"unknown seminorm kind {self.kind!r}")

    @property
    def is_l1_type(self) -> bool:
        """True when the seminorm is a (scaled) weighted l1 norm, including plain l1."""
        return self.kind == WEIGHTED_L1 or self.p == 1

    def effective_weights(self, n: int) -> tuple[Fraction, ...]:
        """Weights of the equivalent weighted l1 norm (scale folded in)."""
        if self.kind == WEIGHTED_L1:
            if len(self.weights) != n:
                raise ValueError(f"seminorm has {len(self.weights)} weights, expected {n}")
            return tuple(self.scale * w for w in self.weights)
        if self.p == 1:
            self._check_n(n)
            return (self.scale,) * n
        raise ValueError("only l1-type seminorms have weights")

    def _check_n(self, n: int) -> None:
        if self.nvars is not None and self.nvars != n:
            raise ValueError(f"seminorm lives on {self.nvars} variables, got {n}")

    def scaled(self, factor) -> "SeminormSpec":
        return replace(self, scale=self.scale * as_fraction(factor))

    def to_json(self) -> dict:
        scale = _frac_str(self.scale)
        if self.kind == WEIGHTED_L1:
            return {"kind": WEIGHTED_L1, "r": [_frac_str(w) for w in self.weights], "scale": scale}
        out = {"kind": LP, "p": float(self.p), "scale": scale}
        if self.nvars is not None:
            out["n"] = self.nvars
        return out

    @classmethod
    def from_json(cls, data) -> "SeminormSpec":
        kind = data["kind"]
        scale = as_fraction(data.get("scale", 1))
        if kind == WEIGHTED_L1:
            return weighted_l1(data["r"], scale=scale)
        if kind == LP:
            return lp(data["p"], nvars=data.get("n"), scale=scale)
        raise ValueError(f"unknown seminorm kind {kind!r}")


def _frac_str(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def weighted_l1(r: Sequence, scale=1) -> SeminormSpec:
    return SeminormSpec(WEIGHTED_L1, weights=tuple(as_fraction(w) for w in r), scale=as_fraction(scale))


def lp(p, nvars: int | None = None, scale=1) -> SeminormSpec:
    return SeminormSpec(LP, p=float(p), scale=as_fraction(scale), nvars=nvars)


@dataclass(frozen=True)
class FamilySpec:
    members: tuple[SeminormSpec, ...]

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(self.members))
        if not self.members:
            raise ValueError("a seminorm family must be nonempty")

    def to_json(self) -> dict:
        return {"members": [m.to_json() for m in self.members]}

    @classmethod
    def from_json(cls, data) -> "FamilySpec":
        return cls(tuple(SeminormSpec.from_json(m) for m in data["members"]))


def linear_coefficients(v) -> tuple:
    """Coordinates of an element of V, given as a polynomial or a coefficient list."""
    if isinstance(v, Polynomial):
        coefs = [Fraction(0)] * v.nvars
        for mono, c in v.terms.items():
            if sum(mono) != 1:
                raise ValueError(f"{v} is not an element of V (degree-1 homogeneous)")
            coefs[mono.index(1)] = c
        return tuple(coefs)
    return tuple(v)


def _lp_value(xs: Sequence, p: float):
    """The lp norm; exact for p == 1 on rational input, sqrt of an exact sum for p == 2."""
    if p == 1:
        return sum((abs(x) for x in xs), Fraction(0) if all(is_exact(x) for x in xs) else 0.0)
    if p == 2:
        if all(is_exact(x) for x in xs):
            return math.sqrt(sum(Fraction(x) ** 2 for x in xs))
        return math.sqrt(math.fsum(float(x) ** 2 for x in xs))
    if p == math.inf:
        return max((abs(x) for x in xs), default=Fraction(0))
    support = [x for x in xs if x != 0]
    if len(support) <= 1 and all(is_exact(x) for x in xs):
        # a single coordinate has norm |x| for every p
        return abs(Fraction(support[0])) if support else Fraction(0)
    fl =[abs(float(x)) for x in xs]
    top = max(fl, default=0.0)
    if top == 0.0:
        return 0.0
    return top * math.fsum((x / top) ** p for x in fl) ** (1.0 / p)


def conjugate_exponent(p: float) -> float:
    if p == 1:
        return math.inf
    return p / (p - 1.0)


def seminorm_eval(rho: SeminormSpec, v):
    """Value of ``rho`` on an element of V."""
    a = linear_coefficients(v)
    if rho.kind == WEIGHTED_L1:
        if len(a) != len(rho.weights):
            raise ValueError("dimension mismatch between seminorm and vector")
        if all(is_exact(x) for x in a):
            return rho.scale * sum((abs(Fraction(x)) * w for x, w in zip(a, rho.weights)), Fraction(0))
        return float(rho.scale) * math.fsum(abs(float(x)) * float(w) for x, w in zip(a, rho.weights))
    rho._check_n(len(a))
    value = _lp_value(a, rho.p)
    return rho.scale * value if isinstance(value, Fraction) else float(rho.scale) * value


def dual_norm(rho: SeminormSpec, vstar: Sequence):
    """Operator norm of the functional ``vstar`` with respect to ``rho``."""
    if rho.kind == WEIGHTED_L1:
        if len(vstar) != len(rho.weights):
            raise ValueError("dimension mismatch between seminorm and dual vector")
        if all(is_exact(x) for x in vstar):
            return max(
                (abs(Fraction(x)) / (rho.scale * w) for x, w in zip(vstar, rho.weights)),
                default=Fraction(0),
            )
        return max(abs(float(x)) / float(rho.scale * w) for x, w in zip(vstar, rho.weights))
    rho._check_n(len(vstar))
    value = _lp_value(vstar, conjugate_exponent(rho.p))
    if isinstance(value, Fraction):
        return value / rho.scale
    return value / float(rho.scale)


@dataclass(frozen=True)
class Dominance:
    """Least ``C`` with ``C*rho1 >= rho2`` and a vector where equality holds."""

    constant: float | Fraction
    witness: tuple


def _unit(n: int, i: int) -> tuple:
    return tuple(Fraction(1) if j == i else Fraction(0) for j in range(n))


def dominates(rho1: SeminormSpec, rho2: SeminormSpec, n: int | None = None) -> Dominance:
    """Sharp constant for ``rho1 >= rho2`` up to a factor, in closed form."""
    n = n or rho1.nvars or rho2.nvars
    if n is None:
        raise ValueError("dimension unknown: pass n for lp/lp comparisons")
    ratio = rho2.scale / rho1.scale

    if rho1.kind == WEIGHTED_L1 and rho2.kind == WEIGHTED_L1:
        r, s = rho1.effective_weights(n), rho2.effective_weights(n)
        i = max(range(n), key=lambda j: s[j] / r[j])
        return Dominance(s[i] / r[i], _unit(n, i))

    if rho1.kind == WEIGHTED_L1 and rho2.kind == LP:
        # lp is convex, so its max over the weighted l1 ball sits at a vertex e_i / r_i
        rho2._check_n(n)
        r = rho1.weights
        i = min(range(n), key=lambda j: r[j])
        return Dominance(ratio / r[i], _unit(n, i))

    if rho1.kind == LP and rho2.kind == WEIGHTED_L1:
        rho1._check_n(n)
        q = rho2.weights
        if rho1.p == 1:
            i = max(range(n), key=lambda j: q[j])
            return Dominance(ratio * q[i], _unit(n, i))
        pstar = conjugate_exponent(rho1.p)
        const = float(ratio) * _lp_value(q, pstar)
        witness = tuple(float(w) ** (pstar - 1.0) for w in q)
        return Dominance(const, witness)

    if rho1.kind == LP and rho2.kind == LP:
        rho1._check_n(n)
        rho2._check_n(n)
        p1, p2 = rho1.p, rho2.p
        if p2 >= p1:
            return Dominance(ratio, _unit(n, 0))
        expo = 1.0 / p2 - 1.0 / p1
        return Dominance(float(ratio) * n**expo, (Fraction(1),) * n)

    raise NoClosedForm(f"no closed form for the pair ({rho1.kind}, {rho2.kind})")


def family_max_bound(family: FamilySpec, v):
    """Value of ``max(rho for rho in family)`` at ``v``."""
    return max(seminorm_eval(rho, v) for rho in family.members)
