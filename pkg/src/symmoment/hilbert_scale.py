"""A diagonal Hilbert scale on finitely supported sequences.

``||v||_s^2 = sum_i v_i^2 (i+1)^(2s)``.  For this scale the embedding
``H_s2 -> H_s1`` is Hilbert-Schmidt (quasi-nuclear) exactly when
``sum_i (i+1)^(2(s1-s2))`` converges, i.e. when ``2(s2 - s1) > 1``.

Separability and the density conditions needed by the nuclear-space moment
theorem hold automatically here: finitely supported rational sequences are
countable and dense in every ``H_s``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .algebra import as_fraction, is_exact


def as_index(s) -> Fraction:
    """Scale indices are compared exactly; floats are read as the decimal they print as."""
    if isinstance(s, float):
        return Fraction(repr(s))
    return as_fraction(s)


@dataclass(frozen=True)
class HilbertScalePoint:
    coords: Mapping[int, object] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for i, v in dict(self.coords).items():
            if int(i) < 0:
                raise ValueError("indices are 0-based and nonnegative")
            if v != 0:
                clean[int(i)] = v
        object.__setattr__(self, "coords", dict(sorted(clean.items())))

    def truncate(self, indices) -> "HilbertScalePoint":
        keep = set(indices)
        return HilbertScalePoint({i: v for i, v in self.coords.items() if i in keep})

    def to_json(self) -> dict:
        return {"coords": [{"i": i, "v": str(v) if isinstance(v, Fraction) else v} for i, v in self.coords.items()]}

    @classmethod
    def from_json(cls, data) -> "HilbertScalePoint":
        out = {}
        for row in data["coords"]:
            v = row["v"]
            out[int(row["i"])] = as_fraction(v) if isinstance(v, (str, int)) else v
        return cls(out)


def hs_norm_squared(s, v: HilbertScalePoint):
    """Exact when ``s`` is an integer and the coordinates are rational."""
    s = as_index(s)
    if s.denominator == 1 and all(is_exact(x) for x in v.coords.values()):
        e = 2 * s.numerator
        return sum((Fraction(x) ** 2 * Fraction(i + 1) ** e for i, x in v.coords.items()), Fraction(0))
    return math.fsum(float(x) ** 2 * (i + 1) ** (2 * float(s)) for i, x in v.coords.items())


def hs_norm(s, v: HilbertScalePoint) -> float:
    return math.sqrt(hs_norm_squared(s, v))


def quasi_nuclear_embedding(s2, s1) -> bool:
    """Is ``H_s2 -> H_s1`` quasi-nuclear?"""
    return 2 * (as_index(s2) - as_index(s1)) > 1


def scale_dominance(s2, s1) -> bool:
    """Does ``||.||_s2`` dominate ``||.||_s1`` (weights are monotone in s)?"""
    return as_index(s2) >= as_index(s1)


def dominance_witness(s2, s1) -> HilbertScalePoint | None:
    """When ``s2 < s1``, the unit vector ``e_1`` has ``||e_1||_s1 > ||e_1||_s2``."""
    if scale_dominance(s2, s1):
        return None
    return HilbertScalePoint({1: Fraction(1)})


def nuclear_partner(s1) -> Fraction:
    """An index ``s2`` with a quasi-nuclear embedding ``H_s2 -> H_s1``."""
    return as_index(s1) + 1
