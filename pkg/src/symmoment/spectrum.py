"""Characters of the polynomial algebra and the Gelfand-spectrum balls they fill.

A character is evaluation at a point ``v*`` of ``R^n``.  It is continuous for
the extension of ``i * rho`` exactly when ``rho'(v*) <= i``, so spectrum
membership reduces to a dual-norm test.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np
from scipy.stats import qmc

from .algebra import Polynomial, as_fraction, evaluate
from .seminorm import FamilySpec, SeminormSpec, conjugate_exponent, dual_norm

BOUNDARY_TOL = 1e-12
MAX_VERTEX_DIM = 16


@dataclass(frozen=True)
class Character:
    point: tuple

    def __call__(self, f: Polynomial):
        return evaluate(f, self.point)


@dataclass(frozen=True)
class SpectrumBall:
    """The closed ball of radius ``radius`` for the dual norm of ``seminorm``."""

    seminorm: SeminormSpec
    radius: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "radius", as_fraction(self.radius))
        if self.radius <= 0:
            raise ValueError("ball radius must be positive")


def spectrum_contains(ball: SpectrumBall, vstar: Sequence, tol: float = BOUNDARY_TOL) -> bool:
    dn = dual_norm(ball.seminorm, vstar)
    if isinstance(dn, Fraction):
        return dn <= ball.radius
    return dn <= float(ball.radius) + tol


def spectrum_union_contains(family: FamilySpec, scalings: Sequence, vstar: Sequence,
                            tol: float = BOUNDARY_TOL) -> bool:
    """Membership in the union of the balls ``B_i(rho')`` over the family and scalings."""
    return any(
        spectrum_contains(SpectrumBall(rho, i), vstar, tol)
        for rho in family.members
        for i in scalings
    )


def _box_half_widths(ball: SpectrumBall, n: int) -> list[Fraction]:
    return [ball.radius * w for w in ball.seminorm.effective_weights(n)]


def _sample_box(half: list[Fraction], count: int, seed: int) -> list[tuple]:
    n = len(half)
    rng = np.random.default_rng(seed)
    points: list[tuple] = []
    if n <= MAX_VERTEX_DIM:
        for signs in itertools.product((1, -1), repeat=n):
            if len(points) == count:
                return points
            points.append(tuple(s * h for s, h in zip(signs, half)))
    else:
        k = min(count, 2**MAX_VERTEX_DIM)
        for row in rng.integers(0, 2, size=(k, n)):
            points.append(tuple(h if b else -h for b, h in zip(row, half)))
    remaining = count - len(points)
    if remaining > 0:
        halton = qmc.Halton(d=n, scramble=True, seed=seed)
        for u in halton.random(remaining):
            points.append(tuple(h * (2 * Fraction(float(x)) - 1) for x, h in zip(u, half)))
    return points


def _lq_norm(x: np.ndarray, q: float) -> float:
    if q == math.inf:
        return float(np.max(np.abs(x)))
    return float(np.sum(np.abs(x) ** q) ** (1.0 / q))


def _sample_lq(radius: float, exact_radius: Fraction, q: float, n: int, count: int, seed: int) -> list[tuple]:
    points: list[tuple] = []
    for j in range(n):
        for sign in (1, -1):
            points.append(tuple(sign * exact_radius if i == j else Fraction(0) for i in range(n)))
    if n <= MAX_VERTEX_DIM:
        diag = radius / n ** (1.0 / q)
        for signs in itertools.product((1.0, -1.0), repeat=n):
            points.append(tuple(s * diag for s in signs))
    points = points[:count]
    rng = np.random.default_rng(seed)
    k = 0
    while len(points) < count:
        g = rng.standard_normal(n)
        norm = _lq_norm(g, q)
        if norm == 0.0:
            continue
        shrink = 1.0 if k % 2 == 0 else rng.random() ** (1.0 / n)
        x = g * (radius * shrink / norm)
        while _lq_norm(x, q) > radius:
            x = x * (1.0 - 1e-15)
        points.append(tuple(float(v) for v in x))
        k += 1
    return points


def sample_ball(ball: SpectrumBall, count: int, seed: int = 0, n: int | None = None) -> list[tuple]:
    """Deterministic sample of ``count`` points from a spectrum ball.

    Boxes (weighted l1 and l1) list their vertices first, exactly, then
    scrambled Halton points converted to exact rationals.  Other lp balls
    start with the axis extremes and the sign-diagonal points, then random
    directions, alternately on the sphere and inside it.
    """
    if count < 1:
        raise ValueError("count must be at least 1")
    rho = ball.seminorm
    n = n or rho.nvars
    if n is None:
        raise ValueError("dimension unknown for an lp ball: pass n")
    if rho.is_l1_type:
        return _sample_box(_box_half_widths(ball, n), count, seed)
    exact_radius = ball.radius * rho.scale
    q = conjugate_exponent(rho.p)
    return _sample_lq(float(exact_radius), exact_radius, q, n, count, seed)
