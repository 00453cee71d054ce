"""Projective extension of a seminorm from V to the whole polynomial algebra.

For weighted l1 norms the extension has the closed form
``sum |a_k| r^k`` over the monomial expansion.  For other lp norms only a
certified interval is produced: the monomial decomposition gives an upper
bound, and evaluation at characters in the unit dual ball gives a lower bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import Polynomial, as_fraction, evaluate, is_exact
from .seminorm import SeminormSpec, dual_norm, seminorm_eval

BALL_TOL = 1e-12


def ext_weighted_l1(r: Sequence, scale, f: Polynomial) -> Fraction:
    """Exact extension of the weighted l1 norm ``scale * rho_r`` evaluated at ``f``."""
    s = as_fraction(scale)
    w = [s * as_fraction(x) for x in r]
    if len(w) != f.nvars:
        raise ValueError(f"{len(w)} weights for a polynomial in {f.nvars} variables")
    if any(x <= 0 for x in w):
        raise ValueError("weights must be positive")
    total = Fraction(0)
    for mono, c in f.terms.items():
        term = abs(c)
        for wi, e in zip(w, mono):
            if e:
                term *= wi**e
        total += term
    return total


@dataclass(frozen=True)
class ProductTerm:
    """``coefficient * x_{j1} * ... * x_{jk}`` with 1-based basis indices."""

    coefficient: Fraction
    factors: tuple[int, ...]


@dataclass(frozen=True)
class Decomposition:
    """A representation ``f = sum coefficient * product of basis vectors``."""

    nvars: int
    terms: tuple[ProductTerm, ...]

    def expand(self) -> Polynomial:
        out: dict = {}
        for t in self.terms:
            mono = [0] * self.nvars
            for j in t.factors:
                mono[j - 1] += 1
            mono = tuple(mono)
            out[mono] = out.get(mono, 0) + t.coefficient
        return Polynomial(self.nvars, out)

    def cost(self, rho: SeminormSpec):
        """``sum |c| * rho(x_j1) * ... * rho(x_jk)``, the bound this decomposition certifies."""
        basis = [seminorm_eval(rho, Polynomial.variable(j, self.nvars)) for j in range(1, self.nvars + 1)]
        total = Fraction(0)
        for t in self.terms:
            term = abs(t.coefficient)
            for j in t.factors:
                term = term * basis[j - 1]
            total = total + term
        return total

    def to_json(self) -> list:
        return [
            {"coef": str(t.coefficient), "factors": list(t.factors)} for t in self.terms
        ]


def monomial_decomposition(f: Polynomial) -> Decomposition:
    terms = []
    for mono, c in f.items():
        factors = tuple(j for j, e in enumerate(mono, start=1) for _ in range(e))
        terms.append(ProductTerm(c, factors))
    return Decomposition(f.nvars, tuple(terms))


def ext_upper_bound(rho: SeminormSpec, f: Polynomial):
    """Upper bound from the monomial decomposition; returns ``(bound, decomposition)``."""
    deco = monomial_decomposition(f)
    return deco.cost(rho), deco


def _project_into_ball(rho: SeminormSpec, point, tol: float):
    dn = dual_norm(rho, point)
    if dn > 1 + tol:
        raise ValueError(f"sample {list(point)} lies outside the unit dual ball (dual norm {dn})")
    if dn > 1:
        if all(is_exact(x) for x in point) and isinstance(dn, Fraction):
            return tuple(Fraction(x) / dn for x in point)
        return tuple(float(x) / float(dn) for x in point)
    return tuple(point)


def ext_lower_bound(rho: SeminormSpec, f: Polynomial, samples, tol: float = BALL_TOL):
    """Largest ``|f(v*)|`` over characters ``v*`` in the unit dual ball.

    Returns ``(bound, point)``.  Points slightly outside the ball (within
    ``tol``) are pulled radially onto it; anything further out is rejected.
    """
    best = None
    best_pt = None
    for raw in samples:
        if len(raw) != f.nvars:
            raise ValueError("sample dimension does not match the polynomial")
        pt = _project_into_ball(rho, raw, tol)
        val = abs(evaluate(f, pt))
        if best is None or val > best:
            best, best_pt = val, pt
    if best is None:
        best_pt = (Fraction(0),) * f.nvars
        best = abs(evaluate(f, best_pt))
    return best, best_pt


@dataclass(frozen=True)
class CertifiedInterval:
    """Enclosure ``lower <= extension(f) <= upper``.

    ``character_value`` is ``|f(lower_witness)|``.  When ``exact`` is false the
    lower end is exactly that value; for l1-type norms the closed form pins
    both ends and the character value is a sampled sanity check below it.
    """

    lower: float | Fraction
    upper: float | Fraction
    lower_witness: tuple
    upper_witness: Decomposition
    character_value: float | Fraction
    exact: bool

    def verify(self, rho: SeminormSpec, f: Polynomial, tol: float = 1e-12) -> bool:
        if self.upper_witness.expand() != f:
            return False
        if self.upper_witness.cost(rho) != self.upper:
            return False
        if dual_norm(rho, self.lower_witness) > 1 + tol:
            return False
        char = abs(evaluate(f, self.lower_witness))
        if abs(char - self.character_value) > tol * max(1, abs(char)):
            return False
        if not self.exact and self.lower != self.character_value:
            return False
        slack = tol * max(1, abs(self.upper))
        return self.character_value <= self.lower + tol * max(1, abs(self.lower)) and self.lower <= self.upper + slack

    def to_json(self) -> dict:
        return {
            "lower": self.lower,
            "upper": self.upper,
            "exact": self.exact,
            "witnesses": {
                "lower_point": list(self.lower_witness),
                "character_value": self.character_value,
                "upper_decomposition": self.upper_witness.to_json(),
            },
        }


def ext_interval(rho: SeminormSpec, f: Polynomial, budget: int = 64, seed: int = 0) -> CertifiedInterval:
    """Certified enclosure of the projective extension of ``rho`` at ``f``."""
    from .spectrum import SpectrumBall, sample_ball

    upper, deco = ext_upper_bound(rho, f)
    samples = sample_ball(SpectrumBall(rho, 1), max(1, budget), seed, n=f.nvars)
    char, point = ext_lower_bound(rho, f, samples)
    if rho.is_l1_type:
        exact = ext_weighted_l1(rho.effective_weights(f.nvars), 1, f)
        return CertifiedInterval(exact, exact, point, deco, char, True)
    return CertifiedInterval(char, upper, point, deco, char, char == upper)


def functoriality_bound(rho: SeminormSpec, vstar: Sequence, f: Polynomial):
    """``|v*(f)|`` next to the bound ``sum_k C^k * ext_k(f_k)`` with ``C = rho'(v*)``.

    Each ``ext_k`` is the decomposition upper bound of the degree-k part, so the
    returned bound is always valid; with ``C <= 1`` it reduces to the statement
    that characters in the unit dual ball are dominated by the extension.
    """
    c = dual_norm(rho, vstar)
    bound = 0
    for k, part in f.graded_parts().items():
        ub, _ = ext_upper_bound(rho, part)
        bound = bound + ub * c**k
    return abs(evaluate(f, vstar)), bound
