"""2d-power modules, their positivity sets, and exact membership certificates.

A module generated by ``g_1..g_s`` is ``sum A^{2d} + sum A^{2d} g_1 + ...``.
Membership of a target ``a`` is searched over a fixed dictionary of
polynomials ``p`` (monomials of degree <= t and signed binomials ``m1 +- m2``)
as a nonnegative linear combination ``a = sum c * p^{2d} * g_j``.  The
floating LP solution is turned into exact rationals and re-expanded; anything
that fails the exact check is reported as not found.  The search is sound but
incomplete: ``NotFound`` is never a proof of non-membership.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np
from scipy.optimize import linprog

from .algebra import (
    Polynomial,
    as_fraction,
    evaluate,
    grlex_key,
    is_exact,
    monomials_up_to,
)
from ._linalg import solve_exact
from .spectrum import SpectrumBall, spectrum_contains

log = logging.getLogger(__name__)

MAX_COLUMNS = 200_000
FLOAT_TOL = 1e-12


class SearchBudgetError(MemoryError):
    """The certificate dictionary for the requested budget is too large."""


@dataclass(frozen=True)
class PowerModule:
    d: int
    generators: tuple[Polynomial, ...] = ()
    nvars: int | None = None

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("d must be a positive integer")
        gens = tuple(self.generators)
        object.__setattr__(self, "generators", gens)
        dims = {g.nvars for g in gens}
        if self.nvars is not None:
            dims.add(self.nvars)
        if len(dims) > 1:
            raise ValueError("generators live in different numbers of variables")
        if not dims:
            raise ValueError("nvars is required when there are no generators")
        object.__setattr__(self, "nvars", dims.pop())

    def generator(self, j: int) -> Polynomial:
        """``j = 0`` is the implicit generator 1."""
        return Polynomial.constant(1, self.nvars) if j == 0 else self.generators[j - 1]

    def to_json(self) -> dict:
        return {"d": self.d, "nvars": self.nvars, "generators": [g.to_json() for g in self.generators]}

    @classmethod
    def from_json(cls, data) -> "PowerModule":
        gens = tuple(Polynomial.from_json(g) for g in data.get("generators", []))
        return cls(int(data["d"]), gens, data.get("nvars"))


@dataclass(frozen=True)
class CertificateTerm:
    coefficient: Fraction
    p: Polynomial
    generator: int


@dataclass(frozen=True)
class Certificate:
    """Exact identity ``target = sum c * p^{2d} * g_j`` with every ``c >= 0``."""

    module: PowerModule
    target: Polynomial
    terms: tuple[CertificateTerm, ...]

    def expand(self) -> Polynomial:
        total = Polynomial(self.module.nvars)
        for t in self.terms:
            total = total + t.coefficient * t.p ** (2 * self.module.d) * self.module.generator(t.generator)
        return total

    def verify(self) -> bool:
        return all(t.coefficient >= 0 for t in self.terms) and self.expand() == self.target

    def max_term_degree(self) -> int:
        return max(
            (2 * self.module.d * t.p.degree + max(self.module.generator(t.generator).degree, 0) for t in self.terms),
            default=0,
        )

    def with_added_constant(self, delta) -> "Certificate":
        """Certificate for ``target + delta`` (``delta >= 0``) using the term ``delta * 1^{2d} * 1``."""
        delta = as_fraction(delta)
        if delta < 0:
            raise ValueError("only nonnegative constants can be added")
        one = Polynomial.constant(1, self.module.nvars)
        terms = list(self.terms)
        if delta:
            terms.append(CertificateTerm(delta, one, 0))
        return Certificate(self.module, self.target + delta, _canonical(terms))

    def to_json(self) -> dict:
        return {
            "found": True,
            "d": self.module.d,
            "target": self.target.to_json(),
            "terms": [
                {"coef": str(t.coefficient), "p": t.p.to_json(), "generator": t.generator}
                for t in self.terms
            ],
        }


@dataclass(frozen=True)
class NotFound:
    """No certificate within the budget.  ``witness`` (if any) is a rational
    point of X_M where the target is negative, which does prove non-membership."""

    budget: int
    reason: str
    witness: tuple | None = None
    witness_value: Fraction | None = None

    def __bool__(self) -> bool:
        return False

    def to_json(self) -> dict:
        out = {"found": False, "budget": self.budget, "reason": self.reason}
        if self.witness is not None:
            out["witness"] = [str(x) for x in self.witness]
            out["witness_value"] = str(self.witness_value)
        return out


def _term_key(t: CertificateTerm):
    return (t.generator, [(grlex_key(m), c) for m, c in t.p.items()], t.coefficient)


def _canonical(terms) -> tuple[CertificateTerm, ...]:
    merged: dict = {}
    for t in terms:
        key = (t.p, t.generator)
        merged[key] = merged.get(key, Fraction(0)) + t.coefficient
    out = [CertificateTerm(c, p, j) for (p, j), c in merged.items() if c != 0]
    return tuple(sorted(out, key=_term_key))


def xm_contains(module: PowerModule, vstar: Sequence, tol: float = FLOAT_TOL) -> bool:
    """Is ``vstar`` in the positivity set X_M (every generator >= 0 there)?"""
    exact = all(is_exact(x) for x in vstar)
    for g in module.generators:
        value = evaluate(g, vstar)
        if (value < 0) if exact else (value < -tol):
            return False
    return True


def dictionary(nvars: int, t: int) -> list[Polynomial]:
    """Monomials of degree <= t followed by the signed binomials ``m1 +- m2``."""
    monos = monomials_up_to(nvars, t)
    out = [Polynomial.monomial(m) for m in monos]
    for m1, m2 in itertools.combinations(monos, 2):
        out.append(Polynomial(nvars, {m1: 1, m2: 1}))
        out.append(Polynomial(nvars, {m1: 1, m2: -1}))
    return out


def _columns(module: PowerModule, t: int):
    nvars = module.nvars
    n_monos = len(monomials_up_to(nvars, t))
    n_cols = (n_monos * n_monos) * (len(module.generators) + 1)
    if n_cols > MAX_COLUMNS:
        raise SearchBudgetError(f"budget t={t} needs {n_cols} columns (limit {MAX_COLUMNS})")
    cols = []
    for p in dictionary(nvars, t):
        power = p ** (2 * module.d)
        for j in range(len(module.generators) + 1):
            cols.append((p, j, power * module.generator(j)))
    return cols


def _exact_solve(columns: list[Polynomial], target: Polynomial, guess: list[Fraction]):
    """Solve ``sum c_k columns[k] = target`` over Q, pinning free variables to ``guess``."""
    rows = sorted({m for col in columns for m in col.terms} | set(target.terms), key=grlex_key)
    mat = [[col.coefficient(m) for col in columns] for m in rows]
    return solve_exact(mat, [target.coefficient(m) for m in rows], guess)


def _rationalize(module, target, cols, x) -> Certificate | None:
    support = [k for k, v in enumerate(x) if v > 1e-10]
    # continued-fraction rounding first, then an exact solve on the support
    for denom in (1, 10, 100, 1000, 10**4, 10**6, 10**9):
        terms = []
        for k in support:
            c = Fraction(float(x[k])).limit_denominator(denom)
            if c > 0:
                p, j, _ = cols[k]
                terms.append(CertificateTerm(c, p, j))
        cert = Certificate(module, target, _canonical(terms))
        if cert.verify():
            return cert
    sub = [cols[k][2] for k in support]
    guess = [Fraction(float(x[k])).limit_denominator(10**6) for k in support]
    sol = _exact_solve(sub, target, guess)
    if sol is None or any(c < 0 for c in sol):
        return None
    terms = [CertificateTerm(c, cols[k][0], cols[k][1]) for c, k in zip(sol, support) if c > 0]
    cert = Certificate(module, target, _canonical(terms))
    return cert if cert.verify() else None


def negativity_witness(module: PowerModule, a: Polynomial, seed: int = 0, count: int = 400):
    """Search rational points of X_M where ``a < 0``; returns ``(point, value)`` or None."""
    n = module.nvars
    candidates = [(Fraction(0),) * n]
    grid = [Fraction(k, 2) for k in range(-4, 5)]
    if n <= 3:
        candidates.extend(itertools.product(grid, repeat=n))
    else:
        for i in range(n):
            for v in grid:
                candidates.append(tuple(v if j == i else Fraction(0) for j in range(n)))
    rng = np.random.default_rng(seed)
    for row in rng.integers(-40, 41, size=(count, n)):
        candidates.append(tuple(Fraction(int(v), 8) for v in row))
    best = None
    for pt in candidates:
        if not xm_contains(module, pt):
            continue
        value = evaluate(a, pt)
        if value < 0 and (best is None or value < best[1]):
            best = (tuple(pt), value)
    return best


def certificate_search(module: PowerModule, a: Polynomial, t: int, seed: int = 0):
    """Find an exact certificate that ``a`` lies in ``module`` using ``p`` of degree <= t.

    Returns a :class:`Certificate` or :class:`NotFound`.
    """
    if t < 0:
        raise ValueError("degree budget must be nonnegative")
    if a.nvars != module.nvars:
        raise ValueError("target and module live in different numbers of variables")
    cols = _columns(module, t)
    rows = sorted({m for _, _, col in cols for m in col.terms} | set(a.terms), key=grlex_key)
    index = {m: i for i, m in enumerate(rows)}
    A = np.zeros((len(rows), len(cols)))
    for k, (_, _, col) in enumerate(cols):
        for m, c in col.terms.items():
            A[index[m], k] = float(c)
    b = np.zeros(len(rows))
    for m, c in a.terms.items():
        b[index[m]] = float(c)
    scale = np.maximum(np.abs(A).max(axis=1), 1.0)
    # prefer low-degree terms: keeps certificates short and deterministic
    cost = np.array([1.0 + max(col.degree, 0) for _, _, col in cols])
    res = linprog(
        cost,
        A_eq=A / scale[:, None],
        b_eq=b / scale,
        bounds=(0, None),
        method="highs-ds",
    )
    if res.status == 0:
        cert = _rationalize(module, a, cols, res.x)
        if cert is not None:
            return cert
        reason = "floating solution did not survive exact re-verification"
    else:
        reason = "no nonnegative combination over the dictionary"
    log.debug("certificate search failed at t=%d: %s", t, reason)
    wit = negativity_witness(module, a, seed)
    if wit is not None:
        return NotFound(t, reason, wit[0], wit[1])
    return NotFound(t, reason)


def jacobi_epsilon_check(module: PowerModule, a: Polynomial, epsilon, t: int, seed: int = 0):
    """Search a certificate for ``a + epsilon``."""
    eps = as_fraction(epsilon)
    if eps <= 0:
        raise ValueError("epsilon must be positive")
    return certificate_search(module, a + eps, t, seed)


@dataclass(frozen=True)
class SpectrumPositivity:
    min_value: object
    argmin: tuple | None
    points_used: int
    disproof: bool


def pos_on_spectrum(a: Polynomial, module: PowerModule, ball: SpectrumBall, samples) -> SpectrumPositivity:
    """Minimum of ``a`` over the sample points lying in both X_M and the ball.

    A negative minimum at a rational point disproves ``a >= 0`` on
    ``X_M ∩ ball``; a nonnegative minimum is only consistent with it.
    """
    best, arg, used = None, None, 0
    for pt in samples:
        if not spectrum_contains(ball, pt) or not xm_contains(module, pt):
            continue
        used += 1
        value = evaluate(a, pt)
        if best is None or value < best:
            best, arg = value, tuple(pt)
    disproof = best is not None and best < 0 and all(is_exact(x) for x in arg)
    return SpectrumPositivity(best, arg, used, disproof)


@dataclass(frozen=True)
class ArchimedeanWitness:
    k: int
    certificate: Certificate
    heuristic: bool = field(default=False)


def archimedean_witness(module: PowerModule, t: int, max_k: int = 2**10):
    """Smallest integer ``k`` (within budget) with ``k - sum x_i^{2d}`` certified in ``module``.

    For ``d = 1`` this proves the module archimedean.  For ``d > 1`` the result
    is flagged heuristic.
    """
    n = module.nvars
    radial = sum((Polynomial.variable(i, n) ** (2 * module.d) for i in range(1, n + 1)), Polynomial(n))

    def attempt(k):
        return certificate_search(module, Polynomial.constant(k, n) - radial, t)

    lo, k = 0, 1
    found = None
    while k <= max_k:
        found = attempt(k)
        if found:
            break
        lo, k = k, 2 * k
    if not found:
        return NotFound(t, f"no k <= {max_k} certified")
    hi, best = k, found
    while hi - lo > 1:
        mid = (lo + hi) // 2
        cert = attempt(mid)
        if cert:
            hi, best = mid, cert
        else:
            lo = mid
    return ArchimedeanWitness(hi, best, heuristic=module.d > 1)
