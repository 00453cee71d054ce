"""Moment functionals and the atomic measures that represent them.

A :class:`MomentTable` stores a linear functional ``L`` by its values on all
monomials up to a degree bound.  Tables built from atomic measures with
rational atoms and weights are exact (Fractions); everything else is float.

Positivity for ``d = 1`` is the positive semidefiniteness of the moment
matrix (and of localizing matrices for module generators); for ``d >= 2``
only sampled necessary conditions ``L(p^{2d} g) >= 0`` are checked.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

import mpmath
import numpy as np

from ._linalg import ldl_pivots, solve_exact
from .algebra import (
    Polynomial,
    add_monomials,
    as_fraction,
    evaluate,
    format_monomial,
    grlex_key,
    is_exact,
    monomials_of_degree,
    monomials_up_to,
)
from .modules2d import PowerModule
from .seminorm import SeminormSpec, dual_norm, seminorm_eval, weighted_l1

PSD_REL_TOL = 1e-9
DISTINGUISH_TOL = 1e-12
HR_REL_TOL = 1e-12
RECON_TOL = 1e-8


class ReconstructionError(ValueError):
    """The moment table has no atomic representation within the atom budget."""


class IncompleteTableError(ValueError):
    """The table does not reach the degree the check needs."""


def _num(x):
    """Keep exact values exact; anything else becomes a float."""
    return Fraction(x) if is_exact(x) else float(x)


# -- measures ----------------------------------------------------------------

@dataclass(frozen=True)
class AtomicMeasure:
    """Finite positive combination of point masses ``sum w_j delta_{a_j}``."""

    atoms: tuple[tuple[tuple, object], ...]

    def __post_init__(self):
        clean = []
        seen = set()
        dims = set()
        for point, weight in self.atoms:
            pt = tuple(_num(x) for x in point)
            w = _num(weight)
            if not w > 0:
                raise ValueError(f"atom weight {weight!r} must be positive")
            if pt in seen:
                raise ValueError(f"duplicate atom {pt}")
            seen.add(pt)
            dims.add(len(pt))
            clean.append((pt, w))
        if len(dims) > 1:
            raise ValueError("atoms of different dimensions")
        object.__setattr__(self, "atoms", tuple(clean))

    @classmethod
    def from_pairs(cls, pairs) -> "AtomicMeasure":
        return cls(tuple((tuple(p), w) for p, w in pairs))

    @classmethod
    def dirac(cls, point, weight=1) -> "AtomicMeasure":
        return cls(((tuple(point), weight),))

    @property
    def nvars(self) -> int | None:
        return len(self.atoms[0][0]) if self.atoms else None

    @property
    def is_exact(self) -> bool:
        return all(is_exact(w) and all(is_exact(x) for x in p) for p, w in self.atoms)

    def total_mass(self):
        return sum((w for _, w in self.atoms), Fraction(0) if self.is_exact else 0.0)

    def to_json(self) -> dict:
        return {"atoms": [{"point": [_jsonable(x) for x in p], "weight": _jsonable(w)} for p, w in self.atoms]}

    @classmethod
    def from_json(cls, data) -> "AtomicMeasure":
        return cls(tuple(
            (tuple(_parse_number(x) for x in a["point"]), _parse_number(a["weight"]))
            for a in data["atoms"]
        ))


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else x.numerator
    return x


def _parse_number(x):
    if isinstance(x, str):
        return as_fraction(x)
    if isinstance(x, float):
        return x
    return as_fraction(x)


def integrate(mu: AtomicMeasure, f: Polynomial):
    """``sum w_j f(a_j)``; exact when atoms and weights are rational."""
    if mu.atoms and mu.nvars != f.nvars:
        raise ValueError(f"measure lives in R^{mu.nvars}, polynomial in {f.nvars} variables")
    total = Fraction(0) if mu.is_exact else 0.0
    for pt, w in mu.atoms:
        total = total + w * evaluate(f, pt)
    return total


# -- tables ------------------------------------------------------------------

class MomentTable:
    """Values ``L(x^k)`` for every monomial with ``|k| <= max_degree``."""

    def __init__(self, nvars: int, max_degree: int, entries: Mapping):
        self.nvars = nvars
        self.max_degree = max_degree
        self._entries = {tuple(m): _num(v) for m, v in entries.items()}
        missing = [m for m in monomials_up_to(nvars, max_degree) if m not in self._entries]
        if missing:
            raise IncompleteTableError(
                f"table misses {len(missing)} monomials, first {format_monomial(missing[0])}"
            )

    def __eq__(self, other) -> bool:
        if not isinstance(other, MomentTable):
            return NotImplemented
        return (self.nvars, self.max_degree, self._entries) == (other.nvars, other.max_degree, other._entries)

    __hash__ = None

    def __repr__(self) -> str:
        return f"MomentTable(nvars={self.nvars}, max_degree={self.max_degree})"

    @property
    def entries(self) -> dict:
        return dict(self._entries)

    @property
    def is_exact(self) -> bool:
        return all(isinstance(v, Fraction) for v in self._entries.values())

    def __getitem__(self, mono) -> object:
        mono = tuple(mono)
        if sum(mono) > self.max_degree:
            raise IncompleteTableError(f"monomial {format_monomial(mono)} beyond table degree {self.max_degree}")
        return self._entries[mono]

    def __call__(self, f: Polynomial):
        """``L(f)`` by linearity."""
        if f.nvars != self.nvars:
            raise ValueError("dimension mismatch")
        if f.degree > self.max_degree:
            raise IncompleteTableError(f"degree {f.degree} exceeds table degree {self.max_degree}")
        exact = self.is_exact
        total = Fraction(0) if exact else 0.0
        for m, c in f.terms.items():
            total = total + (c if exact else float(c)) * self._entries[m]
        return total

    def unit(self):
        return self._entries[(0,) * self.nvars]

    def scaled(self, c) -> "MomentTable":
        return MomentTable(self.nvars, self.max_degree, {m: c * v for m, v in self._entries.items()})

    def to_json(self) -> dict:
        return {
            "nvars": self.nvars,
            "max_degree": self.max_degree,
            "moments": [
                {"exp": list(m), "value": _jsonable(self._entries[m])}
                for m in monomials_up_to(self.nvars, self.max_degree)
            ],
        }

    @classmethod
    def from_json(cls, data) -> "MomentTable":
        nvars = int(data["nvars"])
        entries = {tuple(int(e) for e in row["exp"]): _parse_number(row["value"]) for row in data["moments"]}
        return cls(nvars, int(data["max_degree"]), entries)

    @classmethod
    def univariate(cls, values: Sequence) -> "MomentTable":
        """Table for n = 1 from the list ``L(1), L(x), L(x^2), ...``."""
        return cls(1, len(values) - 1, {(k,): v for k, v in enumerate(values)})


def table_from_measure(mu: AtomicMeasure, max_degree: int, nvars: int | None = None) -> MomentTable:
    n = mu.nvars or nvars
    if n is None:
        raise ValueError("empty measure: pass nvars")
    exact = mu.is_exact
    entries = {m: (Fraction(0) if exact else 0.0) for m in monomials_up_to(n, max_degree)}
    for pt, w in mu.atoms:
        one = Fraction(1) if exact else 1.0
        powers = []
        for x in pt:
            row = [one]
            for _ in range(max_degree):
                row.append(row[-1] * x)
            powers.append(row)
        for m in entries:
            term = w
            for i, e in enumerate(m):
                if e:
                    term = term * powers[i][e]
            entries[m] = entries[m] + term
    return MomentTable(n, max_degree, entries)


# -- continuity ----------------------------------------------------------------

@dataclass(frozen=True)
class ContinuityReport:
    sup_ratio: object
    per_degree: tuple
    unbounded_trend: bool


def continuity_norm(L: MomentTable, r: Sequence, i=1) -> ContinuityReport:
    """``sup |L(x^k)| / (i r)^k`` over the table, with the per-degree maxima.

    By the weighted l1 closed form of the extension this is the continuity
    constant of ``L`` for the extension of ``i * rho_r`` on the truncated
    algebra.  Per-degree maxima that keep growing flag probable non-continuity.
    """
    w = [as_fraction(i) * as_fraction(x) for x in r]
    if len(w) != L.nvars:
        raise ValueError("weight vector length does not match the table")
    exact = L.is_exact
    per_degree = []
    for k in range(L.max_degree + 1):
        best = Fraction(0) if exact else 0.0
        for m in monomials_of_degree(L.nvars, k):
            denom = Fraction(1)
            for wi, e in zip(w, m):
                denom *= wi**e
            ratio = abs(L[m]) / denom if exact else abs(L[m]) / float(denom)
            if ratio > best:
                best = ratio
        per_degree.append(best)
    tail = per_degree[-4:]
    growing = len(tail) >= 3 and all(b > a for a, b in zip(tail, tail[1:]))
    return ContinuityReport(max(per_degree), tuple(per_degree), growing)


# -- positivity ----------------------------------------------------------------

def moment_matrix(L: MomentTable, t: int, g: Polynomial | None = None) -> np.ndarray:
    """Moment (or localizing, when ``g`` is given) matrix over monomials of degree <= t."""
    basis = monomials_up_to(L.nvars, t)
    size = len(basis)
    out = np.empty((size, size))
    for a in range(size):
        for b in range(a, size):
            mono = add_monomials(basis[a], basis[b])
            if g is None:
                value = L[mono]
            else:
                value = L(Polynomial.monomial(mono) * g)
            out[a, b] = out[b, a] = float(value)
    return out


@dataclass(frozen=True)
class PSDResult:
    name: str
    passed: bool
    min_eigenvalue: float
    tolerance: float
    witness: Polynomial | None = None


@dataclass(frozen=True)
class PositivityVerdict:
    passed: bool
    method: str
    checks: tuple = field(default_factory=tuple)


def _psd(name: str, mat: np.ndarray, basis, nvars: int) -> PSDResult:
    if mat.size == 0:
        return PSDResult(name, True, 0.0, 0.0)
    eig, vec = np.linalg.eigh(mat)
    tol = PSD_REL_TOL * max(float(np.trace(mat)), 0.0)
    passed = bool(eig[0] >= -tol)
    witness = None
    if not passed:
        v = vec[:, 0]
        v = v / np.max(np.abs(v))
        witness = Polynomial(nvars, {m: Fraction(float(c)).limit_denominator(10**6) for m, c in zip(basis, v)})
    return PSDResult(name, passed, float(eig[0]), tol, witness)


def _sample_dictionary(nvars: int, t: int, seed: int, extra: int = 32) -> list[Polynomial]:
    monos = monomials_up_to(nvars, t)
    out = [Polynomial.monomial(m) for m in monos]
    for a in range(len(monos)):
        for b in range(a + 1, len(monos)):
            out.append(Polynomial(nvars, {monos[a]: 1, monos[b]: 1}))
            out.append(Polynomial(nvars, {monos[a]: 1, monos[b]: -1}))
    rng = np.random.default_rng(seed)
    for _ in range(extra):
        coefs = rng.integers(-3, 4, size=len(monos))
        out.append(Polynomial(nvars, {m: int(c) for m, c in zip(monos, coefs)}))
    return [p for p in out if not p.is_zero()]


def _sampled_check(name: str, L: MomentTable, d: int, g: Polynomial, seed: int) -> PSDResult:
    t = (L.max_degree - max(g.degree, 0)) // (2 * d)
    worst, worst_p, worst_tol = None, None, 0.0
    for p in _sample_dictionary(L.nvars, max(t, 0), seed):
        q = p ** (2 * d) * g
        value = float(L(q))
        tol = PSD_REL_TOL * (1.0 + sum(abs(float(c) * float(L[m])) for m, c in q.terms.items()))
        if worst is None or value + tol < worst + worst_tol:
            worst, worst_p, worst_tol = value, p, tol
    passed = worst is None or worst >= -worst_tol
    return PSDResult(name, passed, worst if worst is not None else 0.0, worst_tol,
                     None if passed else worst_p)


def positivity_check(L: MomentTable, d: int = 1, t: int | None = None, seed: int = 0) -> PositivityVerdict:
    """Is ``L(p^{2d}) >= 0``?

    For ``d = 1`` this is decided by the moment matrix over monomials of
    degree ``<= t`` (default ``max_degree // 2``).  For ``d >= 2`` a sampled
    dictionary gives a necessary condition only.
    """
    if d < 1:
        raise ValueError("d must be positive")
    one = Polynomial.constant(1, L.nvars)
    if d == 1:
        t = L.max_degree // 2 if t is None else t
        if 2 * t > L.max_degree:
            raise IncompleteTableError(f"t = {t} needs table degree {2 * t}")
        basis = monomials_up_to(L.nvars, t)
        res = _psd("moment_matrix", moment_matrix(L, t), basis, L.nvars)
        return PositivityVerdict(res.passed, "moment_matrix_psd", (res,))
    res = _sampled_check("sampled_powers", L, d, one, seed)
    return PositivityVerdict(res.passed, "sampled_necessary", (res,))


def m_positivity_check(L: MomentTable, module: PowerModule, t: int | None = None, seed: int = 0) -> PositivityVerdict:
    """Necessary conditions for ``L(M) >= 0``: one localizing check per generator (1 included).

    ``t`` bounds the degree of the products by ``2t``; a generator ``g`` gets
    a localizing matrix over monomials ``p`` with ``deg(p^2 g) <= 2t``.
    """
    if module.nvars != L.nvars:
        raise ValueError("module and table live in different dimensions")
    t = L.max_degree // 2 if t is None else t
    if 2 * t > L.max_degree:
        raise IncompleteTableError(f"t = {t} needs table degree {2 * t}")
    results = []
    for j in range(len(module.generators) + 1):
        g = module.generator(j)
        name = "generator_1" if j == 0 else f"generator_{j + 1}"
        if max(g.degree, 0) > 2 * t:
            raise IncompleteTableError(f"generator {g} has degree beyond 2t = {2 * t}")
        if module.d == 1:
            tj = (2 * t - max(g.degree, 0)) // 2
            basis = monomials_up_to(L.nvars, tj)
            results.append(_psd(name, moment_matrix(L, tj, g), basis, L.nvars))
        else:
            results.append(_sampled_check(name, L, module.d, g, seed))
    method = "localizing_psd" if module.d == 1 else "sampled_necessary"
    return PositivityVerdict(all(r.passed for r in results), method, tuple(results))


# -- Hurwitz-Reznick and m_k ------------------------------------------------------

@dataclass(frozen=True)
class HurwitzReznickReport:
    k: int
    rows: tuple  # (alpha, |L(x^alpha)|, max_i L(x_i^{2k}))
    violations: tuple


def _pure_power(n: int, i: int, e: int) -> tuple:
    return tuple(e if j == i else 0 for j in range(n))


def hurwitz_reznick_check(L: MomentTable, k: int) -> HurwitzReznickReport:
    """Compare ``|L(x^alpha)|`` with ``max_i L(x_i^{2k})`` for every ``|alpha| = 2k``."""
    if k < 1:
        raise ValueError("k must be positive")
    if L.max_degree < 2 * k:
        raise IncompleteTableError(f"need table degree {2 * k}")
    n = L.nvars
    rhs = max(L[_pure_power(n, i, 2 * k)] for i in range(n))
    exact = L.is_exact
    slack = Fraction(1) + Fraction(1, 10**12) if exact else 1.0 + HR_REL_TOL
    rows, bad = [], []
    for alpha in monomials_of_degree(n, 2 * k):
        lhs = abs(L[alpha])
        rows.append((alpha, lhs, rhs))
        if lhs > rhs * slack and lhs > 0:
            bad.append((alpha, lhs, rhs))
    return HurwitzReznickReport(k, tuple(rows), tuple(bad))


@dataclass(frozen=True)
class MkSequence:
    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(float(v) for v in self.values))
        if any(v < 0 or math.isnan(v) for v in self.values):
            raise ValueError("m_k values must be nonnegative")


def mk_sequence(L: MomentTable, K: int, check_positive: bool = True) -> MkSequence:
    """``m_0 = sqrt(L(1))`` and ``m_k = sqrt(max_i L(x_i^{2k}))``.

    The reduction to pure powers relies on positivity of ``L``, which is
    checked first unless ``check_positive`` is False.
    """
    if L.max_degree < 2 * K:
        raise IncompleteTableError(f"need table degree {2 * K}")
    if check_positive and not positivity_check(L, 1, t=K).passed:
        raise ValueError("mk_sequence needs a positive functional")
    n = L.nvars
    values = [math.sqrt(float(L.unit()))]
    for k in range(1, K + 1):
        values.append(math.sqrt(float(max(L[_pure_power(n, i, 2 * k)] for i in range(n)))))
    return MkSequence(tuple(values))


def basis_e_set(rho: SeminormSpec, n: int) -> tuple[Polynomial, ...]:
    """The set E: basis vectors rescaled onto the unit sphere of ``rho``."""
    out = []
    for i in range(1, n + 1):
        x = Polynomial.variable(i, n)
        out.append(x * (1 / as_fraction(seminorm_eval(rho, x))))
    return tuple(out)


def mk_products(L: MomentTable, K: int, rho: SeminormSpec | None = None) -> MkSequence:
    """Unreduced ``m_k``: sup of ``|L(f_1 ... f_2k)|`` over ``f_i`` in E, taken exactly.

    Products of elements of E are rescaled monomials, so the sup is a max
    over the degree-2k part of the table.
    """
    if L.max_degree < 2 * K:
        raise IncompleteTableError(f"need table degree {2 * K}")
    n = L.nvars
    rho = rho or weighted_l1([1] * n)
    scale = [as_fraction(seminorm_eval(rho, Polynomial.variable(i, n))) for i in range(1, n + 1)]
    values = [math.sqrt(abs(float(L.unit())))]
    for k in range(1, K + 1):
        best = 0.0
        for alpha in monomials_of_degree(n, 2 * k):
            denom = math.prod(float(s) ** e for s, e in zip(scale, alpha))
            best = max(best, abs(float(L[alpha])) / denom)
        values.append(math.sqrt(best))
    return MkSequence(tuple(values))


@dataclass(frozen=True)
class StrongQuasiAnalyticity:
    constant: object
    mk: MkSequence
    bounded: bool


def strong_quasi_analyticity(L: MomentTable, r: Sequence, i=1, K: int | None = None) -> StrongQuasiAnalyticity:
    """Continuity bound on products of unit vectors.

    If ``|L(f)| <= C * ext(f)`` for the extension of ``i * rho_r``, then every
    product ``f_1 ... f_2k`` of ``(i rho_r)``-unit vectors has ``|L| <= C``, so
    the unreduced ``m_k`` stay below ``sqrt(C)``.
    """
    K = L.max_degree // 2 if K is None else K
    C = continuity_norm(L, r, i).sup_ratio
    mk = mk_products(L, K, weighted_l1(r, scale=i))
    bound = math.sqrt(float(C)) * (1 + 1e-12)
    return StrongQuasiAnalyticity(C, mk, all(v <= bound for v in mk.values[1:]))


@dataclass(frozen=True)
class QuasiAnalyticity:
    verdict: str  # "quasi_analytic" | "not_quasi_analytic" | "inconclusive"
    growth_exponent: float
    partial_sums: tuple
    regularized: tuple
    note: str = ""


BOUNDED_SLOPE = 0.2
SUPERLINEAR_SLOPE = 1.2


def _log_convex_minorant(logs: list[float]) -> list[float]:
    """Largest convex minorant of ``k -> logs[k]`` (lower hull, interpolated)."""
    hull: list[int] = []
    for k in range(len(logs)):
        while len(hull) >= 2:
            a, b = hull[-2], hull[-1]
            # drop b if it lies on or above the chord a -> k
            if (logs[b] - logs[a]) * (k - a) >= (logs[k] - logs[a]) * (b - a):
                hull.pop()
            else:
                break
        hull.append(k)
    out = []
    for seg in zip(hull, hull[1:]):
        a, b = seg
        for k in range(a, b):
            out.append(logs[a] + (logs[b] - logs[a]) * (k - a) / (b - a))
    out.append(logs[hull[-1]])
    return out


def quasi_analytic_classify(m: MkSequence) -> QuasiAnalyticity:
    """Heuristic Denjoy-Carleman classification of the class C{m_k}.

    The sequence is replaced by its log-convex minorant; the growth exponent
    is the slope of ``log m_k^{1/k}`` against ``log k`` over the upper half of
    the indices.  Bounded ``m_k^{1/k}`` means the series ``sum m_k^{-1/k}``
    diverges (quasi-analytic); growth faster than ``k`` means it converges.
    Anything in between is reported as inconclusive.
    """
    vals = m.values
    K = len(vals) - 1
    if K < 8:
        raise ValueError("need at least m_0..m_8")
    if any(v == 0 for v in vals[1:]):
        return QuasiAnalyticity("quasi_analytic", 0.0, (), tuple(vals),
                                "zero m_k gives an infinite term m_k^(-1/k)")
    logs = [math.log(v) if v > 0 else -745.0 for v in vals]
    reg = _log_convex_minorant(logs)
    terms = [math.exp(-reg[k] / k) for k in range(1, K + 1)]
    partial = tuple(float(s) for s in np.cumsum(terms))
    ks = np.arange(max(1, K // 2), K + 1)
    log_roots = np.array([reg[k] / k for k in ks])  # log m_k^{1/k}
    slope = float(np.polyfit(np.log(ks), log_roots, 1)[0])
    if slope < BOUNDED_SLOPE:
        verdict = "quasi_analytic"
    elif slope > SUPERLINEAR_SLOPE:
        verdict = "not_quasi_analytic"
    else:
        verdict = "inconclusive"
    return QuasiAnalyticity(verdict, slope, partial, tuple(math.exp(x) for x in reg))


# -- support ---------------------------------------------------------------------

def support_radius(mu: AtomicMeasure, r: Sequence):
    """Smallest ``i`` with every atom in the ball ``B_i(rho_r')``."""
    rho = weighted_l1(r)
    zero = Fraction(0) if mu.is_exact else 0.0
    return max((dual_norm(rho, pt) for pt, _ in mu.atoms), default=zero)


@dataclass(frozen=True)
class RadiusEstimate:
    estimate: float
    root_estimate: float
    node_estimate: float


def support_radius_estimate(L: MomentTable, r: Sequence, degree: int | None = None) -> RadiusEstimate:
    """Lower estimate of the support radius from moments alone.

    Two lower bounds are combined: the root test
    ``max_k (|L(x^k)| / (L(1) r^k))^(1/|k|)`` and, coordinate by coordinate,
    the largest Gauss node of the marginal moment sequence (Gauss nodes lie
    inside the convex hull of the support).  The second is exact for finitely
    atomic marginals once the table degree reaches twice the number of atoms.
    """
    D = L.max_degree if degree is None else min(degree, L.max_degree)
    w = [as_fraction(x) for x in r]
    unit = float(L.unit())
    if unit <= 0:
        return RadiusEstimate(0.0, 0.0, 0.0)
    root = 0.0
    for k in range(1, D + 1):
        for m in monomials_of_degree(L.nvars, k):
            denom = math.prod(float(wi) ** e for wi, e in zip(w, m))
            val = abs(float(L[m])) / (unit * denom)
            if val > 0:
                root = max(root, val ** (1.0 / k))
    node = 0.0
    for i in range(L.nvars):
        seq = [L[_pure_power(L.nvars, i, e)] for e in range(D + 1)]
        try:
            nodes, _, _ = _univariate_nodes(seq, D // 2, allow_gauss=True)
        except ReconstructionError:
            continue
        if nodes:
            node = max(node, max(abs(float(x)) for x in nodes) / float(w[i]))
    return RadiusEstimate(max(root, node), root, node)


# -- univariate reconstruction ---------------------------------------------------

def _hankel(seq, size):
    return [[seq[i + j] for j in range(size)] for i in range(size)]


def _poly_roots(coeffs_ascending, dps=80):
    with mpmath.workdps(dps):
        desc = [mpmath.mpf(c.numerator) / c.denominator if isinstance(c, Fraction) else mpmath.mpf(c)
                for c in reversed(coeffs_ascending)]
        roots = mpmath.polyroots(desc, maxsteps=400, extraprec=4 * dps)
        out = []
        for z in roots:
            z = mpmath.mpc(z)
            if abs(z.imag) > mpmath.mpf(10) ** (-dps // 3) * (1 + abs(z.real)):
                raise ReconstructionError("orthogonal polynomial has non-real roots")
            out.append(z.real)
        return sorted(out)


def _exact_nodes(seq: list[Fraction], max_atoms: int, allow_gauss: bool):
    N = min(max_atoms, (len(seq) - 1) // 2)
    pivots = ldl_pivots(_hankel(seq, N + 1))
    rank = None
    for s, piv in enumerate(pivots):
        if piv < 0:
            raise ReconstructionError("moment matrix is not positive semidefinite")
        if piv == 0:
            rank = s
            break
    singular = rank is not None
    if not singular:
        if not allow_gauss:
            raise ReconstructionError(f"no atomic representation with at most {max_atoms} atoms")
        # positive definite throughout: Gauss nodes of the largest rule the table supports
        rank = min(len(pivots), (len(seq)) // 2)
    if rank == 0:
        return [], [], True
    coeffs = solve_exact(_hankel(seq, rank), [-seq[rank + j] for j in range(rank)])
    poly = coeffs + [Fraction(1)]
    roots = _poly_roots(poly)
    exact_roots = []
    for z in roots:
        q = Fraction(mpmath.nstr(z, 40)).limit_denominator(10**12)
        if sum(c * q**j for j, c in enumerate(poly)) != 0:
            exact_roots = None
            break
        exact_roots.append(q)
    if exact_roots is not None:
        vander = [[q**j for q in exact_roots] for j in range(rank)]
        weights = solve_exact(vander, seq[:rank])
        return exact_roots, weights, singular
    with mpmath.workdps(80):
        vander = mpmath.matrix([[z**j for z in roots] for j in range(rank)])
        rhs = mpmath.matrix([mpmath.mpf(c.numerator) / c.denominator for c in seq[:rank]])
        wts = mpmath.lu_solve(vander, rhs)
        return [float(z) for z in roots], [float(wts[j]) for j in range(rank)], singular


def _float_nodes(seq: list[float], max_atoms: int, allow_gauss: bool, rel_tol: float = 1e-10):
    m = np.array(seq, dtype=float)
    if m[0] <= 0:
        return [], [], True
    scale = max([(abs(m[k]) / m[0]) ** (1.0 / k) for k in range(1, len(m)) if m[k] != 0] or [1.0])
    mm = m / scale ** np.arange(len(m))
    N = min(max_atoms, (len(m) - 1) // 2)
    rank = None
    for s in range(1, N + 1):
        eig = np.linalg.eigvalsh(np.array(_hankel(mm, s + 1)))
        if eig[0] < -rel_tol * eig[-1]:
            raise ReconstructionError("moment matrix is not positive semidefinite")
        if eig[0] <= rel_tol * eig[-1]:
            rank = s
            break
    singular = rank is not None
    if not singular:
        if not allow_gauss:
            raise ReconstructionError(f"no atomic representation with at most {max_atoms} atoms")
        rank = min(N + 1, len(m) // 2)
    coeffs = np.linalg.solve(np.array(_hankel(mm, rank)), -mm[rank:2 * rank])
    roots = np.roots(np.concatenate(([1.0], coeffs[::-1])))
    if np.max(np.abs(roots.imag), initial=0.0) > 1e-7:
        raise ReconstructionError("orthogonal polynomial has non-real roots")
    roots = np.sort(roots.real)
    vander = np.vander(roots, rank, increasing=True).T
    weights = np.linalg.solve(vander, mm[:rank])
    return [float(z * scale) for z in roots], [float(w) for w in weights], singular


def _univariate_nodes(seq, max_atoms: int, allow_gauss: bool = False):
    if all(isinstance(v, Fraction) for v in seq):
        return _exact_nodes(list(seq), max_atoms, allow_gauss)
    return _float_nodes([float(v) for v in seq], max_atoms, allow_gauss)


def reconstruct_univariate(L: MomentTable, max_atoms: int) -> AtomicMeasure:
    """Recover a finitely atomic measure on R from its moments.

    The smallest singular Hankel block fixes the number of atoms ``r``; the
    atoms are the roots of the degree-r orthogonal polynomial and the weights
    solve a Vandermonde system.  Exact tables are processed in rational
    arithmetic (roots refined at high precision).  The result is re-integrated
    and compared with the whole table before being returned.
    """
    if L.nvars != 1:
        raise ValueError("reconstruction is univariate only")
    if L.max_degree < 2 * max_atoms and L.max_degree < 2:
        raise IncompleteTableError("table too short for any reconstruction")
    if not positivity_check(L, 1).passed:
        raise ReconstructionError("functional is not positive")
    seq = [L[(k,)] for k in range(L.max_degree + 1)]
    nodes, weights, _ = _univariate_nodes(seq, max_atoms)
    if any(w <= 0 for w in weights):
        raise ReconstructionError("recovered weights are not positive")
    mu = AtomicMeasure(tuple(((x,), w) for x, w in zip(nodes, weights)))
    check = table_from_measure(mu, L.max_degree, nvars=1)
    for k in range(L.max_degree + 1):
        a, b = float(check[(k,)]), float(L[(k,)])
        if abs(a - b) > RECON_TOL * max(1.0, abs(b)):
            raise ReconstructionError(
                f"recovered measure misses moment {k}: {a} vs {b}; no atomic representation within budget"
            )
    return mu


# -- determinacy evidence --------------------------------------------------------------

@dataclass(frozen=True)
class Distinction:
    monomial: tuple
    value1: object
    value2: object


def distinguish_measures(mu1: AtomicMeasure, mu2: AtomicMeasure, max_degree: int,
                         tol: float = DISTINGUISH_TOL) -> Distinction | None:
    """First monomial (graded lex) on which the two measures integrate differently."""
    n = mu1.nvars or mu2.nvars
    if mu1.nvars and mu2.nvars and mu1.nvars != mu2.nvars:
        raise ValueError("measures live in different dimensions")
    exact = mu1.is_exact and mu2.is_exact
    for mono in monomials_up_to(n, max_degree):
        f = Polynomial.monomial(mono)
        a, b = integrate(mu1, f), integrate(mu2, f)
        differ = a != b if exact else abs(a - b) > tol * max(1.0, abs(a), abs(b))
        if differ:
            return Distinction(mono, a, b)
    return None
