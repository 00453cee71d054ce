"""Named, seeded acceptance checks and the suite runner.

Every check is a function ``(params, seed) -> CheckResult``.  Randomness comes
only from ``random.Random(seed)`` (rational data) and
``numpy.random.default_rng(seed)`` (floating data), so a check is a pure
function of its parameters and seed.

Config format::

    {"checks": [{"name": "jacobi_epsilon", "seed": 3, "params": {...}}, ...]}
    {"groups": ["moments"]}

An empty config runs every check with its default seed.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import numpy as np

from .algebra import Polynomial, evaluate, monomials_up_to
from .extension import ext_interval, ext_lower_bound, ext_upper_bound, ext_weighted_l1
from .hilbert_scale import quasi_nuclear_embedding
from .io import InputError, Report
from .modules2d import PowerModule, certificate_search, jacobi_epsilon_check, xm_contains
from .moments import (
    AtomicMeasure,
    MkSequence,
    ReconstructionError,
    continuity_norm,
    hurwitz_reznick_check,
    positivity_check,
    quasi_analytic_classify,
    reconstruct_univariate,
    support_radius,
    support_radius_estimate,
    table_from_measure,
)
from .seminorm import dominates, dual_norm, lp, weighted_l1
from .spectrum import SpectrumBall, sample_ball, spectrum_contains


@dataclass
class CheckResult:
    passed: bool
    value: object = None
    tolerance: object = None
    witnesses: dict = field(default_factory=dict)


@dataclass(frozen=True)
class CheckSpec:
    name: str
    group: str
    func: Callable[[dict, int], CheckResult]
    defaults: dict
    seed: int = 0


# -- random data -------------------------------------------------------------------

def random_rational(rng: random.Random, num: int = 20, den: int = 10, nonzero: bool = False) -> Fraction:
    while True:
        q = Fraction(rng.randint(-num, num), rng.randint(1, den))
        if q or not nonzero:
            return q


def random_polynomial(rng: random.Random, nvars: int, max_degree: int, max_terms: int = 8,
                      nonnegative: bool = False) -> Polynomial:
    monos = monomials_up_to(nvars, max_degree)
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        c = random_rational(rng, nonzero=True)
        terms[rng.choice(monos)] = abs(c) if nonnegative else c
    return Polynomial(nvars, terms)


def random_weights(rng: random.Random, n: int) -> list[Fraction]:
    return [Fraction(rng.randint(1, 12), rng.randint(1, 6)) for _ in range(n)]


def random_measure(rng: random.Random, nvars: int, max_atoms: int, box, den: int = 10) -> AtomicMeasure:
    """Distinct rational atoms in the box ``prod [-b_i, b_i]``, positive rational weights."""
    atoms = {}
    for _ in range(rng.randint(1, max_atoms)):
        pt = tuple(_in_interval(rng, Fraction(b), den) for b in box)
        atoms[pt] = Fraction(rng.randint(1, 9), rng.randint(1, 9))
    return AtomicMeasure(tuple(atoms.items()))


def _in_interval(rng: random.Random, b: Fraction, den: int) -> Fraction:
    # rational in [-b, b]; the endpoints are hit on purpose now and then
    u = rng.random()
    if u < 0.1:
        return b
    if u < 0.2:
        return -b
    return b * Fraction(rng.randint(-den, den), den)


def _normalized(mu: AtomicMeasure) -> AtomicMeasure:
    total = mu.total_mass()
    return AtomicMeasure(tuple((p, w / total) for p, w in mu.atoms))


# -- the checks ----------------------------------------------------------------------

def _direct_formula(r, f: Polynomial) -> Fraction:
    # written against the JSON form on purpose: no shared code with the library path
    total = Fraction(0)
    for term in f.to_json()["terms"]:
        weight = Fraction(1)
        for ri, e in zip(r, term["exp"]):
            weight *= Fraction(ri) ** e
        total += abs(Fraction(term["coef"])) * weight
    return total


def check_closed_form_extension(params: dict, seed: int) -> CheckResult:
    rng = random.Random(seed)
    mismatches = []
    for trial in range(params["count"]):
        n = rng.randint(1, params["max_nvars"])
        r = random_weights(rng, n)
        scale = rng.randint(1, 3)
        f = random_polynomial(rng, n, params["max_degree"])
        got = ext_weighted_l1(r, scale, f)
        want = _direct_formula([scale * x for x in r], f)
        if got != want:
            mismatches.append({"trial": trial, "got": got, "want": want})
    return CheckResult(not mismatches, len(mismatches), 0, {"mismatches": mismatches[:3]})


def check_submultiplicativity(params: dict, seed: int) -> CheckResult:
    rng = random.Random(seed)
    bad = []
    for trial in range(params["count"] + params["equality_count"]):
        nonneg = trial >= params["count"]
        n = rng.randint(1, params["max_nvars"])
        r = random_weights(rng, n)
        f = random_polynomial(rng, n, params["max_degree"], nonnegative=nonneg)
        g = random_polynomial(rng, n, params["max_degree"], nonnegative=nonneg)
        lhs = ext_weighted_l1(r, 1, f * g)
        rhs = ext_weighted_l1(r, 1, f) * ext_weighted_l1(r, 1, g)
        if lhs > rhs or (nonneg and lhs != rhs):
            bad.append({"trial": trial, "lhs": lhs, "rhs": rhs, "equality_expected": nonneg})
    return CheckResult(not bad, len(bad), 0, {"failures": bad[:3]})


def check_spectrum_dual_ball(params: dict, seed: int) -> CheckResult:
    rng = random.Random(seed)
    tol = params["tol"]
    bad = []
    for trial in range(params["count"]):
        n = rng.randint(1, params["max_nvars"])
        if rng.random() < 0.5:
            rho = weighted_l1(random_weights(rng, n))
        else:
            rho = lp(rng.choice([1, 1.5, 2, 3, 4]), nvars=n)
        points = sample_ball(SpectrumBall(rho, 1), 24, seed=rng.randint(0, 2**31), n=n)
        vstar = points[rng.randrange(len(points))]
        if dual_norm(rho, vstar) > 1 + 1e-12:
            bad.append({"trial": trial, "reason": "sample outside the ball"})
            continue
        f = random_polynomial(rng, n, params["max_degree"])
        upper, _ = ext_upper_bound(rho, f)
        value = abs(evaluate(f, vstar))
        if float(value) > float(upper) + tol * max(1.0, float(upper)):
            bad.append({"trial": trial, "value": value, "upper": upper})
    # sharpness on nonnegative coefficients: the all-plus vertex attains the closed form
    for trial in range(params["vertex_count"]):
        n = rng.randint(1, params["max_nvars"])
        r = random_weights(rng, n)
        rho = weighted_l1(r)
        f = random_polynomial(rng, n, params["max_degree"], nonnegative=True)
        vertices = sample_ball(SpectrumBall(rho, 1), 2**n, seed=trial, n=n)
        lower, _ = ext_lower_bound(rho, f, vertices)
        closed = ext_weighted_l1(r, 1, f)
        if lower != closed:
            bad.append({"trial": trial, "vertex_lower": lower, "closed_form": closed})
    return CheckResult(not bad, len(bad), tol, {"failures": bad[:3]})


def check_lp_ball_membership(params: dict, seed: int) -> CheckResult:
    rng = random.Random(seed)
    bad = []
    den = params["denominator"]
    boundary = [(Fraction(3, 5), Fraction(4, 5)), (Fraction(0), Fraction(-1)), (Fraction(-5, 13), Fraction(12, 13)),
                (Fraction(8, 17), Fraction(-15, 17))]
    for p in (1, 2):
        ball = SpectrumBall(lp(p), 1)
        for trial in range(params["count"]):
            if p == 2 and trial < len(boundary):
                v = boundary[trial]
            else:
                n = rng.randint(1, params["max_nvars"])
                v = tuple(Fraction(rng.randint(-3 * den // 2, 3 * den // 2), den) for _ in range(n))
            # p = 1 has dual ball [-1,1]^n; p = 2 is the Euclidean ball (exact oracle on squares)
            oracle = max(abs(x) for x in v) <= 1 if p == 1 else sum(x * x for x in v) <= 1
            if spectrum_contains(ball, v) != oracle:
                bad.append({"p": p, "point": list(v), "oracle": oracle})
    return CheckResult(not bad, len(bad), params["tol"], {"disagreements": bad[:3]})


def check_dominance_non_inheritance(params: dict, seed: int) -> CheckResult:
    rng = random.Random(seed)
    rho_r, rho_s = weighted_l1([1]), weighted_l1([2])
    dom = dominates(rho_r, rho_s)
    K = params["max_power"]
    ratios = []
    for k in range(1, K + 1):
        xk = Polynomial.monomial((k,))
        ratios.append(ext_weighted_l1([2], 1, xk) / ext_weighted_l1([1], 1, xk))
    ratios_ok = all(q == 2**k for k, q in enumerate(ratios, start=1))
    exceeds = [k for k, q in enumerate(ratios, start=1) if q > dom.constant]
    repaired_bad = []
    for trial in range(params["count"]):
        n = rng.randint(1, params["max_nvars"])
        r = random_weights(rng, n)
        s = [x * Fraction(rng.randint(1, 4), rng.randint(1, 4)) for x in r]
        C = dominates(weighted_l1(r), weighted_l1(s)).constant
        f = random_polynomial(rng, n, params["max_degree"])
        if ext_weighted_l1(r, C, f) < ext_weighted_l1(s, 1, f):
            repaired_bad.append(trial)
    passed = dom.constant == 2 and ratios_ok and exceeds == list(range(2, K + 1)) and not repaired_bad
    return CheckResult(passed, {"constant": dom.constant, "ratio_at_max_power": ratios[-1]}, 0,
                       {"ratios": ratios, "repaired_failures": repaired_bad[:3]})


def check_correspondence_round_trip(params: dict, seed: int) -> CheckResult:
    rng = random.Random(seed)
    tol, rtol = params["tol"], params["radius_tol"]
    bad = []
    worst_atom = worst_radius = 0.0
    for trial in range(params["count"]):
        mu = _normalized(random_measure(rng, 1, params["max_atoms"], [Fraction(3)], den=params["denominator"]))
        L = table_from_measure(mu, params["degree"])
        try:
            got = reconstruct_univariate(L, params["max_atoms"])
        except ReconstructionError as exc:
            bad.append({"trial": trial, "error": str(exc)})
            continue
        want = sorted((p[0], w) for p, w in mu.atoms)
        have = sorted((p[0], w) for p, w in got.atoms)
        if len(want) != len(have):
            bad.append({"trial": trial, "atoms": len(have), "expected": len(want)})
            continue
        err = max(max(abs(float(a) - float(b)), abs(float(u) - float(v))) for (a, u), (b, v) in zip(want, have))
        worst_atom = max(worst_atom, err)
        if err > tol:
            bad.append({"trial": trial, "error": err})
        est = support_radius_estimate(table_from_measure(mu, params["radius_degree"]), [1])
        rerr = abs(est.estimate - float(support_radius(mu, [1])))
        worst_radius = max(worst_radius, rerr)
        if rerr > rtol:
            bad.append({"trial": trial, "radius_error": rerr})
    return CheckResult(not bad, {"atom_error": worst_atom, "radius_error": worst_radius},
                       {"atoms": tol, "radius": rtol}, {"failures": bad[:3]})


def check_continuity_criterion(params: dict, seed: int) -> CheckResult:
    rng = random.Random(seed)
    bad = []
    for trial in range(params["count"]):
        n = rng.randint(1, params["max_nvars"])
        r = random_weights(rng, n)
        i = rng.randint(1, 3)
        mu = random_measure(rng, n, params["max_atoms"], [i * x for x in r])
        rep = continuity_norm(table_from_measure(mu, params["degree"]), r, i)
        if rep.sup_ratio > mu.total_mass():
            bad.append({"trial": trial, "sup_ratio": rep.sup_ratio, "mass": mu.total_mass()})
    L = table_from_measure(AtomicMeasure.dirac((2,)), params["delta_degree"])
    at1 = continuity_norm(L, [1], 1).per_degree
    at2 = continuity_norm(L, [1], 2).per_degree
    delta_ok = list(at1) == [2**k for k in range(len(at1))] and all(v == 1 for v in at2)
    return CheckResult(not bad and delta_ok, len(bad), 0,
                       {"failures": bad[:3], "delta2_ratios_i1": list(at1), "delta2_ratios_i2": list(at2)})


def _signed_table(rng: random.Random, n: int, t: int):
    """Moments of a positive measure minus a heavier atom farther out: never PSD."""
    mu = random_measure(rng, n, 3, [Fraction(2)] * n)
    far = tuple(Fraction(rng.choice([-1, 1]) * rng.randint(5, 8), 2) for _ in range(n))
    pos = table_from_measure(mu, 2 * t, nvars=n)
    neg = table_from_measure(AtomicMeasure.dirac(far, mu.total_mass() * 2), 2 * t, nvars=n)
    return pos.__class__(n, 2 * t, {m: pos[m] - neg[m] for m in pos.entries})


def check_positivity_machinery(params: dict, seed: int) -> CheckResult:
    rng = random.Random(seed)
    nrng = np.random.default_rng(seed)
    tol = params["tol"]
    bad = []
    atomic = []
    for trial in range(params["count"]):
        n = rng.randint(1, params["max_nvars"])
        t = rng.randint(1, params["max_t"])
        if trial % 2 == 0:
            mu = random_measure(rng, n, 6, [Fraction(2)] * n)
            L = table_from_measure(mu, 2 * t, nvars=n)
            atomic.append(L)
        else:
            L = _signed_table(rng, n, t)
        verdict = positivity_check(L, 1, t=t).passed
        # exhaustive random squares: L(p^2) = c^T M c with the table read exactly
        basis = monomials_up_to(n, t)
        M = np.array([[float(L[tuple(a + b for a, b in zip(u, v))]) for v in basis] for u in basis])
        C = nrng.standard_normal((params["samples"], len(basis)))
        vals = np.einsum("ij,jk,ik->i", C, M, C)
        scale = np.sum(C * C, axis=1) * max(float(np.trace(M)), 1.0)
        found_negative = bool(np.any(vals < -tol * scale))
        if verdict == found_negative:
            bad.append({"trial": trial, "psd_verdict": verdict, "negative_square_found": found_negative})
    failed_atomic = []
    for trial in range(params["atomic_count"]):
        n = rng.randint(1, 2)
        mu = random_measure(rng, n, 5, [Fraction(2)] * n)
        atomic.append(table_from_measure(mu, params["atomic_degree"], nvars=n))
    for k, L in enumerate(atomic):
        for d in (1, 2, 3):
            if 2 * d > L.max_degree:
                continue
            if not positivity_check(L, d, seed=seed).passed:
                failed_atomic.append({"table": k, "d": d})
    return CheckResult(not bad and not failed_atomic, {"disagreements": len(bad), "atomic_failures": len(failed_atomic)},
                       tol, {"disagreements": bad[:3], "atomic_failures": failed_atomic[:3]})


def check_hurwitz_reznick(params: dict, seed: int) -> CheckResult:
    rng = random.Random(seed)
    violations = []
    for trial in range(params["count"]):
        n = rng.randint(1, params["max_nvars"])
        mu = random_measure(rng, n, 6, [Fraction(3)] * n)
        L = table_from_measure(mu, 2 * params["max_k"], nvars=n)
        for k in range(1, params["max_k"] + 1):
            rep = hurwitz_reznick_check(L, k)
            if rep.violations:
                violations.append({"trial": trial, "k": k, "first": rep.violations[0]})
    return CheckResult(not violations, len(violations), params["tol"], {"violations": violations[:3]})


def check_jacobi_epsilon(params: dict, seed: int) -> CheckResult:
    x = Polynomial.variable(1, 1)
    module = PowerModule(1, (x, 1 - x))
    a = x * (1 - x)
    t = params["degree"] // 2
    found = {}
    ok = True
    for eps in params["epsilons"]:
        cert = jacobi_epsilon_check(module, a, Fraction(eps), t, seed=seed)
        good = bool(cert) and cert.verify() and cert.max_term_degree() <= params["degree"]
        ok &= good
        found[str(Fraction(eps))] = cert.max_term_degree() if cert else None
    neg = certificate_search(module, Polynomial.constant(-1, 1), t, seed=seed)
    witness_ok = (not neg and neg.witness is not None and xm_contains(module, neg.witness)
                  and neg.witness_value < 0)
    witness = None if neg or neg.witness is None else list(neg.witness)
    return CheckResult(ok and witness_ok, {"max_term_degree": found, "negativity_witness": bool(witness_ok)},
                       0, {"witness": witness})


def check_quasi_analyticity(params: dict, seed: int) -> CheckResult:
    K = params["K"]
    cases = {
        "2^k": ([2.0**k for k in range(K + 1)], "quasi_analytic"),
        "(k!)^2": ([float(math.factorial(k)) ** 2 for k in range(K + 1)], "not_quasi_analytic"),
        "1": ([1.0] * (K + 1), "quasi_analytic"),
    }
    got, ok = {}, True
    for name, (values, expected) in cases.items():
        # closed-form oracle: the Carleman series sum m_k^(-1/k) diverges for 2^k and 1,
        # and by Stirling (k!)^(-2/k) ~ e^2/k^2 is summable
        res = quasi_analytic_classify(MkSequence(tuple(values)))
        got[name] = res.verdict
        ok &= res.verdict == expected
    return CheckResult(ok, got, None)


def _series_converges(exponent: Fraction) -> bool:
    import sympy

    k = sympy.Symbol("k", integer=True, positive=True)
    return bool(sympy.Sum(1 / k ** sympy.Rational(exponent.numerator, exponent.denominator),
                          (k, 1, sympy.oo)).is_convergent())


def check_quasi_nuclear(params: dict, seed: int) -> CheckResult:
    rows, ok = [], True
    for s1 in params["s1"]:
        for gap in params["gaps"]:
            gap = Fraction(gap)
            s1 = Fraction(s1)
            # sum_i (i+1)^(2(s1-s2)) is the Hilbert-Schmidt norm squared
            oracle = _series_converges(2 * gap)
            got = quasi_nuclear_embedding(s1 + gap, s1)
            ok &= got == oracle == (gap > Fraction(1, 2))
            rows.append({"s1": s1, "gap": gap, "quasi_nuclear": got, "series_converges": oracle})
    return CheckResult(ok, sum(r["quasi_nuclear"] for r in rows), None, {"grid": rows})


MALFORMED = {
    "not_json.json": "{\"kind\": \"weighted_l1\", \"r\": [1, 2",
    "negative_weight.json": "{\"kind\": \"weighted_l1\", \"r\": [1, -2]}",
    "bad_kind.json": "{\"kind\": \"sup\", \"r\": [1]}",
    "short_exp.json": "{\"nvars\": 2, \"terms\": [{\"exp\": [1], \"coef\": 1}]}",
}


def check_cli_determinism(params: dict, seed: int) -> CheckResult:
    import tempfile
    from pathlib import Path

    from .cli import run

    config = '{"checks": [' + ", ".join(f'{{"name": "{n}", "seed": {seed}}}' for n in params["checks"]) + "]}"
    first = run(["suite", "run", "--config", config])
    second = run(["suite", "run", "--config", config])
    identical = first == second
    codes = {}
    with tempfile.TemporaryDirectory() as tmp:
        for name, text in MALFORMED.items():
            (Path(tmp) / name).write_text(text)
        poly = '{"nvars": 2, "terms": [{"exp": [1, 0], "coef": 1}]}'
        codes["not_json"] = run(["ext", "eval", "--seminorm", str(Path(tmp) / "not_json.json"), "--poly", poly])[0]
        codes["negative_weight"] = run(["ext", "eval", "--seminorm", str(Path(tmp) / "negative_weight.json"),
                                        "--poly", poly])[0]
        codes["bad_kind"] = run(["norm", "eval", "--seminorm", str(Path(tmp) / "bad_kind.json"), "--poly", poly])[0]
        codes["short_exp"] = run(["ext", "eval", "--seminorm", '{"kind": "weighted_l1", "r": [1, 1]}',
                                  "--poly", str(Path(tmp) / "short_exp.json")])[0]
        codes["missing_file"] = run(["ext", "eval", "--seminorm", str(Path(tmp) / "absent.json"), "--poly", poly])[0]
        codes["unknown_check"] = run(["suite", "run", "--config", '{"checks": [{"name": "no_such_check"}]}'])[0]
        codes["valid"] = run(["ext", "eval", "--seminorm", '{"kind": "weighted_l1", "r": [1, 1]}', "--poly",
                              '{"nvars": 2, "terms": [{"exp": [1, 1], "coef": 1}, {"exp": [1, 0], "coef": 2}]}'])[0]
    codes_ok = codes.pop("valid") == 0 and all(c == 2 for c in codes.values())
    return CheckResult(identical and codes_ok, {"identical": identical, "exit_codes_ok": codes_ok}, None,
                       {"exit_codes": codes})


CHECKS: dict[str, CheckSpec] = {c.name: c for c in [
    CheckSpec("closed_form_extension", "extension", check_closed_form_extension,
              {"count": 1000, "max_nvars": 4, "max_degree": 6}),
    CheckSpec("submultiplicativity", "extension", check_submultiplicativity,
              {"count": 1000, "equality_count": 200, "max_nvars": 4, "max_degree": 4}),
    CheckSpec("spectrum_dual_ball", "spectrum", check_spectrum_dual_ball,
              {"count": 500, "vertex_count": 100, "max_nvars": 4, "max_degree": 4, "tol": 1e-10}),
    CheckSpec("lp_ball_membership", "spectrum", check_lp_ball_membership,
              {"count": 1000, "max_nvars": 4, "denominator": 100, "tol": 1e-12}),
    CheckSpec("dominance_non_inheritance", "seminorm", check_dominance_non_inheritance,
              {"max_power": 20, "count": 200, "max_nvars": 3, "max_degree": 5}),
    CheckSpec("correspondence_round_trip", "moments", check_correspondence_round_trip,
              {"count": 100, "max_atoms": 5, "denominator": 10, "degree": 12, "radius_degree": 20,
               "tol": 1e-6, "radius_tol": 1e-4}),
    CheckSpec("continuity_criterion", "moments", check_continuity_criterion,
              {"count": 200, "max_nvars": 3, "max_atoms": 4, "degree": 6, "delta_degree": 12}),
    CheckSpec("positivity_machinery", "moments", check_positivity_machinery,
              {"count": 200, "max_nvars": 2, "max_t": 4, "samples": 500, "tol": 1e-8,
               "atomic_count": 40, "atomic_degree": 12}),
    CheckSpec("hurwitz_reznick", "moments", check_hurwitz_reznick,
              {"count": 200, "max_nvars": 3, "max_k": 4, "tol": 1e-12}),
    CheckSpec("jacobi_epsilon", "modules2d", check_jacobi_epsilon,
              {"epsilons": ["1/2", "1/10"], "degree": 6}),
    CheckSpec("quasi_analyticity", "moments", check_quasi_analyticity, {"K": 20}),
    CheckSpec("quasi_nuclear", "hilbert_scale", check_quasi_nuclear,
              {"s1": [0, "-1/2", 3], "gaps": [0, "0.4", "0.5", "0.6", 1, 2]}),
    CheckSpec("cli_determinism", "cli", check_cli_determinism,
              {"checks": ["quasi_analyticity", "jacobi_epsilon", "quasi_nuclear"]}),
]}

GROUPS = sorted({c.group for c in CHECKS.values()})


def resolve(config) -> list[tuple[CheckSpec, dict, int]]:
    """Expand a config into ``(check, params, seed)`` triples, in config order."""
    config = config or {}
    if not isinstance(config, dict):
        raise InputError("config", "expected a JSON object")
    unknown = set(config) - {"checks", "groups"}
    if unknown:
        raise InputError("config", f"unknown keys {sorted(unknown)}")
    plan = []
    for k, group in enumerate(config.get("groups", [])):
        if group not in GROUPS:
            raise InputError(f"config.groups[{k}]", f"unknown group {group!r}; known: {GROUPS}")
        plan += [(c, dict(c.defaults), c.seed) for c in CHECKS.values() if c.group == group]
    for k, entry in enumerate(config.get("checks", [])):
        where = f"config.checks[{k}]"
        if not isinstance(entry, dict) or "name" not in entry:
            raise InputError(where, "expected an object with a 'name'")
        spec = CHECKS.get(entry["name"])
        if spec is None:
            raise InputError(f"{where}.name", f"unknown check {entry['name']!r}")
        params = dict(spec.defaults)
        extra = entry.get("params", {})
        if not isinstance(extra, dict):
            raise InputError(f"{where}.params", "expected a JSON object")
        bad = set(extra) - set(params)
        if bad:
            raise InputError(f"{where}.params", f"unknown parameters {sorted(bad)}")
        params.update(extra)
        seed = entry.get("seed", spec.seed)
        if isinstance(seed, bool) or not isinstance(seed, int) or seed < 0:
            raise InputError(f"{where}.seed", "seed must be a nonnegative integer")
        plan.append((spec, params, seed))
    if not config.get("checks") and not config.get("groups"):
        plan = [(c, dict(c.defaults), c.seed) for c in CHECKS.values()]
    return plan


def run_check(name: str, params: dict | None = None, seed: int | None = None) -> CheckResult:
    spec = CHECKS[name]
    merged = dict(spec.defaults)
    merged.update(params or {})
    return spec.func(merged, spec.seed if seed is None else seed)


def run_suite(config=None) -> Report:
    """Run the configured checks sequentially; the report lists them in plan order."""
    plan = resolve(config)
    report = Report("suite run", inputs={"config": config or {}})
    for spec, params, seed in plan:
        res = spec.func(params, seed)
        report.add(spec.name, res.passed, res.value, res.tolerance)
        report.witnesses[spec.name] = {"seed": seed, "params": params, **res.witnesses}
    return report
