"""Command-line front end: ``symm <verb> <action> [options]``.

Every invocation prints one report (JSON by default, ``--format text`` for a
summary).  Exit status: 0 when every verdict passes, 1 when any verdict
fails, 2 on input errors.  JSON arguments may be file paths or inline JSON;
``--input`` names a bundle whose keys fill in options not given on the
command line.  ``SYMM_TOL`` and ``SYMM_FORMAT`` override the defaults of
``--tol`` and ``--format``.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from . import extension, hilbert_scale, modules2d, moments, seminorm, spectrum
from .io import (
    InputError,
    Report,
    dumps,
    load_json,
    parse_hs_point,
    parse_measure,
    parse_module,
    parse_point,
    parse_polynomial,
    parse_seminorm,
    parse_table,
    parse_json_text,
)

DEFAULT_TOL = 1e-12


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError("argv", message)


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", default=None, help="numeric tolerance (env SYMM_TOL)")
    common.add_argument("--seed", type=int, default=0, help="seed for every random choice")
    common.add_argument("--format", choices=("json", "text"), default=None, help="report format (env SYMM_FORMAT)")
    common.add_argument("--input", default=None, help="JSON bundle supplying missing options")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="symm", description="Moment-problem workbench on symmetric algebras.")
    verbs = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def leaf(group, name, help_):
        return group.add_parser(name, parents=[common], help=help_)

    norm = verbs.add_parser("norm", help="seminorms and dual norms").add_subparsers(dest="action", required=True)
    p = leaf(norm, "eval", "evaluate a seminorm on a linear form")
    p.add_argument("--seminorm")
    p.add_argument("--poly")
    p = leaf(norm, "dual", "dual norm of a point")
    p.add_argument("--seminorm")
    p.add_argument("--point")

    ext = verbs.add_parser("ext", help="projective extension").add_subparsers(dest="action", required=True)
    p = leaf(ext, "eval", "certified interval for the extended seminorm")
    p.add_argument("--seminorm")
    p.add_argument("--poly")
    p.add_argument("--budget", type=int, default=None)

    spec = verbs.add_parser("spectrum", help="Gelfand spectrum balls").add_subparsers(dest="action", required=True)
    p = leaf(spec, "test", "ball membership")
    p.add_argument("--seminorm")
    p.add_argument("--radius", default=None)
    p.add_argument("--point")
    p = leaf(spec, "sample", "deterministic sample of a ball")
    p.add_argument("--seminorm")
    p.add_argument("--radius", default=None)
    p.add_argument("--count", type=int, default=None)
    p.add_argument("--nvars", type=int, default=None)

    mod = verbs.add_parser("module", help="2d-power modules").add_subparsers(dest="action", required=True)
    p = leaf(mod, "cert", "membership certificate for a (+ epsilon)")
    p.add_argument("--module")
    p.add_argument("--poly")
    p.add_argument("--epsilon", default=None)
    p.add_argument("--degree", type=int, default=None)
    p = leaf(mod, "arch", "archimedean witness k")
    p.add_argument("--module")
    p.add_argument("--degree", type=int, default=None)
    p.add_argument("--max-k", type=int, default=None)

    mom = verbs.add_parser("moments", help="moment functionals").add_subparsers(dest="action", required=True)
    p = leaf(mom, "check", "positivity of a moment table")
    p.add_argument("--table")
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--module")
    p = leaf(mom, "mk", "m_k growth sequence and quasi-analyticity")
    p.add_argument("--table")
    p.add_argument("--K", type=int, default=None)
    p = leaf(mom, "reconstruct", "univariate atomic reconstruction")
    p.add_argument("--table")
    p.add_argument("--max-atoms", type=int, default=None)
    p = leaf(mom, "radius", "support radius estimate")
    p.add_argument("--table")
    p.add_argument("--measure")
    p.add_argument("--r")
    p.add_argument("--degree", type=int, default=None)
    p = leaf(mom, "distinguish", "first monomial separating two measures")
    p.add_argument("--measure1")
    p.add_argument("--measure2")
    p.add_argument("--degree", type=int, default=None)

    nuc = verbs.add_parser("nuclear", help="diagonal Hilbert scale").add_subparsers(dest="action", required=True)
    p = leaf(nuc, "check", "dominance and quasi-nuclearity of H_s2 -> H_s1")
    p.add_argument("--s1")
    p.add_argument("--s2")
    p.add_argument("--point")

    suite = verbs.add_parser("suite", help="acceptance suite").add_subparsers(dest="action", required=True)
    p = leaf(suite, "run", "run named checks")
    p.add_argument("--config")
    p.add_argument("--groups", help="comma-separated check groups")
    return parser


# -- option access -----------------------------------------------------------------

class _Options:
    """Command-line values with the ``--input`` bundle as fallback."""

    def __init__(self, args: argparse.Namespace):
        self.args = args
        self.bundle = {}
        if args.input is not None:
            bundle = load_json(args.input, "--input")
            if not isinstance(bundle, dict):
                raise InputError("--input", "bundle must be a JSON object")
            self.bundle = bundle
        self.inputs: dict = {}

    def raw(self, name: str, required: bool = True):
        value = getattr(self.args, name.replace("-", "_"), None)
        if value is not None:
            return value, f"--{name}"
        if name in self.bundle:
            return self.bundle[name], f"input.{name}"
        if required:
            raise InputError(f"--{name}", "required")
        return None, None

    def json(self, name: str, required: bool = True):
        value, where = self.raw(name, required)
        if value is None:
            return None, None
        if isinstance(value, str):
            value = load_json(value, where)
        self.inputs[name] = value
        return value, where

    def rational(self, name: str, default=None):
        value, where = self.raw(name, required=default is None)
        if value is None:
            value, where = default, f"--{name}"
        try:
            out = Fraction(value) if not isinstance(value, str) else Fraction(value.strip())
        except (ValueError, ZeroDivisionError, TypeError):
            raise InputError(where, f"not a rational number: {value!r}") from None
        self.inputs[name] = out
        return out

    def point(self, name: str):
        value, where = self.raw(name)
        if isinstance(value, str):
            value = parse_json_text(value, where)
        out = parse_point(value, where)
        self.inputs[name] = out
        return out

    def integer(self, name: str, default: int | None = None, minimum: int = 0):
        value, where = self.raw(name, required=default is None)
        if value is None:
            value, where = default, f"--{name}"
        if isinstance(value, bool) or not isinstance(value, int):
            raise InputError(where, f"expected an integer, got {value!r}")
        if value < minimum:
            raise InputError(where, f"must be >= {minimum}")
        self.inputs[name] = value
        return value


def _tol(args) -> float:
    raw = args.tol if args.tol is not None else os.environ.get("SYMM_TOL")
    if raw is None:
        return DEFAULT_TOL
    try:
        tol = float(raw)
    except ValueError:
        raise InputError("--tol", f"not a number: {raw!r}") from None
    if not tol >= 0:
        raise InputError("--tol", "must be nonnegative")
    return tol


def _format(args) -> str:
    fmt = args.format or os.environ.get("SYMM_FORMAT") or "json"
    if fmt not in ("json", "text"):
        raise InputError("SYMM_FORMAT", f"unknown format {fmt!r}")
    return fmt


def _poly_for(opts: _Options, name: str = "poly"):
    data, where = opts.json(name)
    return parse_polynomial(data, where)


def _seminorm_for(opts: _Options):
    data, where = opts.json("seminorm")
    return parse_seminorm(data, where)


# -- verbs --------------------------------------------------------------------------

def _norm_eval(opts, report, tol, seed):
    rho = _seminorm_for(opts)
    v = _poly_for(opts)
    value = seminorm.seminorm_eval(rho, v)
    report.result = {"value": value}
    report.add("evaluated", True, value)


def _norm_dual(opts, report, tol, seed):
    rho = _seminorm_for(opts)
    v = opts.point("point")
    value = seminorm.dual_norm(rho, v)
    report.result = {"dual_norm": value}
    report.add("evaluated", True, value)


def _ext_eval(opts, report, tol, seed):
    rho = _seminorm_for(opts)
    f = _poly_for(opts)
    budget = opts.integer("budget", 64, minimum=1)
    interval = extension.ext_interval(rho, f, budget=budget, seed=seed)
    body = interval.to_json()
    report.result = {"lower": body["lower"], "upper": body["upper"], "exact": body["exact"]}
    report.witnesses = body["witnesses"]
    report.add("interval_verified", interval.verify(rho, f, tol), interval.upper, tol)


def _ball(opts):
    rho = _seminorm_for(opts)
    radius = opts.rational("radius", "1")
    if radius <= 0:
        raise InputError("--radius", "must be positive")
    return spectrum.SpectrumBall(rho, radius)


def _spectrum_test(opts, report, tol, seed):
    ball = _ball(opts)
    v = opts.point("point")
    contains = spectrum.spectrum_contains(ball, v, tol)
    dn = seminorm.dual_norm(ball.seminorm, v)
    report.result = {"contains": contains, "dual_norm": dn}
    report.add("contains", contains, dn, tol)


def _spectrum_sample(opts, report, tol, seed):
    ball = _ball(opts)
    count = opts.integer("count", 16, minimum=1)
    n = opts.integer("nvars", -1, minimum=-1)
    n = None if n < 0 else n
    points = spectrum.sample_ball(ball, count, seed=seed, n=n)
    inside = all(spectrum.spectrum_contains(ball, pt, tol) for pt in points)
    report.result = {"points": [list(pt) for pt in points]}
    report.add("all_inside", inside, len(points), tol)


def _module_cert(opts, report, tol, seed):
    data, where = opts.json("module")
    module = parse_module(data, where)
    a = _poly_for(opts)
    eps = opts.rational("epsilon", "0")
    t = opts.integer("degree", 3)
    if module.nvars is not None and a.nvars != module.nvars:
        raise InputError("--poly", f"has {a.nvars} variables, module has {module.nvars}")
    if eps < 0:
        raise InputError("--epsilon", "must be nonnegative")
    if eps == 0:
        res = modules2d.certificate_search(module, a, t, seed=seed)
    else:
        res = modules2d.jacobi_epsilon_check(module, a, eps, t, seed=seed)
    report.result = res.to_json()
    report.add("certificate", bool(res) and res.verify(), res.max_term_degree() if res else None)


def _module_arch(opts, report, tol, seed):
    data, where = opts.json("module")
    module = parse_module(data, where)
    res = modules2d.archimedean_witness(module, opts.integer("degree", 3), max_k=opts.integer("max-k", 1024, minimum=1))
    if res:
        report.result = {"found": True, "k": res.k, "heuristic": res.heuristic, "certificate": res.certificate.to_json()}
        report.add("archimedean_witness", res.certificate.verify(), res.k)
    else:
        report.result = res.to_json()
        report.add("archimedean_witness", False, None)


def _table(opts):
    data, where = opts.json("table")
    return parse_table(data, where)


def _moments_check(opts, report, tol, seed):
    L = _table(opts)
    mdata, where = opts.json("module", required=False)
    if mdata is not None:
        verdict = moments.m_positivity_check(L, parse_module(mdata, where), seed=seed)
    else:
        verdict = moments.positivity_check(L, opts.integer("d", 1, minimum=1), seed=seed)
    report.result = {"positive": verdict.passed, "method": verdict.method}
    for res in verdict.checks:
        report.add(res.name, res.passed, res.min_eigenvalue, res.tolerance)
        if res.witness is not None:
            report.witnesses[res.name] = res.witness.to_json()


def _moments_mk(opts, report, tol, seed):
    L = _table(opts)
    K = opts.integer("K", L.max_degree // 2)
    try:
        m = moments.mk_sequence(L, K)
    except moments.IncompleteTableError as exc:
        raise InputError("--K", str(exc)) from None
    except ValueError as exc:
        report.add("positive", False, str(exc))
        return
    report.add("positive", True)
    qa = moments.quasi_analytic_classify(m) if K >= 8 else None
    report.result = {"mk": list(m.values), "quasi_analytic": qa.verdict if qa else "inconclusive",
                     "growth_exponent": qa.growth_exponent if qa else None}


def _moments_reconstruct(opts, report, tol, seed):
    L = _table(opts)
    max_atoms = opts.integer("max-atoms", L.max_degree // 2)
    try:
        mu = moments.reconstruct_univariate(L, max_atoms)
    except moments.ReconstructionError as exc:
        report.result = {"reconstructed": False, "reason": str(exc)}
        report.add("reconstructed", False)
        return
    report.result = {"reconstructed": True, "measure": mu.to_json()}
    report.add("reconstructed", True, len(mu.atoms))


def _moments_radius(opts, report, tol, seed):
    r = opts.point("r")
    if any(x <= 0 for x in r):
        raise InputError("--r", "weights must be positive")
    mdata, mwhere = opts.json("measure", required=False)
    tdata, twhere = opts.json("table", required=False)
    if mdata is None and tdata is None:
        raise InputError("--table", "one of --table or --measure is required")
    exact = None
    if mdata is not None:
        mu = parse_measure(mdata, mwhere)
        exact = moments.support_radius(mu, r)
        report.result["exact"] = exact
    if tdata is not None:
        L = parse_table(tdata, twhere)
        est = moments.support_radius_estimate(L, r, opts.integer("degree", L.max_degree))
        report.result.update({"estimate": est.estimate, "root_estimate": est.root_estimate,
                              "node_estimate": est.node_estimate})
        if exact is not None:
            err = abs(est.estimate - float(exact))
            report.add("estimate_matches", err <= max(tol, 1e-4), err, max(tol, 1e-4))
            return
    report.add("computed", True)


def _moments_distinguish(opts, report, tol, seed):
    d1, w1 = opts.json("measure1")
    d2, w2 = opts.json("measure2")
    mu1, mu2 = parse_measure(d1, w1), parse_measure(d2, w2)
    res = moments.distinguish_measures(mu1, mu2, opts.integer("degree", 4), tol)
    if res is None:
        report.result = {"agree": True}
        report.add("distinguished", False, None, tol)
    else:
        report.result = {"agree": False, "monomial": list(res.monomial), "value1": res.value1, "value2": res.value2}
        report.add("distinguished", True, list(res.monomial), tol)


def _nuclear_check(opts, report, tol, seed):
    s1, s2 = opts.rational("s1"), opts.rational("s2")
    dom = hilbert_scale.scale_dominance(s2, s1)
    qn = hilbert_scale.quasi_nuclear_embedding(s2, s1)
    report.result = {"dominates": dom, "quasi_nuclear": qn}
    pdata, where = opts.json("point", required=False)
    if pdata is not None:
        v = parse_hs_point(pdata, where)
        report.result["norms"] = {"s1": hilbert_scale.hs_norm(s1, v), "s2": hilbert_scale.hs_norm(s2, v)}
    if not dom:
        report.witnesses["dominance"] = hilbert_scale.dominance_witness(s2, s1).to_json()
    report.add("dominates", dom)
    report.add("quasi_nuclear", qn, 2 * (s2 - s1), Fraction(1))


def _suite_run(opts, report, tol, seed):
    from .suite import run_suite

    config, _ = opts.json("config", required=False)
    config = dict(config or {})
    groups = opts.args.groups
    if groups:
        config["groups"] = [g.strip() for g in groups.split(",") if g.strip()]
    out = run_suite(config)
    report.inputs = out.inputs
    report.verdicts, report.witnesses = out.verdicts, out.witnesses


VERBS = {
    ("norm", "eval"): _norm_eval,
    ("norm", "dual"): _norm_dual,
    ("ext", "eval"): _ext_eval,
    ("spectrum", "test"): _spectrum_test,
    ("spectrum", "sample"): _spectrum_sample,
    ("module", "cert"): _module_cert,
    ("module", "arch"): _module_arch,
    ("moments", "check"): _moments_check,
    ("moments", "mk"): _moments_mk,
    ("moments", "reconstruct"): _moments_reconstruct,
    ("moments", "radius"): _moments_radius,
    ("moments", "distinguish"): _moments_distinguish,
    ("nuclear", "check"): _nuclear_check,
    ("suite", "run"): _suite_run,
}


def _render(report: Report, fmt: str) -> str:
    return report.to_text() if fmt == "text" else dumps(report)


def run(argv: list[str]) -> tuple[int, str]:
    """Run one command; returns the exit code and the rendered report."""
    fmt = os.environ.get("SYMM_FORMAT") if os.environ.get("SYMM_FORMAT") in ("json", "text") else "json"
    report = Report(" ".join(argv[:2]) if argv else "")
    try:
        parser = build_parser()
        args = parser.parse_args(argv)
        report.command = f"{args.verb} {args.action}"
        fmt = _format(args)
        tol = _tol(args)
        opts = _Options(args)
        VERBS[(args.verb, args.action)](opts, report, tol, args.seed)
        if report.inputs is None:
            report.inputs = {"options": opts.inputs, "seed": args.seed, "tol": tol}
    except InputError as exc:
        report.error = str(exc)
        return 2, _render(report, fmt)
    except (ValueError, TypeError, KeyError) as exc:
        report.error = f"invalid input: {exc}"
        return 2, _render(report, fmt)
    return (0 if report.passed else 1), _render(report, fmt)


def main(argv: list[str] | None = None) -> int:
    code, text = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
