"""JSON ingestion with path-precise validation, and deterministic report output."""

from __future__ import annotations

import hashlib
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any

import numpy as np

from .algebra import Polynomial, as_fraction
from .hilbert_scale import HilbertScalePoint
from .modules2d import PowerModule
from .moments import AtomicMeasure, IncompleteTableError, MomentTable
from .seminorm import LP, WEIGHTED_L1, FamilySpec, SeminormSpec, lp, weighted_l1


class InputError(Exception):
    """Malformed or invalid input; ``where`` locates the problem."""

    def __init__(self, where: str, message: str):
        super().__init__(f"{where}: {message}")
        self.where = where
        self.message = message


# -- reading ---------------------------------------------------------------------

def parse_json_text(text: str, where: str):
    try:
        return json.loads(text, parse_float=Fraction)
    except json.JSONDecodeError as exc:
        raise InputError(where, f"line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def load_json(source: str, where: str):
    """Read JSON from a file path, or parse it directly when it looks inline."""
    stripped = source.lstrip()
    if stripped.startswith(("{", "[")):
        return parse_json_text(source, where)
    path = Path(source)
    if not path.is_file():
        raise InputError(where, f"no such file: {source}")
    return parse_json_text(path.read_text(), str(path))


def _require(data, key: str, where: str):
    if not isinstance(data, dict):
        raise InputError(where, "expected a JSON object")
    if key not in data:
        raise InputError(where, f"missing key {key!r}")
    return data[key]


def _list(value, where: str) -> list:
    if not isinstance(value, list):
        raise InputError(where, "expected a JSON array")
    return value


def _rational(value, where: str) -> Fraction:
    if isinstance(value, bool) or value is None:
        raise InputError(where, f"expected a number, got {value!r}")
    try:
        return as_fraction(value)
    except (TypeError, ValueError, ZeroDivisionError):
        raise InputError(where, f"not a rational number: {value!r}") from None


def _int(value, where: str, minimum: int | None = None) -> int:
    if isinstance(value, bool) or not isinstance(value, (int, Fraction)) or Fraction(value).denominator != 1:
        raise InputError(where, f"expected an integer, got {value!r}")
    value = int(value)
    if minimum is not None and value < minimum:
        raise InputError(where, f"must be >= {minimum}")
    return value


def parse_polynomial(data, where: str = "poly") -> Polynomial:
    nvars = _int(_require(data, "nvars", where), f"{where}.nvars", minimum=1)
    terms = {}
    for k, term in enumerate(_list(data.get("terms", []), f"{where}.terms")):
        loc = f"{where}.terms[{k}]"
        exps = _list(_require(term, "exp", loc), f"{loc}.exp")
        if len(exps) != nvars:
            raise InputError(f"{loc}.exp", f"expected {nvars} exponents, got {len(exps)}")
        mono = tuple(_int(e, f"{loc}.exp[{j}]", minimum=0) for j, e in enumerate(exps))
        coef = _rational(_require(term, "coef", loc), f"{loc}.coef")
        terms[mono] = terms.get(mono, Fraction(0)) + coef
    return Polynomial(nvars, terms)


def parse_seminorm(data, where: str = "seminorm") -> SeminormSpec:
    kind = _require(data, "kind", where)
    scale = _rational(data.get("scale", 1), f"{where}.scale")
    if scale <= 0:
        raise InputError(f"{where}.scale", "must be positive")
    if kind == WEIGHTED_L1:
        r = _list(_require(data, "r", where), f"{where}.r")
        if not r:
            raise InputError(f"{where}.r", "must be nonempty")
        weights = []
        for j, w in enumerate(r):
            w = _rational(w, f"{where}.r[{j}]")
            if w <= 0:
                raise InputError(f"{where}.r[{j}]", "weight must be positive")
            weights.append(w)
        return weighted_l1(weights, scale=scale)
    if kind == LP:
        p = _rational(_require(data, "p", where), f"{where}.p")
        if p < 1:
            raise InputError(f"{where}.p", "exponent must be >= 1")
        n = data.get("n")
        return lp(p, nvars=None if n is None else _int(n, f"{where}.n", minimum=1), scale=scale)
    raise InputError(f"{where}.kind", f"unknown seminorm kind {kind!r}")


def parse_family(data, where: str = "family") -> FamilySpec:
    members = _list(_require(data, "members", where), f"{where}.members")
    if not members:
        raise InputError(f"{where}.members", "family must be nonempty")
    return FamilySpec(tuple(parse_seminorm(m, f"{where}.members[{k}]") for k, m in enumerate(members)))


def parse_module(data, where: str = "module") -> PowerModule:
    d = _int(_require(data, "d", where), f"{where}.d", minimum=1)
    gens = [parse_polynomial(g, f"{where}.generators[{k}]")
            for k, g in enumerate(_list(data.get("generators", []), f"{where}.generators"))]
    nvars = data.get("nvars")
    try:
        return PowerModule(d, tuple(gens), None if nvars is None else _int(nvars, f"{where}.nvars", 1))
    except ValueError as exc:
        raise InputError(where, str(exc)) from None


def parse_point(data, where: str = "point") -> tuple:
    return tuple(_rational(x, f"{where}[{k}]") for k, x in enumerate(_list(data, where)))


def parse_measure(data, where: str = "measure") -> AtomicMeasure:
    atoms = []
    for k, atom in enumerate(_list(_require(data, "atoms", where), f"{where}.atoms")):
        loc = f"{where}.atoms[{k}]"
        pt = parse_point(_require(atom, "point", loc), f"{loc}.point")
        w = _rational(_require(atom, "weight", loc), f"{loc}.weight")
        if w <= 0:
            raise InputError(f"{loc}.weight", "must be positive")
        atoms.append((pt, w))
    try:
        return AtomicMeasure(tuple(atoms))
    except ValueError as exc:
        raise InputError(where, str(exc)) from None


def parse_table(data, where: str = "table") -> MomentTable:
    nvars = _int(_require(data, "nvars", where), f"{where}.nvars", minimum=1)
    max_degree = _int(_require(data, "max_degree", where), f"{where}.max_degree", minimum=0)
    entries = {}
    for k, row in enumerate(_list(_require(data, "moments", where), f"{where}.moments")):
        loc = f"{where}.moments[{k}]"
        exps = _list(_require(row, "exp", loc), f"{loc}.exp")
        if len(exps) != nvars:
            raise InputError(f"{loc}.exp", f"expected {nvars} exponents")
        mono = tuple(_int(e, f"{loc}.exp[{j}]", minimum=0) for j, e in enumerate(exps))
        entries[mono] = _rational(_require(row, "value", loc), f"{loc}.value")
    try:
        return MomentTable(nvars, max_degree, entries)
    except IncompleteTableError as exc:
        raise InputError(where, str(exc)) from None


def parse_hs_point(data, where: str = "point") -> HilbertScalePoint:
    coords = {}
    for k, row in enumerate(_list(_require(data, "coords", where), f"{where}.coords")):
        loc = f"{where}.coords[{k}]"
        coords[_int(_require(row, "i", loc), f"{loc}.i", minimum=0)] = _rational(_require(row, "v", loc), f"{loc}.v")
    return HilbertScalePoint(coords)


# -- writing ---------------------------------------------------------------------

def canonical(obj: Any):
    """Convert to plain JSON types with a fixed rendering for every number."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, Fraction):
        return str(obj.numerator) if obj.denominator == 1 else f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, int):
        return obj
    if isinstance(obj, (float, np.floating)):
        x = float(obj)
        if math.isnan(x):
            return "nan"
        if math.isinf(x):
            return "inf" if x > 0 else "-inf"
        return x
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.ndarray):
        return [canonical(v) for v in obj.tolist()]
    if isinstance(obj, Polynomial):
        return obj.to_json()
    if hasattr(obj, "to_json"):
        return canonical(obj.to_json())
    if isinstance(obj, dict):
        return {str(k): canonical(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [canonical(v) for v in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj) -> str:
    return json.dumps(canonical(obj), sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def digest(inputs) -> str:
    text = json.dumps(canonical(inputs), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(text.encode()).hexdigest()


@dataclass
class Verdict:
    name: str
    passed: bool
    value: Any = None
    tolerance: Any = None

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "value": self.value, "tolerance": self.tolerance}


@dataclass
class Report:
    command: str
    inputs: Any = None
    verdicts: list[Verdict] = field(default_factory=list)
    witnesses: dict = field(default_factory=dict)
    result: dict = field(default_factory=dict)
    error: str | None = None

    @property
    def passed(self) -> bool:
        return self.error is None and all(v.passed for v in self.verdicts)

    def add(self, name: str, passed: bool, value=None, tolerance=None) -> Verdict:
        v = Verdict(name, bool(passed), value, tolerance)
        self.verdicts.append(v)
        return v

    def to_json(self) -> dict:
        out = {
            "command": self.command,
            "inputs_digest": digest(self.inputs),
            "passed": self.passed,
            "verdicts": [v.to_json() for v in self.verdicts],
            "witnesses": self.witnesses,
            "result": self.result,
        }
        if self.error is not None:
            out["error"] = self.error
        return out

    def to_text(self) -> str:
        lines = [f"{self.command}: {'PASS' if self.passed else 'FAIL'}"]
        if self.error:
            lines.append(f"  error: {self.error}")
        for v in self.verdicts:
            tol = "" if v.tolerance is None else f" (tol {canonical(v.tolerance)})"
            lines.append(f"  [{'pass' if v.passed else 'FAIL'}] {v.name} = {json.dumps(canonical(v.value))}{tol}")
        return "\n".join(lines) + "\n"
