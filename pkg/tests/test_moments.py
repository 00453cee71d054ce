import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from symmoment.algebra import Polynomial
from symmoment.modules2d import PowerModule
from symmoment.moments import (
    AtomicMeasure,
    MkSequence,
    MomentTable,
    IncompleteTableError,
    ReconstructionError,
    continuity_norm,
    distinguish_measures,
    hurwitz_reznick_check,
    integrate,
    m_positivity_check,
    mk_products,
    mk_sequence,
    moment_matrix,
    positivity_check,
    quasi_analytic_classify,
    reconstruct_univariate,
    support_radius,
    support_radius_estimate,
    table_from_measure,
)
from symmoment.seminorm import weighted_l1
from symmoment.spectrum import SpectrumBall, spectrum_contains

from conftest import polynomials, positive_rationals

x = Polynomial.variable(1, 1)
x1, x2 = Polynomial.variables(2)
half = Fraction(1, 2)
sym = AtomicMeasure.from_pairs([((1,), half), ((-1,), half)])


@st.composite
def measures(draw, nvars=None, bound=3):
    n = nvars or draw(st.integers(1, 3))
    pts = draw(st.lists(st.tuples(*[st.fractions(-bound, bound, max_denominator=6)] * n),
                        min_size=1, max_size=4, unique=True))
    return AtomicMeasure(tuple((p, draw(positive_rationals)) for p in pts))


def test_integrate_examples():
    assert integrate(AtomicMeasure.dirac((1, 2)), x1 * x2) == 2
    assert integrate(sym, x) == 0 and integrate(sym, x**2) == 1
    mu = AtomicMeasure.from_pairs([((1, 1), half), ((-1, -1), half)])
    assert integrate(mu, x1 * x2) == 1


def test_table_examples():
    L = table_from_measure(AtomicMeasure.dirac((0, 0)), 3)
    assert L.unit() == 1 and all(v == 0 for m, v in L.entries.items() if sum(m))
    assert [table_from_measure(sym, 4)[(k,)] for k in range(5)] == [1, 0, 1, 0, 1]
    assert table_from_measure(sym, 4).scaled(3) == table_from_measure(
        AtomicMeasure.from_pairs([((1,), Fraction(3, 2)), ((-1,), Fraction(3, 2))]), 4)


def test_incomplete_table_rejected():
    with pytest.raises(IncompleteTableError):
        MomentTable(1, 2, {(0,): 1, (1,): 0})


def test_invalid_measures_rejected():
    with pytest.raises(ValueError):
        AtomicMeasure.from_pairs([((0,), -1)])
    with pytest.raises(ValueError):
        AtomicMeasure.from_pairs([((0,), 1), ((0,), 2)])


def test_continuity_examples():
    L = table_from_measure(AtomicMeasure.dirac((2,)), 10)
    rep = continuity_norm(L, [1], 1)
    assert list(rep.per_degree) == [2**k for k in range(11)] and rep.unbounded_trend
    assert continuity_norm(L, [1], 2).sup_ratio == 1
    assert continuity_norm(table_from_measure(AtomicMeasure.dirac((0,)), 6), [1]).sup_ratio == 1


def test_positivity_examples():
    L = table_from_measure(sym, 2)
    assert moment_matrix(L, 1).tolist() == [[1, 0], [0, 1]]
    assert positivity_check(L, 1, t=1).passed
    assert not positivity_check(MomentTable.univariate([1, 0, -1]), 1).passed
    for d in (1, 2, 3):
        assert positivity_check(table_from_measure(sym, 6), d).passed


def test_m_positivity_examples():
    jac = PowerModule(1, (x, 1 - x))
    assert m_positivity_check(table_from_measure(AtomicMeasure.dirac((half,)), 4), jac).passed
    assert not m_positivity_check(table_from_measure(AtomicMeasure.dirac((2,)), 4), jac).passed
    assert m_positivity_check(MomentTable.univariate([0, 0, 0, 0, 0]), jac).passed


def test_hurwitz_reznick_examples():
    mu = AtomicMeasure.from_pairs([((1, 1), half), ((-1, -1), half)])
    rep = hurwitz_reznick_check(table_from_measure(mu, 2), 1)
    assert not rep.violations and any(row[1] == row[2] for row in rep.rows)
    assert not hurwitz_reznick_check(table_from_measure(AtomicMeasure.dirac((0, 0)), 4), 2).violations
    rep = hurwitz_reznick_check(table_from_measure(AtomicMeasure.dirac((2, 1)), 4), 2)
    row = next(r for r in rep.rows if r[0] == (2, 2))
    assert row[1] == 4 and row[2] == 16


def test_mk_examples():
    m = mk_sequence(table_from_measure(AtomicMeasure.dirac((2, 1)), 8), 4)
    assert m.values == (1.0, 2.0, 4.0, 8.0, 16.0)
    assert mk_sequence(table_from_measure(sym, 4), 2).values[0] == 1
    assert mk_sequence(table_from_measure(AtomicMeasure.dirac((0,)), 4), 2).values[1:] == (0.0, 0.0)
    with pytest.raises(ValueError):
        mk_sequence(MomentTable.univariate([1, 0, -1]), 1)


def test_mk_products_dominates_pure_powers():
    L = table_from_measure(AtomicMeasure.from_pairs([((1, 2), half), ((-1, 1), half)]), 8)
    reduced, full = mk_sequence(L, 4), mk_products(L, 4)
    assert all(a <= b * (1 + 1e-12) for a, b in zip(reduced.values, full.values))


def test_classifier_examples():
    K = 20
    assert quasi_analytic_classify(MkSequence([2.0**k for k in range(K + 1)])).verdict == "quasi_analytic"
    fact2 = MkSequence([float(math.factorial(k)) ** 2 for k in range(K + 1)])
    assert quasi_analytic_classify(fact2).verdict == "not_quasi_analytic"
    assert quasi_analytic_classify(MkSequence([1.0] * (K + 1))).verdict == "quasi_analytic"


def test_radius_examples():
    d2 = AtomicMeasure.dirac((2,))
    assert support_radius(d2, [1]) == 2
    assert abs(support_radius_estimate(table_from_measure(d2, 10), [1]).estimate - 2) < 1e-6
    assert support_radius(AtomicMeasure.dirac((0,)), [1]) == 0


def test_reconstruct_examples():
    mu = reconstruct_univariate(MomentTable.univariate([1, 0, 1, 0, 1, 0, 1]), 3)
    assert sorted(mu.atoms) == [((-1,), half), ((1,), half)]
    assert reconstruct_univariate(MomentTable.univariate([1, 0, 0, 0, 0]), 2).atoms == (((0,), 1),)
    third = Fraction(1, 3)
    thirds = AtomicMeasure.from_pairs([((-1,), third), ((0,), third), ((1,), third)])
    got = reconstruct_univariate(table_from_measure(thirds, 6), 3)
    flat = [float(v) for p, w in sorted(got.atoms) for v in (p[0], w)]
    assert flat == pytest.approx([-1, 1 / 3, 0, 1 / 3, 1, 1 / 3], abs=1e-8)


def test_reconstruct_float_atoms():
    mu = AtomicMeasure.from_pairs([((math.sqrt(2),), 0.25), ((-1.1,), 0.75)])
    got = reconstruct_univariate(table_from_measure(mu, 6), 3)
    flat = [v for p, w in sorted(got.atoms) for v in (p[0], w)]
    assert flat == pytest.approx([-1.1, 0.75, math.sqrt(2), 0.25], abs=1e-8)


def test_reconstruct_rejects_non_positive_tables():
    with pytest.raises(ReconstructionError):
        reconstruct_univariate(MomentTable.univariate([1, 0, -1, 0, 1]), 2)


def test_distinguish_examples():
    d = distinguish_measures(AtomicMeasure.dirac((1,)), AtomicMeasure.dirac((-1,)), 4)
    assert d.monomial == (1,) and (d.value1, d.value2) == (1, -1)
    assert distinguish_measures(sym, sym, 6) is None
    d = distinguish_measures(sym, AtomicMeasure.dirac((0,)), 4)
    assert d.monomial == (2,) and (d.value1, d.value2) == (1, 0)


def test_json_round_trips():
    L = table_from_measure(sym, 4)
    assert MomentTable.from_json(L.to_json()) == L
    assert AtomicMeasure.from_json(sym.to_json()) == sym


@given(measures(), st.data())
def test_integration_is_linear_and_positive(mu, data):
    f = data.draw(polynomials(nvars=mu.nvars, max_degree=3))
    g = data.draw(polynomials(nvars=mu.nvars, max_degree=3))
    assert integrate(mu, 2 * f + g) == 2 * integrate(mu, f) + integrate(mu, g)
    assert integrate(mu, f**2) >= 0 and integrate(mu, f**4) >= 0


@given(measures(), st.integers(1, 3))
def test_support_radius_matches_ball_membership(mu, i):
    r = [Fraction(1)] * mu.nvars
    inside = all(spectrum_contains(SpectrumBall(weighted_l1(r), i), p) for p, _ in mu.atoms)
    assert (support_radius(mu, r) <= i) == inside


@settings(max_examples=25)
@given(measures(nvars=1))
def test_round_trip(mu):
    got = reconstruct_univariate(table_from_measure(mu, 8), 4)
    assert sorted(got.atoms) == sorted(mu.atoms)


@settings(max_examples=25)
@given(measures())
def test_atomic_tables_are_positive(mu):
    L = table_from_measure(mu, 4)
    assert positivity_check(L, 1).passed and positivity_check(L, 2).passed
    assert not hurwitz_reznick_check(L, 2).violations
