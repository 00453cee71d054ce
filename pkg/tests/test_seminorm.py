import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from symmoment.algebra import Polynomial
from symmoment.seminorm import (
    FamilySpec,
    SeminormSpec,
    dominates,
    dual_norm,
    family_max_bound,
    lp,
    seminorm_eval,
    weighted_l1,
)

from conftest import positive_rationals, rationals

x1, x2 = Polynomial.variables(2)


def test_eval_examples():
    assert seminorm_eval(weighted_l1([2, 3]), x1 - x2) == 5
    assert seminorm_eval(lp(2), 3 * x1 + 4 * x2) == pytest.approx(5, rel=1e-12)
    for rho in (weighted_l1([2, 3]), lp(1), lp(2), lp(3)):
        assert seminorm_eval(rho, Polynomial(2)) == 0


def test_eval_rejects_non_linear_input():
    with pytest.raises(ValueError):
        seminorm_eval(lp(2), x1 * x2)
    with pytest.raises(ValueError):
        seminorm_eval(lp(2), x1 + 1)


def test_dual_examples():
    assert dual_norm(lp(2), (3, 4)) == pytest.approx(5, rel=1e-12)
    assert dual_norm(weighted_l1([2, 3]), (4, 3)) == 2
    assert dual_norm(lp(1), (1, -1)) == 1


def test_invalid_specs():
    with pytest.raises(ValueError):
        weighted_l1([1, 0])
    with pytest.raises(ValueError):
        lp(0.5)
    with pytest.raises(ValueError):
        weighted_l1([1], scale=0)
    with pytest.raises(ValueError):
        FamilySpec(())


def test_dominance_examples():
    assert dominates(weighted_l1([2, 3]), weighted_l1([1, 1])).constant == Fraction(1, 2)
    assert dominates(weighted_l1([2, 3]), weighted_l1([2, 3])).constant == 1
    assert dominates(lp(1), lp(2), n=2).constant == 1


def test_family_examples():
    fam = FamilySpec((weighted_l1([1, 1]), weighted_l1([2, 1])))
    assert family_max_bound(fam, x1) == 2
    assert family_max_bound(FamilySpec((weighted_l1([2, 3]),)), x1 - x2) == 5
    assert family_max_bound(fam, Polynomial(2)) == 0


def test_json_round_trip():
    for rho in (weighted_l1([1, Fraction(2, 3)], scale=2), lp(1.5, nvars=3, scale=Fraction(1, 2))):
        assert SeminormSpec.from_json(rho.to_json()) == rho


def specs(n: int):
    wl1 = st.builds(lambda r, s: weighted_l1(r, scale=s),
                    st.lists(positive_rationals, min_size=n, max_size=n), positive_rationals)
    lps = st.builds(lambda p, s: lp(p, nvars=n, scale=s), st.sampled_from([1, 1.5, 2, 3, 4]), positive_rationals)
    return st.one_of(wl1, lps)


@given(st.data())
def test_holder_inequality(data):
    n = data.draw(st.integers(1, 4))
    rho = data.draw(specs(n))
    v = data.draw(st.lists(rationals, min_size=n, max_size=n))
    vstar = data.draw(st.lists(rationals, min_size=n, max_size=n))
    pairing = abs(sum(a * b for a, b in zip(v, vstar)))
    bound = dual_norm(rho, vstar) * seminorm_eval(rho, Polynomial.linear(v))
    assert float(pairing) <= float(bound) * (1 + 1e-10) + 1e-12


@given(st.data())
def test_dual_of_scaled_norm(data):
    n = data.draw(st.integers(1, 4))
    r = data.draw(st.lists(positive_rationals, min_size=n, max_size=n))
    i = data.draw(st.integers(1, 5))
    vstar = data.draw(st.lists(rationals, min_size=n, max_size=n))
    assert dual_norm(weighted_l1(r).scaled(i), vstar) == dual_norm(weighted_l1(r), vstar) / i
    assert dual_norm(lp(1).scaled(i), vstar) == dual_norm(lp(1), vstar) / i


@given(st.data())
def test_dominance_sound_and_sharp(data):
    n = data.draw(st.integers(1, 4))
    rho1, rho2 = data.draw(specs(n)), data.draw(specs(n))
    dom = dominates(rho1, rho2, n=n)
    c = float(dom.constant)
    for _ in range(20):
        v = Polynomial.linear(data.draw(st.lists(rationals, min_size=n, max_size=n)))
        assert c * float(seminorm_eval(rho1, v)) >= float(seminorm_eval(rho2, v)) * (1 - 1e-10)
    w = Polynomial.linear(dom.witness)
    assert math.isclose(c * float(seminorm_eval(rho1, w)), float(seminorm_eval(rho2, w)), rel_tol=1e-9)
