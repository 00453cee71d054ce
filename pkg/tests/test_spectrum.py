from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from symmoment.algebra import evaluate
from symmoment.seminorm import FamilySpec, dual_norm, lp, weighted_l1
from symmoment.spectrum import (
    Character,
    SpectrumBall,
    sample_ball,
    spectrum_contains,
    spectrum_union_contains,
)

from conftest import polynomials, positive_rationals, rational_points


def test_contains_examples():
    assert spectrum_contains(SpectrumBall(weighted_l1([1, 1]), 2), (2, -2))
    assert spectrum_contains(SpectrumBall(lp(3), 1), (0, 0, 0))
    assert spectrum_contains(SpectrumBall(lp(2), 1), (0.6, 0.8))
    assert spectrum_contains(SpectrumBall(lp(1), 1), (1, -1))
    assert not spectrum_contains(SpectrumBall(lp(1), 1), (Fraction(101, 100), 0))


def test_sample_examples():
    ball = SpectrumBall(weighted_l1([1, 1]), 1)
    pts = sample_ball(ball, 4)
    assert {(1, 1), (1, -1), (-1, 1), (-1, -1)} <= set(pts)
    assert len(sample_ball(ball, 1)) == 1
    assert sample_ball(SpectrumBall(lp(2), 1), 20, seed=4, n=3) == sample_ball(SpectrumBall(lp(2), 1), 20, seed=4, n=3)


def test_union_examples():
    fam = FamilySpec((weighted_l1([1, 1]),))
    assert spectrum_union_contains(fam, [1, 2], (2, 0))
    assert spectrum_union_contains(fam, [1], (0, 0))
    assert not spectrum_union_contains(fam, [1], (3, 0))


def test_radius_must_be_positive():
    with pytest.raises(ValueError):
        SpectrumBall(lp(2), 0)


def test_high_dimensional_sampling_is_bounded():
    ball = SpectrumBall(weighted_l1([1] * 20), 1)
    pts = sample_ball(ball, 50, seed=1)
    assert len(pts) == 50 and all(spectrum_contains(ball, p) for p in pts)


@given(st.data())
def test_characters_are_multiplicative(data):
    n = data.draw(st.integers(1, 3))
    f, g = data.draw(polynomials(nvars=n)), data.draw(polynomials(nvars=n))
    chi = Character(data.draw(rational_points(n)))
    assert chi(f * g) == chi(f) * chi(g)


@given(st.data())
def test_ball_monotone_and_scaling_identity(data):
    n = data.draw(st.integers(1, 3))
    rho = data.draw(st.one_of(
        st.builds(weighted_l1, st.lists(positive_rationals, min_size=n, max_size=n)),
        st.builds(lambda p: lp(p, nvars=n), st.sampled_from([1, 2, 3])),
    ))
    v = data.draw(rational_points(n, bound=5))
    i = data.draw(st.integers(1, 4))
    j = i + data.draw(st.integers(0, 4))
    inside = spectrum_contains(SpectrumBall(rho, i), v)
    if inside:
        assert spectrum_contains(SpectrumBall(rho, j), v)
    assert inside == (float(dual_norm(rho.scaled(i), v)) <= 1 + 1e-12)


@given(st.sampled_from([1, 1.5, 2, 3]), st.integers(1, 5), st.integers(0, 100), st.integers(1, 3))
def test_samples_lie_in_the_ball(p, n, seed, radius):
    ball = SpectrumBall(lp(p, nvars=n), radius)
    for pt in sample_ball(ball, 16, seed=seed, n=n):
        assert spectrum_contains(ball, pt)
