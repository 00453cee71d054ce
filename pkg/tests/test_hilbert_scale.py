from fractions import Fraction

from hypothesis import given, strategies as st

from symmoment.hilbert_scale import (
    HilbertScalePoint,
    dominance_witness,
    hs_norm,
    hs_norm_squared,
    nuclear_partner,
    quasi_nuclear_embedding,
    scale_dominance,
)

points = st.dictionaries(st.integers(0, 20), st.fractions(-5, 5, max_denominator=7), max_size=6).map(HilbertScalePoint)
indices = st.fractions(-3, 3, max_denominator=4)


def test_norm_examples():
    e0, e1 = HilbertScalePoint({0: 1}), HilbertScalePoint({1: 1})
    assert all(hs_norm(s, e0) == 1 for s in (-2, 0, Fraction(1, 2), 3))
    assert hs_norm(1, e1) == 2
    assert hs_norm(5, HilbertScalePoint()) == 0


def test_quasi_nuclear_examples():
    assert quasi_nuclear_embedding(1, 0)
    assert not quasi_nuclear_embedding(0.4, 0)
    assert not quasi_nuclear_embedding(2, 2)
    assert not quasi_nuclear_embedding(0.5, 0)


def test_dominance_examples():
    assert scale_dominance(2, 1) and scale_dominance(1, 1) and not scale_dominance(0, 1)
    w = dominance_witness(0, 1)
    assert hs_norm(1, w) > hs_norm(0, w)
    assert dominance_witness(2, 1) is None


def test_json_round_trip():
    v = HilbertScalePoint({3: Fraction(1, 2), 0: 2})
    assert HilbertScalePoint.from_json(v.to_json()) == v


@given(points, st.integers(-3, 3), st.integers(0, 3))
def test_monotone_in_s(v, s1, gap):
    assert hs_norm_squared(s1, v) <= hs_norm_squared(s1 + gap, v)


@given(indices)
def test_nuclearity_chain(s1):
    assert quasi_nuclear_embedding(nuclear_partner(s1), s1)


@given(points, st.integers(-2, 2))
def test_truncation_to_support(v, s):
    assert hs_norm_squared(s, v.truncate(v.coords)) == hs_norm_squared(s, v)
