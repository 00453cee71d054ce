from fractions import Fraction

from hypothesis import given, settings, strategies as st

from symmoment.algebra import Polynomial
from symmoment.modules2d import (
    Certificate,
    CertificateTerm,
    NotFound,
    PowerModule,
    archimedean_witness,
    certificate_search,
    jacobi_epsilon_check,
    pos_on_spectrum,
    xm_contains,
)
from symmoment.seminorm import weighted_l1
from symmoment.spectrum import SpectrumBall, sample_ball

x = Polynomial.variable(1, 1)
jacobi = PowerModule(1, (x, 1 - x))
sos1 = PowerModule(1, (), nvars=1)


def test_xm_examples():
    assert xm_contains(jacobi, (Fraction(1, 2),))
    assert not xm_contains(jacobi, (2,))
    assert xm_contains(sos1, (123,))
    assert not xm_contains(PowerModule(1, (x**2 - 1,)), (0,))


def test_certificate_examples():
    cert = certificate_search(sos1, x**2, 1)
    assert cert and cert.verify()
    assert [(t.coefficient, t.p, t.generator) for t in cert.terms] == [(1, x, 0)]

    res = certificate_search(sos1, Polynomial.constant(-1, 1), 2)
    assert isinstance(res, NotFound) and not res
    assert res.witness is not None and res.witness_value < 0

    cert = certificate_search(jacobi, x * (1 - x) + Fraction(1, 10), 3)
    assert cert and cert.verify() and cert.expand() == x * (1 - x) + Fraction(1, 10)


def test_jacobi_examples():
    assert jacobi_epsilon_check(jacobi, x * (1 - x), Fraction(1, 10), 3).verify()
    assert jacobi_epsilon_check(sos1, x**2, 5, 1).verify()
    res = jacobi_epsilon_check(sos1, Polynomial.constant(-1, 1), Fraction(1, 2), 2)
    assert not res and res.witness_value < 0


def test_spectrum_positivity_examples():
    ball = SpectrumBall(weighted_l1([1]), 1)
    pts = sample_ball(ball, 16)
    res = pos_on_spectrum(1 - x**2, sos1, ball, pts)
    assert res.min_value == 0 and abs(res.argmin[0]) == 1 and not res.disproof
    assert pos_on_spectrum(Polynomial.constant(1, 1), sos1, ball, pts).min_value == 1
    res = pos_on_spectrum(-(x**2), sos1, ball, pts)
    assert res.min_value == -1 and res.disproof


def test_archimedean_examples():
    x1, x2 = Polynomial.variables(2)
    res = archimedean_witness(PowerModule(1, (1 - x1**2, 1 - x2**2)), 2)
    assert res.k == 2 and res.certificate.verify()
    assert res.certificate.expand() == 2 - x1**2 - x2**2
    assert archimedean_witness(PowerModule(1, (1 - x1**2 - x2**2,)), 2).k == 1
    assert not archimedean_witness(sos1, 2, max_k=64)


def test_unsound_certificates_do_not_verify():
    bad = Certificate(sos1, x**2 + 1, (CertificateTerm(Fraction(1), x, 0),))
    assert not bad.verify()
    neg = Certificate(sos1, -(x**2), (CertificateTerm(Fraction(-1), x, 0),))
    assert not neg.verify()


@settings(max_examples=15)
@given(st.fractions(min_value=Fraction(1, 20), max_value=2, max_denominator=20),
       st.fractions(min_value=0, max_value=3, max_denominator=10))
def test_epsilon_monotonicity(eps, extra):
    cert = jacobi_epsilon_check(jacobi, x * (1 - x), eps, 3)
    if cert:
        bigger = cert.with_added_constant(extra)
        assert bigger.verify() and bigger.target == x * (1 - x) + eps + extra


@settings(max_examples=15)
@given(st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=4), min_size=1, max_size=4),
       st.fractions(min_value=0, max_value=1, max_denominator=10))
def test_character_consistency(coefs, t):
    # a certificate for a forces a >= 0 on X_M = [0, 1]
    a = Polynomial(1, {(k,): c for k, c in enumerate(coefs)}) + x * (1 - x)
    cert = certificate_search(jacobi, a, 3)
    if cert:
        assert cert.verify()
        assert a((t,)) >= 0
