"""Shared hypothesis strategies."""

from fractions import Fraction

from hypothesis import settings, strategies as st

from symmoment.algebra import Polynomial

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
positive_rationals = st.fractions(min_value=Fraction(1, 8), max_value=8, max_denominator=8)


def exponents(nvars: int, max_degree: int):
    return st.lists(st.integers(0, max_degree), min_size=nvars, max_size=nvars).filter(
        lambda e: sum(e) <= max_degree
    ).map(tuple)


@st.composite
def polynomials(draw, nvars: int | None = None, max_degree: int = 4, max_terms: int = 6, nonnegative: bool = False):
    n = nvars if nvars is not None else draw(st.integers(1, 3))
    coef = positive_rationals if nonnegative else rationals
    terms = draw(st.dictionaries(exponents(n, max_degree), coef, max_size=max_terms))
    return Polynomial(n, terms)


@st.composite
def polynomial_pairs(draw, max_degree: int = 3, nonnegative: bool = False):
    n = draw(st.integers(1, 3))
    f = draw(polynomials(nvars=n, max_degree=max_degree, nonnegative=nonnegative))
    g = draw(polynomials(nvars=n, max_degree=max_degree, nonnegative=nonnegative))
    return f, g


@st.composite
def rational_points(draw, n: int, bound: int = 3):
    return tuple(draw(st.fractions(min_value=-bound, max_value=bound, max_denominator=10)) for _ in range(n))


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "SUMMARY", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
