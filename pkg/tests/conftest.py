from __future__ import annotations

from fractions import Fraction

import sympy
from hypothesis import strategies as st

from dessin_forge.algebra import FieldElement, Poly

X = sympy.Symbol("x")


def to_sympy(p: Poly):
    """Poly -> sympy expression in x (sqrt(d) kept symbolic)."""
    root = sympy.sqrt(p.d)
    return sum(
        (sympy.Rational(c.a.numerator, c.a.denominator) + sympy.Rational(c.b.numerator, c.b.denominator) * root) * X**k
        for k, c in enumerate(p.coeffs)
    )


def to_sympy_elem(c: FieldElement):
    return sympy.Rational(c.a.numerator, c.a.denominator) + sympy.Rational(c.b.numerator, c.b.denominator) * sympy.sqrt(c.d)


small_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def elements(draw, d: int = 1):
    a = draw(small_fractions)
    b = draw(small_fractions) if d != 1 else Fraction(0)
    return FieldElement(a, b, d)


@st.composite
def polys(draw, d: int = 1, max_degree: int = 4, nonzero: bool = True):
    deg = draw(st.integers(0, max_degree))
    cs = [draw(elements(d)) for _ in range(deg + 1)]
    p = Poly(cs, d)
    if nonzero and p.is_zero():
        p = Poly.const(1, d)
    return p


def pytest_terminal_summary(terminalreporter):
    from .test_acceptance import ACCEPTANCE_LINES

    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
