from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import pytest
import sympy

from dessin_forge.algebra import FieldElement, Poly, squarefree_decomposition
from dessin_forge.dessins import DessinError, Passport, family_passport, lemma_generators, passport_of
from dessin_forge.families import (
    AlignmentError,
    FamilyParams,
    brush,
    build,
    build_F1,
    build_F2_composed,
    build_F3,
    build_F5,
    build_sporadic,
    compose_shabat,
    double_factorial,
    f2_R,
    f2_T21,
    f3_discriminant,
    f4_brush,
    jacobi,
    jacobi_convention,
)
from dessin_forge.verify import critical_values, equivalent, is_shabat, passport_from_poly

from .conftest import X, to_sympy, to_sympy_elem

x = Poly.x()


@lru_cache(maxsize=None)
def built(family: str, *params):
    return build(family, *params)


def values(p: Poly) -> set[FieldElement]:
    return set(critical_values(p))


def q(v) -> FieldElement:
    return FieldElement(Fraction(v))


# helpers ---------------------------------------------------------------------------------


def test_double_factorial():
    assert double_factorial(0) == 1
    assert double_factorial(-1) == 1
    assert double_factorial(5) == 15
    assert double_factorial(6) == 48


def test_jacobi_basics():
    assert jacobi(0, 3, 4) == Poly.const(1)
    assert jacobi_convention() in ("P(a,b;x)", "P(b,a;x)", "P(a,b;-x)", "P(b,a;-x)")
    assert values(brush(1, 1)) == {q(0), q(1)}


@pytest.mark.parametrize("n", range(0, 9))
def test_jacobi_degree_for_lemma_parameters(n):
    for p in range(1, 9):
        assert jacobi(n, -n - 1, p + 1).degree == n
    for r in range(2, 9):
        assert jacobi(n, -(n + 1), r).degree == n


def test_jacobi_against_sympy_standard():
    # the standard Jacobi polynomial at generic parameters, as a spot check
    from dessin_forge.families import _jacobi_standard

    for n, a, b in [(2, 1, 3), (3, 0, 2), (4, 2, 5)]:
        ours = to_sympy(_jacobi_standard(n, a, b))
        assert sympy.expand(ours - sympy.jacobi(n, a, b, X)) == 0


# brushes ------------------------------------------------------------------------------------


def test_brush_f5_small():
    p = brush(1, 1, "f5_0_minus1")
    assert p == (x**3 / 3 - x) * Fraction(3, 4) - Fraction(1, 2)
    assert values(p) == {q(0), q(-1)}


@pytest.mark.parametrize("p", range(1, 5))
@pytest.mark.parametrize("qq", range(1, 5))
def test_brush_unit_values(p, qq):
    b = brush(p, qq)
    assert values(b) <= {q(0), q(1)}
    assert b.degree == p + qq + 1


def test_brush_rejects_unsupported():
    with pytest.raises(ValueError):
        brush(2, 3, "f5_0_minus1")
    with pytest.raises(ValueError):
        brush(0, 1)


@pytest.mark.parametrize("p", range(1, 6))
def test_brush_forms_equivalent(p):
    assert equivalent(brush(p, p), brush(p, p, "f5_0_minus1"))


# composition ----------------------------------------------------------------------------------


def test_compose_identity_outer():
    inner = x**3 - 3 * x
    assert compose_shabat(x, inner) == inner


def test_compose_misaligned_raises():
    with pytest.raises(AlignmentError):
        compose_shabat(x**2, x**2 - 3)


def test_compose_passport_degree():
    p = compose_shabat(f2_R(1, 2), x**2)
    assert passport_from_poly(p).n == 6


# F1 ---------------------------------------------------------------------------------------------


def test_f1_a_from_discriminant_oracle():
    r, s, t = 1, 2, 3
    pair = build_F1(r, s, t)
    for p in pair.polys:
        (f, m), = [(f, m) for f, m in squarefree_decomposition(p) if m == t]
        a = -f.coeff(0)
        A = to_sympy_elem(a)
        Q = r * (X - 1) * (X - A) + s * X * (X - A) + t * X * (X - 1)
        assert sympy.simplify(sympy.discriminant(sympy.expand(Q), X)) == 0
        assert a.d == -1 and a.a == 0 and abs(a.b) == Fraction(4, 3)
        assert p(FieldElement(0, 0, -1)).is_zero() and p(FieldElement(1, 0, -1)).is_zero()
    assert pair.repairs  # exponent and numerator readings are recorded


def test_f1_passport_3_5_6():
    pair = built("F1", 3, 5, 6)
    for p in pair.polys:
        assert passport_from_poly(p).matches(Passport.parse("6,5,3;3,1^11;14"))


# F2 ------------------------------------------------------------------------------------------------


def test_f2_t21_example():
    p = f2_T21(1, 2)
    assert p == (x**2 - Fraction(1, 2)) * (x**2 + 1) ** 2
    rep = is_shabat(p)
    assert rep.is_shabat and rep.count == 2


@pytest.mark.parametrize("r,s", [(1, 2), (3, 5), (2, 5)])
def test_f2_profiles(r, s):
    pair = built("F2", r, s)
    for p in pair.polys:
        assert sorted((m for f, m in squarefree_decomposition(p) for _ in range(f.degree)), reverse=True) == sorted(
            [r, r, s, s], reverse=True
        )
        assert pair.relation == "both_rational"
    if (r, s) == (3, 5):
        assert is_shabat(pair.p1).white_profile == (4,) + (1,) * 12


@pytest.mark.parametrize("r,s", [(1, 2), (2, 3), (3, 5)])
def test_f2_composed(r, s):
    R = f2_R(r, s)
    assert values(R) == {q(0), q(1)}
    comp = build_F2_composed(r, s)
    assert comp.degree == 2 * (r + s)
    assert passport_from_poly(comp).matches(family_passport("F2", r, s))


# F3 --------------------------------------------------------------------------------------------------


def test_f3_fields():
    assert sympy.sqrt(f3_discriminant(5, 6)).is_Integer
    assert not sympy.sqrt(f3_discriminant(3, 5)).is_Integer
    assert build_F3(5, 6).relation == "both_rational"
    pair = build_F3(3, 5)
    assert pair.relation == "galois_conjugate" and pair.field_disc == 627


def test_f3_black_profile():
    r, s = 3, 5
    for p in build_F3(r, s).polys:
        assert passport_from_poly(p).matches(family_passport("F3", r, s))
        assert sorted((m for f, m in squarefree_decomposition(p) for _ in range(f.degree)), reverse=True) == [5, 5, 3, 3, 3]


# F4 / F5 / F6 ---------------------------------------------------------------------------------------------


def test_f4_small():
    pair = built("F4", 2, 3)
    assert pair.p1.degree == 3 * (2 + 3 - 1)
    assert pair.field_disc == -3 and pair.relation == "galois_conjugate"
    assert values(f4_brush(2, 3)) == {q(0), q(1)}


def test_f5_r2():
    P = brush(1, 1, "f5_0_minus1")
    assert P == (x**3 / 3 - x) * Fraction(3, 4) - Fraction(1, 2)
    pair = build_F5(2)
    assert pair.relation == "both_rational"
    assert all(p.is_rational() for p in pair.polys)
    fam = family_passport("F5", 2)
    rep = is_shabat(pair.p1)
    assert sorted([rep.black_profile, rep.white_profile]) == sorted([fam.alpha, fam.beta])


def test_f5_opposite_sign_equivalent():
    from dessin_forge.families import _f5_alt_sign_brush, f5_Q1

    for r in (2, 3):
        alt = _f5_alt_sign_brush(r)
        ours = brush(r - 1, r - 1, "f5_0_minus1")
        assert compose_shabat(f5_Q1(), alt) == compose_shabat(f5_Q1(), ours)


def test_f6_small():
    pair = built("F6", 2)
    assert pair.p1.degree == 5 * 3
    assert pair.p1.conjugate() == pair.p2
    assert pair.field_disc == 5


# sporadic ------------------------------------------------------------------------------------------------------


def test_f9_profiles():
    pair = build_sporadic("F9")
    for p in pair.polys:
        rep = is_shabat(p)
        assert {rep.black_profile, rep.white_profile} == {(2, 2, 2, 2, 1), (3, 3, 1, 1, 1)}


def test_f10_rational_degree_10():
    pair = build_sporadic("F10")
    assert pair.relation == "both_rational"
    assert [p.degree for p in pair.polys] == [10, 10]
    assert pair.labels == ("Q2(R)", "Q1(P)")


def test_f11_degrees():
    pair = built("F11")
    assert [p.degree for p in pair.polys] == [20, 20]
    assert pair.repairs


def test_f7_f8_not_constructed():
    with pytest.raises(ValueError):
        build_sporadic("F7")
    with pytest.raises(ValueError):
        build_sporadic("F13")


# invariants ------------------------------------------------------------------------------------------------------

SMALL = [
    ("F1", (1, 2, 3)), ("F1", (1, 2, 4)), ("F1", (1, 3, 4)),
    ("F2", (1, 2)), ("F2", (1, 3)), ("F2", (2, 3)),
    ("F3", (1, 2)), ("F3", (2, 1)), ("F3", (1, 3)),
    ("F4", (2, 3)), ("F4", (2, 4)), ("F4", (3, 4)),
    ("F5", (2,)), ("F5", (3,)), ("F5", (4,)),
    ("F6", (2,)), ("F6", (3,)),
]


@pytest.mark.parametrize("family,params", SMALL)
def test_pairs_are_shabat_with_family_passport(family, params):
    pair = built(family, *params)
    want = family_passport(family, *params)
    for p in pair.polys:
        rep = is_shabat(p)
        assert rep.is_shabat and rep.count == 2
        assert passport_from_poly(p).matches(want)
    if pair.relation == "galois_conjugate":
        assert pair.p1.conjugate() == pair.p2
    else:
        assert pair.p1.conjugate() == pair.p1 and pair.p2.conjugate() == pair.p2


@pytest.mark.parametrize("family,params", SMALL)
def test_generators_match_polynomial_passports(family, params):
    pair = built(family, *params)
    for i, p in enumerate(pair.polys, 1):
        assert passport_of(lemma_generators(family, i, *params)).matches(passport_from_poly(p))


def test_family_params_validation():
    fp = FamilyParams("f1", 1, 2, 3)
    assert fp.family == "F1" and fp.n == 6
    with pytest.raises(DessinError):
        FamilyParams("F2", 2, 2)


def test_report_document():
    rep = built("F1", 1, 2, 3).report()
    assert rep["field"] == "Q(sqrt(-1))"
    assert rep["repairs"]
    assert all(t["shabat"] and t["passport_matches"] for t in rep["trees"])
