"""Acceptance criteria 1-8.

Each test records exactly one PASS/FAIL line (printed, and repeated in the
terminal summary). All checks are exact: the tolerance is zero everywhere.
Runtime budgets are asserted as stated per criterion.
"""

from __future__ import annotations

import time
from fractions import Fraction
from functools import lru_cache
from math import factorial, gcd, isqrt

from dessin_forge.algebra import FieldElement, Poly
from dessin_forge.dessins import Passport, count_trees, family_passport, lemma_generators
from dessin_forge.families import (
    brush,
    brush_integral_constants,
    build,
    build_F2,
    build_F2_composed,
    double_factorial,
    f3_discriminant,
)
from dessin_forge.monodromy import (
    PermGroup,
    expected_order,
    family_dessin,
    is_primitive,
    sporadic_component,
    structure_check,
)
from dessin_forge.verify import critical_value_poly, critical_values, equivalent, is_shabat, passport_from_poly

from .test_dessins import brute_force_counts

ACCEPTANCE_LINES: list[str] = []


def record(n: int, ok: bool, detail: str) -> None:
    line = f"ACCEPTANCE {n}: {'PASS' if ok else 'FAIL'} - {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


@lru_cache(maxsize=None)
def pair(family: str, *params):
    return build(family, *params)


# 1. family construction ------------------------------------------------------------------

CASES_1 = [
    ("F1", (1, 2, 3)), ("F1", (3, 5, 6)), ("F1", (2, 3, 4)),
    ("F2", (1, 2)), ("F2", (3, 5)),
    ("F3", (3, 5)), ("F3", (5, 6)),
    ("F4", (4, 5)),
    ("F5", (2,)), ("F5", (4,)),
    ("F6", (2,)), ("F6", (3,)),
    ("F9", ()), ("F10", ()), ("F11", ()), ("F12", ()),
]


def test_criterion_1_family_construction():
    t0 = time.perf_counter()
    bad = []
    for family, params in CASES_1:
        want = family_passport(family, *params)
        for i, p in enumerate(pair(family, *params).polys, 1):
            rep = is_shabat(p)
            if not (rep.is_shabat and rep.count == 2):
                bad.append(f"{family}{params} tree {i}: {rep.count} critical values")
                continue
            got = passport_from_poly(p)
            if not got.matches(want):
                bad.append(f"{family}{params} tree {i}: passport {got} != {want}")
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 60
    record(
        1, ok,
        f"{2 * len(CASES_1)} polynomials Shabat with 2 values and family passport (tolerance 0); "
        f"{elapsed:.1f}s (budget 60s)" + (f"; failures: {bad}" if bad else ""),
    )


# 2. enumeration counts ----------------------------------------------------------------------


def test_criterion_2_enumeration_counts():
    t0 = time.perf_counter()
    checked, bad = 0, []

    def expect(pp: Passport, count: int, tag: str):
        nonlocal checked
        checked += 1
        got = count_trees(pp)
        if got != count:
            bad.append(f"{tag} {pp}: {got} != {count}")

    for r in range(1, 13):
        for s in range(r + 1, 13):
            for t in range(s + 1, 13):
                if r + s + t <= 12:
                    expect(family_passport("F1", r, s, t), 2, "F1")
    for r in range(1, 6):
        for s in range(r + 1, 6):
            if 2 * (r + s) <= 12:
                expect(family_passport("F2", r, s), 2, "F2")
    for r in range(1, 5):
        for s in range(1, 6):
            if r != s and 3 * r + 2 * s <= 12:
                expect(family_passport("F3", r, s), 2, "F3")
    for fam in ("F7", "F8", "F9", "F10"):
        expect(family_passport(fam), 2, fam)
    degenerate = Passport.parse("2,2,1;3,1,1;5")
    expect(degenerate, 1, "degenerate F1")
    oracle = brute_force_counts(5).get((degenerate.alpha, degenerate.beta), 0)
    if oracle != 1:
        bad.append(f"brute-force oracle gives {oracle} for {degenerate}")
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 30
    record(2, ok, f"{checked} passports counted exactly, brute-force oracle agrees on [2,2,1;3,1,1;5]; "
                  f"{elapsed:.1f}s (budget 30s)" + (f"; failures: {bad}" if bad else ""))


# 3. monodromy orders ---------------------------------------------------------------------------


def test_criterion_3_monodromy_orders():
    t0 = time.perf_counter()
    want = {
        ("F7", 1, ()): 168, ("F7", 2, ()): 168,
        ("F8", 1, ()): 2520, ("F8", 2, ()): 2520,
        ("F11", 1, ()): 7372800, ("F11", 2, ()): 26336378880000,
        ("F1", 1, (1, 2, 3)): 720, ("F1", 2, (1, 2, 3)): 720,
        ("F10", 1, ()): 14400, ("F10", 2, ()): 7200,
    }
    for i in (1, 2):
        want[("F3", i, (1, 2))] = expected_order("F3", i, 1, 2).order
    bad = []
    for (fam, i, params), order in want.items():
        got = PermGroup.of_dessin(family_dessin(fam, i, *params)).order()
        if got != order:
            bad.append(f"{fam} tree {i}: {got} != {order}")
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 120
    record(3, ok, f"{len(want)} group orders exact (F11: 7372800 / 26336378880000; F10: 14400 / 7200, advisory); "
                  f"{elapsed:.1f}s (budget 120s)" + (f"; failures: {bad}" if bad else ""))


# 4. F1 order sweep ------------------------------------------------------------------------------


def test_criterion_4_f1_order_sweep():
    bad, checked = [], 0
    for r in range(1, 7):
        for s in range(r + 1, 7):
            for t in range(s + 1, 7):
                n = r + s + t
                d = gcd(gcd(r, s), t)
                m = n // d
                formula = (factorial(m) // 2) ** d * (2 * d if m % 2 == 0 else d)
                for i in (1, 2):
                    got = PermGroup.of_dessin(lemma_generators("F1", i, r, s, t)).order()
                    checked += 1
                    if got != formula:
                        bad.append(f"({r},{s},{t}) tree {i}: {got} != {formula}")
    record(4, not bad, f"{checked} F1 groups (1<=r<s<t<=6) equal ((n/d)!/2)^d * (2d or d), exact"
                       + (f"; mismatches: {bad}" if bad else ""))


# 5. Ritt / primitivity ------------------------------------------------------------------------------


def test_criterion_5_ritt():
    # (family, params, trees, inner degree)
    cases = [
        ("F4", (4, 5), (1, 2), 8),
        ("F5", (2,), (1, 2), 3), ("F5", (4,), (1, 2), 7),
        ("F6", (2,), (1, 2), 3), ("F6", (3,), (1, 2), 5),
        ("F10", (), (1, 2), 5),
        ("F11", (), (1,), 10),
        ("F12", (), (1, 2), 13),
        ("F2", (1, 2), (1,), 2), ("F2", (2, 3), (1,), 2), ("F2", (3, 5), (1,), 2),  # R(x^2) realizes T21
    ]
    bad = []
    for fam, params, trees, inner in cases:
        for i in trees:
            rep = structure_check(family_dessin(fam, i, *params), fam, i, *params)
            if rep.primitive or inner not in rep.block_sizes:
                bad.append(f"{fam}{params} tree {i}: primitive={rep.primitive}, block sizes {rep.block_sizes}, inner {inner}")
    r_primitive = is_primitive(PermGroup.of_dessin(sporadic_component("F11", 2)))
    if not r_primitive:
        bad.append("F11 component R is imprimitive")
    record(5, not bad, "all compositions imprimitive with a block of the inner degree; F11's degree-10 R primitive"
                       + (f"; failures: {bad}" if bad else ""))


# 6. Galois pairing ------------------------------------------------------------------------------------


def test_criterion_6_galois_pairing():
    conj = [("F1", (1, 2, 3)), ("F1", (3, 5, 6)), ("F1", (2, 3, 4)), ("F3", (3, 5)), ("F4", (4, 5)),
            ("F6", (2,)), ("F6", (3,)), ("F9", ()), ("F12", ())]
    fixed = [("F2", (1, 2)), ("F2", (3, 5)), ("F5", (2,)), ("F5", (4,)), ("F10", ()), ("F11", ()), ("F3", (5, 6))]
    bad = []
    for fam, params in conj:
        pr = pair(fam, *params)
        if pr.p1.is_rational() or pr.p1.conjugate() != pr.p2:
            bad.append(f"{fam}{params} not an exact conjugate pair")
    for fam, params in fixed:
        pr = pair(fam, *params)
        if not all(p.is_rational() and p.conjugate() == p for p in pr.polys):
            bad.append(f"{fam}{params} not fixed by conjugation")
    disc = f3_discriminant(5, 6)
    if disc < 0 or isqrt(disc) ** 2 != disc:
        bad.append("disc(D) for F3 (5,6) is not a perfect square")
    record(6, not bad, f"{len(conj)} conjugate pairs and {len(fixed)} fixed pairs exact; F3(5,6) disc(D) a perfect square"
                       + (f"; failures: {bad}" if bad else ""))


# 7. brush critical values ----------------------------------------------------------------------------------------


def test_criterion_7_brushes():
    bad = []
    for p in range(1, 6):
        ratio = Fraction(double_factorial(2 * p), double_factorial(2 * p + 1))
        K, C = brush_integral_constants(p, "f5_0_minus1")
        want = {FieldElement(K * (-1) ** i * ratio + C) for i in (0, 1)}
        got = set(critical_values(brush(p, p, "f5_0_minus1")))
        if got != want:
            bad.append(f"f5 p={p}: {got} != {want}")
        # fifth-roots form: K lies in a biquadratic field, so compare the
        # monic polynomial whose roots are K(-1)^i (2p)!!/(2p+1)!! + C
        K2, C = brush_integral_constants(p, "f6_fifth_roots")
        y = Poly.x(5)
        S = y * y - y * (2 * C) + Poly.const(C * C - K2 * (ratio * ratio), 5)
        if critical_value_poly(brush(p, p, "f6_fifth_roots")) != S.monic():
            bad.append(f"f6 p={p}: critical-value polynomial differs")
    zero_one = {FieldElement(0), FieldElement(1)}
    for p in range(1, 5):
        for q in range(1, 5):
            got = set(critical_values(brush(p, q, "unit_01")))
            if got != zero_one:
                bad.append(f"rrBrush ({p},{q}): {got}")
    record(7, not bad, "integral-form values K(-1)^i(2p)!!/(2p+1)!!+C for p<=5 under both constant sets; "
                       "Jacobi brush values exactly {0,1} for p,q<=4" + (f"; failures: {bad}" if bad else ""))


# 8. equivalence ----------------------------------------------------------------------------------------------------


def test_criterion_8_equivalence():
    bad = []
    for r, s in [(1, 2), (2, 3), (3, 5)]:
        e = equivalent(build_F2(r, s).p1, build_F2_composed(r, s))
        if not e:
            bad.append(f"({r},{s}): {e.reason}")
    record(8, not bad, "T21 and R(x^2) equivalent for (1,2), (2,3), (3,5)" + (f"; failures: {bad}" if bad else ""))
