"""Exact checks on polynomials: critical values, the Shabat property,
passports, affine equivalence and fields of definition."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .algebra import (
    FieldElement,
    FieldMismatchError,
    Poly,
    bivariate_resultant_in_y,
    squarefree_decomposition,
)
from .algebra.field import squarefree_part as int_squarefree_part
from .algebra.poly import squarefree_part as poly_squarefree_part
from .dessins import Passport

__all__ = [
    "Equivalence",
    "ExtensionRequired",
    "FieldReport",
    "NotShabatError",
    "ShabatReport",
    "critical_value_poly",
    "critical_values",
    "equivalent",
    "field_report",
    "is_shabat",
    "passport_from_poly",
    "profile",
]


class NotShabatError(ValueError):
    """Passport extraction needs exactly two in-field critical values."""


@dataclass(frozen=True)
class ExtensionRequired:
    """Critical values that do not all lie in the working field.

    ``count`` distinct values are the roots of ``poly``. When ``count == 2``
    over Q, ``extension_d`` names the quadratic field that holds them.
    """

    count: int
    poly: Poly
    extension_d: int | None = None

    def __len__(self) -> int:
        return self.count

    def __str__(self) -> str:
        where = f"Q(sqrt({self.extension_d}))" if self.extension_d else "an extension"
        return f"<{self.count} critical values in {where}: roots of {self.poly}>"


def critical_value_poly(p: Poly) -> Poly:
    """Monic squarefree S(y) whose roots are the distinct critical values."""
    if p.degree < 1:
        raise ValueError("critical values need a nonconstant polynomial")
    if p.degree == 1:
        return Poly.const(1, p.d)
    return poly_squarefree_part(bivariate_resultant_in_y(p)).monic()


def critical_values(p: Poly) -> list[FieldElement] | ExtensionRequired:
    """Distinct finite critical values, sorted, or a marker when they are
    not all expressible in the coefficient field."""
    s = critical_value_poly(p)
    if s.degree <= 0:
        return []
    if s.degree == 1:
        return [-s.coeff(0)]
    if s.degree > 2:
        return ExtensionRequired(s.degree, s)
    # y^2 + b y + c
    b, c = s.coeff(1), s.coeff(0)
    disc = b * b - 4 * c
    root = disc.sqrt()
    if root is None:
        ext = None
        if disc.is_rational():
            ext = int_squarefree_part(disc.a.numerator * disc.a.denominator)[0]
        return ExtensionRequired(2, s, ext)
    vals = [(-b + root) / 2, (-b - root) / 2]
    return sorted(vals, key=FieldElement.sort_key)


def profile(p: Poly, c) -> tuple[int, ...]:
    """Root multiplicities of p - c as a descending partition of deg p."""
    parts = []
    for f, m in squarefree_decomposition(p - c):
        parts.extend([m] * f.degree)
    return tuple(sorted(parts, reverse=True))


@dataclass
class ShabatReport:
    is_shabat: bool
    critical_values: list[FieldElement] | ExtensionRequired
    black_profile: tuple[int, ...] | None = None
    white_profile: tuple[int, ...] | None = None
    field_disc: int = 1
    degenerate: bool = False
    degree: int = 0

    @property
    def count(self) -> int:
        return len(self.critical_values)

    def to_json(self) -> dict:
        cv = self.critical_values
        values = str(cv) if isinstance(cv, ExtensionRequired) else [str(v) for v in cv]
        return {
            "shabat": self.is_shabat,
            "degree": self.degree,
            "count": self.count,
            "critical_values": values,
            "black_profile": list(self.black_profile) if self.black_profile else None,
            "white_profile": list(self.white_profile) if self.white_profile else None,
            "field_disc": self.field_disc,
            "degenerate": self.degenerate,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)


def _ordered(values: list[FieldElement]) -> list[FieldElement]:
    # 0 first when present, so the black vertices are the roots of P
    return sorted(values, key=lambda v: (not v.is_zero(), v.sort_key()))


def is_shabat(p: Poly) -> ShabatReport:
    """At most two distinct finite critical values.

    With exactly two in-field values the black profile belongs to the value
    0 if present (else the smaller one). A single critical value is
    accepted but flagged degenerate.
    """
    cv = critical_values(p)
    rep = ShabatReport(is_shabat=len(cv) <= 2, critical_values=cv, field_disc=p.d, degree=p.degree)
    if isinstance(cv, ExtensionRequired) or not rep.is_shabat:
        return rep
    if len(cv) == 2:
        c1, c2 = _ordered(cv)
        rep.critical_values = [c1, c2]
        rep.black_profile = profile(p, c1)
        rep.white_profile = profile(p, c2)
    elif len(cv) == 1:
        rep.degenerate = True
        rep.black_profile = profile(p, cv[0])
        rep.white_profile = (1,) * p.degree
    else:
        rep.degenerate = True
    return rep


def passport_from_poly(p: Poly) -> Passport:
    rep = is_shabat(p)
    if not rep.is_shabat:
        raise NotShabatError(f"{rep.count} critical values; not Shabat")
    if isinstance(rep.critical_values, ExtensionRequired):
        raise NotShabatError(f"critical values lie outside the field: {rep.critical_values}")
    if rep.count != 2:
        raise NotShabatError(f"passport extraction needs exactly 2 critical values, got {rep.count}")
    return Passport(rep.black_profile, rep.white_profile, p.degree)


# equivalence ------------------------------------------------------------------


@dataclass(frozen=True)
class Equivalence:
    """Outcome of the affine-equivalence test ``q(x) = A p(a x + b) + B``.

    ``equivalent`` is decided over the complex numbers. The witness is
    given when ``a`` can be chosen in the coefficient field.
    """

    equivalent: bool
    A: FieldElement | None = None
    B: FieldElement | None = None
    a: FieldElement | None = None
    b: FieldElement | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.equivalent

    @property
    def witness(self):
        if self.a is None:
            return None
        return (self.A, self.B, self.a, self.b)


def _common_field(p: Poly, q: Poly) -> tuple[Poly, Poly]:
    if p.d == q.d:
        return p, q
    if p.is_rational():
        return p.lift(q.d), q
    if q.is_rational():
        return p, q.lift(p.d)
    raise FieldMismatchError(f"polynomials over Q(sqrt({p.d})) and Q(sqrt({q.d}))")


def _centered(p: Poly) -> tuple[Poly, FieldElement]:
    # p(x - h) has no x^(n-1) term
    n = p.degree
    h = p.coeff(n - 1) / (n * p.lc())
    return p.compose(Poly.x(p.d) - h), h


def _bezout(nums: list[int]) -> tuple[int, list[int]]:
    g, coefs = 0, []
    for v in nums:
        if g == 0:
            g, coefs = v, [1]
            continue
        # extended Euclid on (g, v)
        old_r, r, old_s, s, old_t, t = g, v, 1, 0, 0, 1
        while r:
            qt = old_r // r
            old_r, r = r, old_r - qt * r
            old_s, s = s, old_s - qt * s
            old_t, t = t, old_t - qt * t
        coefs = [c * old_s for c in coefs] + [old_t]
        g = old_r
    return g, coefs


def equivalent(p: Poly, q: Poly) -> Equivalence:
    """Decide whether ``q(x) = A p(a x + b) + B`` for some A, a != 0.

    Both are shifted to centered form; then a must satisfy
    a^(n-k) = (p_k q_n)/(q_k p_n) for every surviving k, which pins a^g
    (g the gcd of the exponents) through a Bezout combination.
    """
    if p.degree != q.degree:
        raise ValueError(f"degree mismatch: {p.degree} vs {q.degree}")
    n = p.degree
    if n < 2:
        raise ValueError("equivalence needs degree >= 2")
    p, q = _common_field(p, q)
    d = p.d
    pc, hp = _centered(p)
    qc, hq = _centered(q)
    pn, qn = pc.lc(), qc.lc()

    exps, ratios = [], []
    for k in range(1, n - 1):
        pk, qk = pc.coeff(k), qc.coeff(k)
        if pk.is_zero() != qk.is_zero():
            return Equivalence(False, reason=f"coefficient of x^{k} vanishes for only one polynomial")
        if pk.is_zero():
            continue
        exps.append(n - k)
        ratios.append((pk * qn) / (qk * pn))  # = a^(n-k)

    one = FieldElement(1, 0, d)
    if not exps:
        a = one
    else:
        g, coefs = _bezout(exps)
        lam = one
        for ratio, c in zip(ratios, coefs):
            lam = lam * ratio**c
        for e, ratio in zip(exps, ratios):
            if lam ** (e // g) != ratio:
                return Equivalence(False, reason=f"coefficient ratio at x^{n - e} is inconsistent")
        a = lam.root(g)
        if a is None:
            return Equivalence(True, reason=f"a^{g} = {lam} has no root in the field; equivalent over C only")
    A = qn / (pn * a**n)
    B = qc.coeff(0) - A * pc.coeff(0)
    # q(x) = qc(x + hq) = A pc(a x + a hq) + B = A p(a x + a hq - hp) + B
    b = a * hq - hp
    check = p.compose(Poly([b, a], d)) * A + Poly.const(B, d)
    if check != q:
        return Equivalence(False, reason="witness failed the exact check")
    return Equivalence(True, A, B, a, b)


# fields of definition -------------------------------------------------------------


def _f1_disc(r: int, s: int, t: int) -> int:
    return int_squarefree_part(-r * s * t * (r + s + t))[0]


TABLE_FIELDS = {
    "F1": "Q(sqrt(-rst(r+s+t)))",
    "F2": "Q",
    "F3": "Q or a real quadratic field",
    "F4": "Q(sqrt(-3))",
    "F5": "Q",
    "F6": "Q(sqrt(6))",
    "F7": "Q(sqrt(-14))",
    "F8": "Q(sqrt(21))",
    "F9": "Q(sqrt(-3))",
    "F10": "Q",
    "F11": "Q",
    "F12": "Q(sqrt(273))",
}

_TABLE_D = {"F2": 1, "F4": -3, "F5": 1, "F6": 6, "F7": -14, "F8": 21, "F9": -3, "F10": 1, "F11": 1, "F12": 273}


def field_label(d: int) -> str:
    return "Q" if d == 1 else f"Q(sqrt({d}))"


@dataclass
class FieldReport:
    family: str | None
    field_disc: int
    relation: str
    table_entry: str | None
    consistent: bool | None
    note: str = ""

    @property
    def label(self) -> str:
        return field_label(self.field_disc)

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "field": self.label,
            "field_disc": self.field_disc,
            "relation": self.relation,
            "table_entry": self.table_entry,
            "consistent": self.consistent,
            "note": self.note,
        }


def field_of(*polys: Poly) -> int:
    """Squarefree d of the smallest field holding all coefficients."""
    ds = {p.d for p in polys if not p.is_rational()}
    if not ds:
        return 1
    if len(ds) > 1:
        raise FieldMismatchError(f"coefficients in several fields: {sorted(ds)}")
    return ds.pop()


def pair_relation(p1: Poly, p2: Poly) -> str:
    if p1.is_rational() and p2.is_rational():
        return "both_rational"
    if p1.conjugate() == p2:
        return "galois_conjugate"
    return "unrelated"


def field_report(pair, family: str | None = None, params: tuple = ()) -> FieldReport:
    """Field from the coefficients actually present, compared with the tabulated field.

    ``pair`` is anything with ``p1``/``p2`` polynomials. A disagreement is
    reported in ``consistent``/``note``, never hidden.
    """
    d = field_of(pair.p1, pair.p2)
    rel = pair_relation(pair.p1, pair.p2)
    family = (family or getattr(pair, "family", None) or "").upper() or None
    if not params:
        params = tuple(getattr(pair, "params", ()) or ())
    entry = TABLE_FIELDS.get(family) if family else None
    consistent, note = None, ""
    if family == "F1" and len(params) == 3:
        want = _f1_disc(*params)
        consistent = d == want
        note = f"sqrt(-rst(r+s+t)) reduces to sqrt({want})"
    elif family == "F3":
        consistent = d == 1 or d > 0
        note = "rational" if d == 1 else "real quadratic"
    elif family in _TABLE_D:
        want = _TABLE_D[family]
        consistent = d == want
        if not consistent:
            note = f"table lists {field_label(want)}, constructed pair lives in {field_label(d)}"
    return FieldReport(family, d, rel, entry, consistent, note)
