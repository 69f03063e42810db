"""Dense univariate polynomials over Q(sqrt(d)).

Coefficients are stored in ascending degree order and all share one field
tag. The zero polynomial has an empty coefficient tuple and degree -1.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .field import FieldElement, FieldMismatchError

__all__ = [
    "Poly",
    "arith",
    "bivariate_resultant_in_y",
    "derivative",
    "galois_conjugate",
    "gcd",
    "resultant",
    "squarefree_decomposition",
    "sylvester_resultant",
]


def _elem(c, d: int) -> FieldElement:
    if isinstance(c, FieldElement):
        if c.d != d:
            raise FieldMismatchError(f"coefficient {c} is not in Q(sqrt({d}))")
        return c
    return FieldElement._raw(Fraction(c), Fraction(0), d)


class Poly:
    """Immutable polynomial with FieldElement coefficients.

    >>> x = Poly.x()
    >>> str((x + 1) ** 2)
    'x^2 + 2*x + 1'
    """

    __slots__ = ("_c", "_d")

    def __init__(self, coeffs: Iterable = (), d: int | None = None) -> None:
        coeffs = list(coeffs)
        if d is None:
            tags = {c.d for c in coeffs if isinstance(c, FieldElement)}
            if len(tags) > 1:
                raise FieldMismatchError(f"mixed field tags {sorted(tags)}")
            d = tags.pop() if tags else 1
        cs = [_elem(c, d) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        object.__setattr__(self, "_c", tuple(cs))
        object.__setattr__(self, "_d", d)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def _raw(cls, cs: Sequence[FieldElement], d: int) -> Poly:
        cs = list(cs)
        while cs and cs[-1].is_zero():
            cs.pop()
        obj = object.__new__(cls)
        object.__setattr__(obj, "_c", tuple(cs))
        object.__setattr__(obj, "_d", d)
        return obj

    @classmethod
    def x(cls, d: int = 1) -> Poly:
        return cls([0, 1], d)

    @classmethod
    def const(cls, c, d: int = 1) -> Poly:
        if isinstance(c, FieldElement):
            d = c.d
        return cls([c], d)

    @classmethod
    def from_roots(cls, roots: Iterable, d: int = 1) -> Poly:
        p = cls([1], d)
        x = cls.x(d)
        for r in roots:
            p = p * (x - r)
        return p

    # basic accessors --------------------------------------------------

    @property
    def coeffs(self) -> tuple[FieldElement, ...]:
        return self._c

    @property
    def d(self) -> int:
        return self._d

    @property
    def degree(self) -> int:
        return len(self._c) - 1

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def lc(self) -> FieldElement:
        if not self._c:
            return FieldElement._raw(Fraction(0), Fraction(0), self._d)
        return self._c[-1]

    def coeff(self, k: int) -> FieldElement:
        if 0 <= k < len(self._c):
            return self._c[k]
        return FieldElement._raw(Fraction(0), Fraction(0), self._d)

    def is_rational(self) -> bool:
        return all(c.is_rational() for c in self._c)

    def lift(self, d: int) -> Poly:
        """Embed a rational polynomial into Q(sqrt(d))[x]."""
        if d == self._d:
            return self
        return Poly._raw([c.lift(d) for c in self._c], d)

    def to_rational(self) -> Poly:
        """Re-tag as a polynomial over Q; every coefficient must be rational."""
        return Poly._raw([c.to_rational() for c in self._c], 1)

    def monic(self) -> Poly:
        if not self._c:
            return self
        inv = self._c[-1].inverse()
        return Poly._raw([c * inv for c in self._c], self._d)

    # arithmetic -------------------------------------------------------

    def _coerce(self, other) -> Poly:
        if isinstance(other, Poly):
            if other._d != self._d:
                raise FieldMismatchError(
                    f"cannot combine polynomials over Q(sqrt({self._d})) and Q(sqrt({other._d}))"
                )
            return other
        if isinstance(other, (int, Fraction, FieldElement)):
            return Poly._raw([_elem(other, self._d)], self._d)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        a, b = self._c, o._c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly._raw(out, self._d)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly._raw([-c for c in self._c], self._d)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        a, b = self._c, o._c
        if not a or not b:
            return Poly._raw([], self._d)
        if len(b) == 1:
            s = b[0]
            return Poly._raw([c * s for c in a], self._d)
        if len(a) == 1:
            s = a[0]
            return Poly._raw([c * s for c in b], self._d)
        return Poly._raw(_mul_lists(a, b, self._d), self._d)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Poly:
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = Poly._raw([_elem(1, self._d)], self._d)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, FieldElement)):
            s = _elem(other, self._d)
            inv = s.inverse()
            return Poly._raw([c * inv for c in self._c], self._d)
        return NotImplemented

    def __divmod__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return _divmod(self, o)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other: Poly) -> Poly:
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError("division is not exact")
        return q

    def __call__(self, v):
        """Evaluate at a field element, or compose with a polynomial."""
        if isinstance(v, Poly):
            return self.compose(v)
        v = _elem(v, self._d) if not isinstance(v, FieldElement) else v
        acc = FieldElement._raw(Fraction(0), Fraction(0), self._d)
        for c in reversed(self._c):
            acc = acc * v + c
        return acc

    def compose(self, inner: Poly) -> Poly:
        """``self(inner(x))`` by Horner's scheme."""
        inner = self._coerce(inner)
        acc = Poly._raw([], self._d)
        for c in reversed(self._c):
            acc = acc * inner + c
        return acc

    def derivative(self) -> Poly:
        return Poly._raw([c * k for k, c in enumerate(self._c) if k], self._d)

    def conjugate(self) -> Poly:
        return Poly._raw([c.conjugate() for c in self._c], self._d)

    def scale_arg(self, a) -> Poly:
        """``self(a*x)``."""
        a = _elem(a, self._d)
        out = []
        pw = _elem(1, self._d)
        for c in self._c:
            out.append(c * pw)
            pw = pw * a
        return Poly._raw(out, self._d)

    # comparison -------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self._d == other._d and self._c == other._c
        if isinstance(other, (int, Fraction, FieldElement)):
            if not self._c:
                return other == 0
            return len(self._c) == 1 and self._c[0] == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._d, self._c))

    def __repr__(self) -> str:
        return f"Poly({self}, d={self._d})"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        terms = []
        for k in range(len(self._c) - 1, -1, -1):
            c = self._c[k]
            if c.is_zero():
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if c.is_rational():
                a = c.a
                neg = a < 0
                mag = -a if neg else a
                if mono and mag == 1:
                    body = mono
                else:
                    body = f"{mag}*{mono}" if mono else f"{mag}"
            else:
                neg = False
                body = f"({c})*{mono}" if mono else f"({c})"
            terms.append(("-" if neg else "+", body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def _mul_lists(a, b, d):
    # separate rational and irrational parts; rational-only inputs skip the
    # radical bookkeeping, which dominates large compositions
    na, nb = len(a), len(b)
    if all(c.b == 0 for c in a) and all(c.b == 0 for c in b):
        ra = [c.a for c in a]
        rb = [c.a for c in b]
        out = [Fraction(0)] * (na + nb - 1)
        for i, x in enumerate(ra):
            if x == 0:
                continue
            for j, y in enumerate(rb):
                out[i + j] += x * y
        zero = Fraction(0)
        return [FieldElement._raw(v, zero, d) for v in out]
    aa = [c.a for c in a]
    ab = [c.b for c in a]
    ba = [c.a for c in b]
    bb = [c.b for c in b]
    oa = [Fraction(0)] * (na + nb - 1)
    ob = [Fraction(0)] * (na + nb - 1)
    for i in range(na):
        x, xb = aa[i], ab[i]
        for j in range(nb):
            y, yb = ba[j], bb[j]
            oa[i + j] += x * y + d * xb * yb
            ob[i + j] += x * yb + xb * y
    return [FieldElement._raw(oa[k], ob[k], d) for k in range(len(oa))]


def _divmod(p: Poly, q: Poly) -> tuple[Poly, Poly]:
    if not q._c:
        raise ZeroDivisionError("polynomial division by zero")
    d = p._d
    r = list(p._c)
    dq = len(q._c) - 1
    if len(r) - 1 < dq:
        return Poly._raw([], d), p
    inv = q._c[-1].inverse()
    qc = q._c
    out = [None] * (len(r) - dq)
    for k in range(len(r) - 1 - dq, -1, -1):
        c = r[k + dq] * inv
        out[k] = c
        if not c.is_zero():
            for j in range(dq):
                r[k + j] = r[k + j] - c * qc[j]
        r[k + dq] = FieldElement._raw(Fraction(0), Fraction(0), d)
    return Poly._raw(out, d), Poly._raw(r[:dq], d)


# module-level operations ----------------------------------------------


def arith(p: Poly, q: Poly, kind: str) -> Poly:
    """Binary operation by name: ``add``, ``sub``, ``mul`` or ``compose``."""
    if p.d != q.d:
        raise FieldMismatchError(f"field tags differ: {p.d} vs {q.d}")
    if kind == "add":
        return p + q
    if kind == "sub":
        return p - q
    if kind == "mul":
        return p * q
    if kind == "compose":
        return p.compose(q)
    raise ValueError(f"unknown operation {kind!r}")


def derivative(p: Poly) -> Poly:
    return p.derivative()


def galois_conjugate(v):
    """Apply sqrt(d) -> -sqrt(d) to a FieldElement or coefficient-wise to a Poly."""
    if isinstance(v, (Poly, FieldElement)):
        return v.conjugate()
    raise TypeError(f"cannot conjugate {type(v).__name__}")


def gcd(p: Poly, q: Poly) -> Poly:
    """Monic greatest common divisor (Euclid over the field)."""
    if p.d != q.d:
        raise FieldMismatchError(f"field tags differ: {p.d} vs {q.d}")
    if not p and not q:
        raise ValueError("gcd(0, 0) is undefined")
    a, b = p, q
    while b:
        a, b = b, a % b
    return a.monic()


def squarefree_decomposition(p: Poly) -> list[tuple[Poly, int]]:
    """Yun's algorithm: ``p = lc * prod f_i ** m_i`` with monic squarefree f_i.

    Factors are pairwise coprime and listed by increasing multiplicity.
    """
    if not p:
        raise ValueError("squarefree decomposition of zero")
    if p.degree == 0:
        return []
    f = p.monic()
    df = f.derivative()
    a = gcd(f, df)
    b = f.exact_div(a)
    c = df.exact_div(a)
    dd = c - b.derivative()
    out = []
    i = 1
    while b.degree > 0:
        a = gcd(b, dd)
        b = b.exact_div(a)
        c = dd.exact_div(a)
        dd = c - b.derivative()
        if a.degree > 0:
            out.append((a, i))
        i += 1
    return out


def squarefree_part(p: Poly) -> Poly:
    """Product of the distinct monic irreducible factors of p."""
    if not p:
        raise ValueError("squarefree part of zero")
    if p.degree <= 0:
        return Poly._raw([_elem(1, p.d)], p.d)
    return p.exact_div(gcd(p, p.derivative())).monic()


def resultant(p: Poly, q: Poly) -> FieldElement:
    """Resultant by the subresultant PRS.

    Sign convention: the determinant of the Sylvester matrix with the rows of
    ``p`` on top, i.e. ``lc(p)**deg(q) * prod q(root)`` over the roots of p.
    So ``resultant(x - a, x - b) == a - b``.
    """
    if p.d != q.d:
        raise FieldMismatchError(f"field tags differ: {p.d} vs {q.d}")
    if not p or not q:
        raise ValueError("resultant with the zero polynomial")
    d = p.d
    one = _elem(1, d)
    if p.degree == 0:
        return p.lc() ** q.degree
    if q.degree == 0:
        return q.lc() ** p.degree
    a, b = p, q
    s = one
    if a.degree < b.degree:
        a, b = b, a
        if a.degree % 2 == 1 and b.degree % 2 == 1:
            s = -s
    g = one
    h = one
    while True:
        delta = a.degree - b.degree
        if a.degree % 2 == 1 and b.degree % 2 == 1:
            s = -s
        r = _prem(a, b)
        if not r:
            return _elem(0, d)
        a = b
        b = r / (g * h**delta)
        g = a.lc()
        h = h ** (1 - delta) * g**delta
        if b.degree == 0:
            h = h ** (1 - a.degree) * b.lc() ** a.degree
            return s * h


def _prem(a: Poly, b: Poly) -> Poly:
    # pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b
    delta = a.degree - b.degree
    return (a * b.lc() ** (delta + 1)) % b


def sylvester_resultant(p: Poly, q: Poly) -> FieldElement:
    """Resultant as the Sylvester determinant (Gaussian elimination).

    Independent of :func:`resultant`; kept as a cross-check.
    """
    if p.d != q.d:
        raise FieldMismatchError(f"field tags differ: {p.d} vs {q.d}")
    m, n = p.degree, q.degree
    if m < 0 or n < 0:
        raise ValueError("resultant with the zero polynomial")
    d = p.d
    size = m + n
    if size == 0:
        return _elem(1, d)
    zero = _elem(0, d)
    rows = []
    pc = list(reversed(p.coeffs))
    qc = list(reversed(q.coeffs))
    for i in range(n):
        rows.append([zero] * i + pc + [zero] * (size - i - len(pc)))
    for i in range(m):
        rows.append([zero] * i + qc + [zero] * (size - i - len(qc)))
    return _det(rows, d)


def _det(rows, d):
    mat = [list(r) for r in rows]
    n = len(mat)
    det = _elem(1, d)
    for col in range(n):
        piv = next((r for r in range(col, n) if not mat[r][col].is_zero()), None)
        if piv is None:
            return _elem(0, d)
        if piv != col:
            mat[col], mat[piv] = mat[piv], mat[col]
            det = -det
        pv = mat[col][col]
        det = det * pv
        inv = pv.inverse()
        for r in range(col + 1, n):
            f = mat[r][col] * inv
            if f.is_zero():
                continue
            row, prow = mat[r], mat[col]
            for c in range(col, n):
                row[c] = row[c] - f * prow[c]
    return det


def bivariate_resultant_in_y(p: Poly) -> Poly:
    """``R(y) = Res_x(p(x) - y, p'(x))`` as a polynomial in y.

    The entries of the Sylvester matrix are affine in y, so R has degree
    ``deg p - 1``; it is recovered exactly by evaluating the scalar resultant
    at ``deg p`` integer nodes and interpolating. Its distinct roots are the
    critical values of p.
    """
    n = p.degree
    if n < 2:
        raise ValueError("need a polynomial of degree at least 2")
    dp = p.derivative()
    d = p.d
    nodes = list(range(n))
    values = [resultant(p - k, dp) for k in nodes]
    return _interpolate(nodes, values, d)


def _interpolate(nodes: list[int], values: list[FieldElement], d: int) -> Poly:
    # Newton divided differences on integer nodes
    n = len(nodes)
    coef = list(values)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (nodes[i] - nodes[i - j])
    y = Poly.x(d)
    out = Poly._raw([coef[-1]], d)
    for i in range(n - 2, -1, -1):
        out = out * (y - nodes[i]) + coef[i]
    return out
