"""Exact arithmetic in quadratic number fields Q(sqrt(d)).

Elements are ``a + b*sqrt(d)`` with rational ``a``, ``b``. The rational field
is the degenerate tag ``d = 1`` (``b`` is then forced to zero). Elements
carrying different tags never combine silently; lift explicitly with
:meth:`FieldElement.lift`.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from numbers import Rational

__all__ = [
    "FieldElement",
    "FieldMismatchError",
    "is_squarefree",
    "rational_sqrt",
    "squarefree_part",
]


class FieldMismatchError(ValueError):
    """Raised when elements of different quadratic fields are combined."""


def is_squarefree(d: int) -> bool:
    if d == 0:
        return False
    m = abs(d)
    p = 2
    while p * p <= m:
        if m % (p * p) == 0:
            return False
        p += 1
    return True


def squarefree_part(m: int) -> tuple[int, int]:
    """Split a nonzero integer as ``m = k**2 * d`` with ``d`` squarefree.

    Returns ``(d, k)`` with ``k > 0``; the sign stays with ``d``.
    """
    if m == 0:
        raise ValueError("zero has no squarefree part")
    sign = -1 if m < 0 else 1
    m = abs(m)
    k = 1
    p = 2
    while p * p <= m:
        while m % (p * p) == 0:
            m //= p * p
            k *= p
        p += 1
    return sign * m, k


def rational_sqrt(q: Fraction) -> Fraction | None:
    """Exact square root of a nonnegative rational, or None if irrational."""
    if q < 0:
        return None
    n, m = q.numerator, q.denominator
    rn, rm = isqrt(n), isqrt(m)
    if rn * rn == n and rm * rm == m:
        return Fraction(rn, rm)
    return None


def rational_root(q: Fraction, k: int) -> Fraction | None:
    """Exact real k-th root of a rational, or None."""
    if k < 1:
        raise ValueError("root index must be positive")
    if q == 0:
        return Fraction(0)
    neg = q < 0
    if neg and k % 2 == 0:
        return None
    n, m = abs(q.numerator), q.denominator
    rn, rm = _int_root(n, k), _int_root(m, k)
    if rn is None or rm is None:
        return None
    root = Fraction(rn, rm)
    return -root if neg else root


def _int_root(n: int, k: int) -> int | None:
    if n < 2:
        return n
    # integer Newton iteration for floor(n ** (1/k))
    x = 1 << ((n.bit_length() + k - 1) // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    return x if x**k == n else None


def _as_fraction(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, (int, Rational)):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v)
    raise TypeError(f"cannot interpret {v!r} as a rational")


class FieldElement:
    """An element ``a + b*sqrt(d)`` of Q(sqrt(d)). Immutable."""

    __slots__ = ("_a", "_b", "_d")

    def __init__(self, a=0, b=0, d: int = 1) -> None:
        a = _as_fraction(a)
        b = _as_fraction(b)
        if d == 0 or not is_squarefree(d):
            raise ValueError(f"field tag d={d} must be a nonzero squarefree integer")
        if d == 1 and b != 0:
            raise ValueError("rational field (d=1) requires b = 0")
        object.__setattr__(self, "_a", a)
        object.__setattr__(self, "_b", b)
        object.__setattr__(self, "_d", d)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    @property
    def a(self) -> Fraction:
        return self._a

    @property
    def b(self) -> Fraction:
        return self._b

    @property
    def d(self) -> int:
        return self._d

    @classmethod
    def sqrt_of(cls, d: int) -> FieldElement:
        """The generator ``sqrt(d)``."""
        return cls(0, 1, d)

    @classmethod
    def _raw(cls, a: Fraction, b: Fraction, d: int) -> FieldElement:
        obj = object.__new__(cls)
        object.__setattr__(obj, "_a", a)
        object.__setattr__(obj, "_b", b)
        object.__setattr__(obj, "_d", d)
        return obj

    # coercion ---------------------------------------------------------

    def _coerce(self, other) -> FieldElement:
        if isinstance(other, FieldElement):
            if other._d != self._d:
                raise FieldMismatchError(
                    f"cannot combine elements of Q(sqrt({self._d})) and Q(sqrt({other._d}))"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return FieldElement._raw(Fraction(other), Fraction(0), self._d)
        return NotImplemented

    def lift(self, d: int) -> FieldElement:
        """Embed a rational element into Q(sqrt(d))."""
        if d == self._d:
            return self
        if self._b != 0:
            raise FieldMismatchError(f"{self} is not rational; cannot move it to d={d}")
        return FieldElement(self._a, 0, d)

    def to_rational(self) -> FieldElement:
        """Re-tag as an element of Q; fails unless the irrational part vanishes."""
        if self._b != 0:
            raise FieldMismatchError(f"{self} is not rational")
        return FieldElement._raw(self._a, Fraction(0), 1)

    # predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return self._a == 0 and self._b == 0

    def is_rational(self) -> bool:
        return self._b == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    # arithmetic -------------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement._raw(self._a + o._a, self._b + o._b, self._d)

    __radd__ = __add__

    def __neg__(self) -> FieldElement:
        return FieldElement._raw(-self._a, -self._b, self._d)

    def __pos__(self) -> FieldElement:
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement._raw(self._a - o._a, self._b - o._b, self._d)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self._b == 0:
            return FieldElement._raw(self._a * o._a, self._a * o._b, self._d)
        if o._b == 0:
            return FieldElement._raw(self._a * o._a, self._b * o._a, self._d)
        return FieldElement._raw(
            self._a * o._a + self._d * self._b * o._b,
            self._a * o._b + self._b * o._a,
            self._d,
        )

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        return self._a * self._a - self._d * self._b * self._b

    def trace(self) -> Fraction:
        return 2 * self._a

    def inverse(self) -> FieldElement:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self._b == 0:
            return FieldElement._raw(1 / self._a, Fraction(0), self._d)
        n = self.norm()
        return FieldElement._raw(self._a / n, -self._b / n, self._d)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o._b == 0:
            if o._a == 0:
                raise ZeroDivisionError("division by zero")
            return FieldElement._raw(self._a / o._a, self._b / o._a, self._d)
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, k: int) -> FieldElement:
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = FieldElement._raw(Fraction(1), Fraction(0), self._d)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> FieldElement:
        """The Galois involution sqrt(d) -> -sqrt(d)."""
        if self._b == 0:
            return self
        return FieldElement._raw(self._a, -self._b, self._d)

    def sqrt(self) -> FieldElement | None:
        """A square root inside the same field, or None if there is none."""
        a, b, d = self._a, self._b, self._d
        if b == 0:
            r = rational_sqrt(a)
            if r is not None:
                return FieldElement._raw(r, Fraction(0), d)
            if d != 1:
                r = rational_sqrt(a / d)
                if r is not None:
                    return FieldElement._raw(Fraction(0), r, d)
            return None
        # (x + y sqrt d)^2 = a + b sqrt d  =>  x^2 = (a +- sqrt(N)) / 2
        s = rational_sqrt(self.norm())
        if s is None:
            return None
        for x2 in ((a + s) / 2, (a - s) / 2):
            x = rational_sqrt(x2)
            if x is not None and x != 0:
                y = b / (2 * x)
                cand = FieldElement._raw(x, y, d)
                if cand * cand == self:
                    return cand
        return None

    def root(self, k: int) -> FieldElement | None:
        """A k-th root inside the field, or None when none is found.

        Even indices go through repeated square roots. Odd roots are exact
        for rational elements only; an irrational element yields None.
        """
        if k < 1:
            raise ValueError("root index must be positive")
        if k == 1 or self.is_zero():
            return self
        if k % 2 == 0:
            r = self.sqrt()
            if r is None:
                return None
            for cand in (r, -r):
                got = cand.root(k // 2)
                if got is not None:
                    return got
            return None
        if self._b == 0:
            r = rational_root(self._a, k)
            if r is not None:
                return FieldElement._raw(r, Fraction(0), self._d)
        return None

    # comparison / hashing ---------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self._d == other._d and self._a == other._a and self._b == other._b
        if isinstance(other, (int, Fraction)):
            return self._b == 0 and self._a == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._b == 0:
            return hash(self._a)
        return hash((self._a, self._b, self._d))

    def sort_key(self) -> tuple[Fraction, Fraction]:
        return (self._a, self._b)

    def __repr__(self) -> str:
        return f"FieldElement({self._a!s}, {self._b!s}, d={self._d})"

    def __str__(self) -> str:
        if self._b == 0:
            return str(self._a)
        rad = f"sqrt({self._d})"
        if self._b == 1:
            tail = rad
        elif self._b == -1:
            tail = "-" + rad
        else:
            tail = f"{self._b}*{rad}"
        if self._a == 0:
            return tail
        if tail.startswith("-"):
            return f"{self._a} - {tail[1:]}"
        return f"{self._a} + {tail}"
