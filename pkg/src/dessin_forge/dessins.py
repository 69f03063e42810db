"""Permutations, passports and plane-tree dessins.

Products act left to right: ``(p * q)(x) == q(p(x))``. Under this convention
the generator templates below multiply to the standard n-cycle (1, 2, ..., n).
"""

from __future__ import annotations

import json
import os
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Dessin",
    "DessinError",
    "EnumerationLimitError",
    "Passport",
    "Permutation",
    "compose_perm",
    "count_trees",
    "check_params",
    "cycle_type",
    "enumerate_trees",
    "family_passport",
    "lemma_generators",
    "passport_of",
    "subdivide",
]

MAX_N_ENV = "DESSIN_FORGE_MAX_N"
DEFAULT_MAX_N = 16


class DessinError(ValueError):
    """Invalid permutation pair, passport or family parameters."""


class EnumerationLimitError(RuntimeError):
    """Passport exceeds the enumeration scale guard."""


class Permutation:
    """A bijection of {1..n}, stored as its 1-based image list."""

    __slots__ = ("_img",)

    def __init__(self, images: Iterable[int]) -> None:
        img = tuple(int(v) for v in images)
        n = len(img)
        if sorted(img) != list(range(1, n + 1)):
            raise DessinError(f"not a permutation of 1..{n}: {img}")
        self._img = img

    @classmethod
    def _trusted(cls, img: tuple[int, ...]) -> Permutation:
        p = object.__new__(cls)
        p._img = img
        return p

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls._trusted(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> Permutation:
        img = list(range(1, n + 1))
        seen: set[int] = set()
        for cyc in cycles:
            for i, v in enumerate(cyc):
                if not 1 <= v <= n or v in seen:
                    raise DessinError(f"bad cycle {tuple(cyc)} on {n} points")
                seen.add(v)
                img[v - 1] = cyc[(i + 1) % len(cyc)]
        return cls._trusted(tuple(img))

    @classmethod
    def long_cycle(cls, n: int) -> Permutation:
        return cls.from_cycles(n, [list(range(1, n + 1))])

    @property
    def images(self) -> tuple[int, ...]:
        return self._img

    @property
    def n(self) -> int:
        return len(self._img)

    def __call__(self, x: int) -> int:
        return self._img[x - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose_perm(self, other)

    def __pow__(self, k: int) -> Permutation:
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, v in enumerate(self._img):
            inv[v - 1] = i + 1
        return Permutation._trusted(tuple(inv))

    def conjugate_by(self, g: Permutation) -> Permutation:
        """``g^-1 * self * g`` (relabel every point x as g(x))."""
        img = [0] * self.n
        for x in range(1, self.n + 1):
            img[g(x) - 1] = g(self(x))
        return Permutation._trusted(tuple(img))

    def cycles(self, include_fixed: bool = True) -> list[tuple[int, ...]]:
        seen = [False] * (self.n + 1)
        out = []
        for start in range(1, self.n + 1):
            if seen[start]:
                continue
            cyc = []
            x = start
            while not seen[x]:
                seen[x] = True
                cyc.append(x)
                x = self(x)
            if include_fixed or len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def is_identity(self) -> bool:
        return all(v == i + 1 for i, v in enumerate(self._img))

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self._img == other._img

    def __hash__(self) -> int:
        return hash(self._img)

    def __repr__(self) -> str:
        return f"Permutation({list(self._img)})"

    def __str__(self) -> str:
        cyc = self.cycles(include_fixed=False)
        if not cyc:
            return "()"
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cyc)


def compose_perm(p: Permutation, q: Permutation) -> Permutation:
    """Left-to-right product: apply p, then q."""
    if p.n != q.n:
        raise DessinError(f"size mismatch: {p.n} vs {q.n}")
    qi = q.images
    return Permutation._trusted(tuple(qi[v - 1] for v in p.images))


def cycle_type(p: Permutation) -> tuple[int, ...]:
    """Descending cycle lengths, fixed points included."""
    return tuple(sorted((len(c) for c in p.cycles()), reverse=True))


# passports ---------------------------------------------------------------


def _parse_partition(text: str) -> list[int]:
    parts: list[int] = []
    for tok in text.split(","):
        tok = tok.strip()
        if not tok:
            raise DessinError(f"empty part in {text!r}")
        if "^" in tok:
            base, mult = tok.split("^", 1)
            parts.extend([int(base)] * int(mult))
        else:
            parts.append(int(tok))
    return parts


def _fmt_partition(parts: Sequence[int]) -> str:
    out = []
    for value, mult in sorted(Counter(parts).items(), key=lambda kv: -kv[0]):
        out.append(str(value) if mult == 1 else f"{value}^{mult}")
    return ",".join(out)


@dataclass(frozen=True)
class Passport:
    alpha: tuple[int, ...]
    beta: tuple[int, ...]
    n: int

    def __post_init__(self) -> None:
        a = tuple(sorted((int(v) for v in self.alpha), reverse=True))
        b = tuple(sorted((int(v) for v in self.beta), reverse=True))
        object.__setattr__(self, "alpha", a)
        object.__setattr__(self, "beta", b)
        if self.n < 1:
            raise DessinError("passport degree must be positive")
        if any(v < 1 for v in a + b):
            raise DessinError("partition parts must be positive")
        if sum(a) != self.n or sum(b) != self.n:
            raise DessinError(f"partitions {a} and {b} do not both sum to n={self.n}")

    @classmethod
    def parse(cls, text: str) -> Passport:
        """Read ``"3,5,6;3,1^11;14"`` (brackets optional)."""
        body = text.strip().strip("[]")
        pieces = body.split(";")
        if len(pieces) != 3:
            raise DessinError(f"passport needs three ';'-separated fields: {text!r}")
        try:
            return cls(tuple(_parse_partition(pieces[0])), tuple(_parse_partition(pieces[1])), int(pieces[2]))
        except ValueError as exc:
            if isinstance(exc, DessinError):
                raise
            raise DessinError(f"cannot parse passport {text!r}: {exc}") from exc

    def is_tree(self) -> bool:
        return len(self.alpha) + len(self.beta) == self.n + 1

    def swapped(self) -> Passport:
        return Passport(self.beta, self.alpha, self.n)

    def matches(self, other: Passport) -> bool:
        """Equality up to exchanging the two colors."""
        return self == other or self == other.swapped()

    def __str__(self) -> str:
        return f"[{_fmt_partition(self.alpha)};{_fmt_partition(self.beta)};{self.n}]"


# dessins -----------------------------------------------------------------


@dataclass(frozen=True)
class Dessin:
    """A plane tree given by its rotation permutations (sigma0, sigma1)."""

    sigma0: Permutation
    sigma1: Permutation

    def __post_init__(self) -> None:
        if self.sigma0.n != self.sigma1.n:
            raise DessinError("sigma0 and sigma1 act on different point sets")
        n = self.n
        c0 = len(self.sigma0.cycles())
        c1 = len(self.sigma1.cycles())
        if c0 + c1 != n + 1:
            raise DessinError(f"not a tree: {c0} + {c1} vertex cycles for {n} edges")
        inf = self.sigma0 * self.sigma1
        if len(inf.cycles()) != 1:
            raise DessinError("sigma0*sigma1 is not an n-cycle")
        if not _transitive(n, (self.sigma0, self.sigma1)):
            raise DessinError("generators are not transitive")

    @property
    def n(self) -> int:
        return self.sigma0.n

    @property
    def sigma_inf(self) -> Permutation:
        return self.sigma0 * self.sigma1

    def relabel(self, g: Permutation) -> Dessin:
        return Dessin(self.sigma0.conjugate_by(g), self.sigma1.conjugate_by(g))

    def normalized(self, start: int = 1) -> Dessin:
        """Relabel so that sigma0*sigma1 == (1, 2, ..., n), keeping ``start`` as 1."""
        inf = self.sigma_inf
        g = [0] * self.n
        x = start
        for k in range(1, self.n + 1):
            g[x - 1] = k
            x = inf(x)
        return self.relabel(Permutation._trusted(tuple(g)))

    def swap_colors(self) -> Dessin:
        """Exchange black and white without reflecting the embedding."""
        return Dessin(self.sigma1, self.sigma0).normalized()

    def to_json(self) -> dict:
        return {"n": self.n, "sigma0": list(self.sigma0.images), "sigma1": list(self.sigma1.images)}

    @classmethod
    def from_json(cls, doc: dict) -> Dessin:
        try:
            n = int(doc["n"])
            s0 = Permutation(doc["sigma0"])
            s1 = Permutation(doc["sigma1"])
        except (KeyError, TypeError) as exc:
            raise DessinError(f"malformed dessin document: {exc}") from exc
        if s0.n != n or s1.n != n:
            raise DessinError(f"declared n={n} disagrees with permutation sizes")
        return cls(s0, s1)

    @classmethod
    def load(cls, path: str | Path) -> Dessin:
        return cls.from_json(json.loads(Path(path).read_text()))

    def __str__(self) -> str:
        return f"sigma0={self.sigma0} sigma1={self.sigma1}"


def _transitive(n: int, gens: Sequence[Permutation]) -> bool:
    seen = {1}
    stack = [1]
    while stack:
        x = stack.pop()
        for g in gens:
            y = g(x)
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == n


def passport_of(d: Dessin) -> Passport:
    return Passport(cycle_type(d.sigma0), cycle_type(d.sigma1), d.n)


def subdivide(d: Dessin) -> Dessin:
    """Composition with the 2-star: every edge gets a white midpoint.

    Edge e of the input becomes edges 2e-1 (black half) and 2e (white half);
    both old vertex colors become black, the new midpoints are white.
    """
    n = d.n
    s0 = [0] * (2 * n)
    s1 = [0] * (2 * n)
    for e in range(1, n + 1):
        s0[2 * e - 2] = 2 * d.sigma0(e) - 1
        s0[2 * e - 1] = 2 * d.sigma1(e)
        s1[2 * e - 2] = 2 * e
        s1[2 * e - 1] = 2 * e - 1
    return Dessin(Permutation(s0), Permutation(s1)).normalized()


# family passports and generator templates ---------------------------------

SPORADIC_PASSPORTS = {
    "F7": "3^2,1;2^2,1^3;7",
    "F8": "3,2^2;2^2,1^3;7",
    "F9": "3^2,1^3;2^4,1;9",
    "F10": "3,2^2,1^3;2^5;10",
    "F11": "4^3,1^8;2^10;20",
    "F12": "5^3,1^11;2^13;26",
}

INFINITE_FAMILIES = ("F1", "F2", "F3", "F4", "F5", "F6")
ALL_FAMILIES = INFINITE_FAMILIES + tuple(SPORADIC_PASSPORTS)


def family_passport(family: str, r: int | None = None, s: int | None = None, t: int | None = None) -> Passport:
    """The passport of a family at the given parameters (validated)."""
    family = family.upper()
    if family in SPORADIC_PASSPORTS:
        return Passport.parse(SPORADIC_PASSPORTS[family])
    check_params(family, r, s, t)
    if family == "F1":
        n = r + s + t
        return Passport((r, s, t), (3,) + (1,) * (n - 3), n)
    if family == "F2":
        n = 2 * r + 2 * s
        return Passport((r, r, s, s), (4,) + (1,) * (n - 4), n)
    if family == "F3":
        n = 3 * r + 2 * s
        return Passport((r, r, r, s, s), (5,) + (1,) * (n - 5), n)
    if family == "F4":
        p = r + s - 1
        n = 3 * p
        return Passport((r, s) + (1,) * (n - r - s), (3,) * p, n)
    if family == "F5":
        p = 2 * r - 1
        n = 4 * p
        return Passport((r, r) + (1,) * (n - 2 * r), (4,) * p, n)
    if family == "F6":
        p = 2 * r - 1
        n = 5 * p
        return Passport((r, r) + (1,) * (n - 2 * r), (5,) * p, n)
    raise DessinError(f"unknown family {family!r}")


def check_params(family: str, r: int | None, s: int | None = None, t: int | None = None) -> None:
    """Validate family parameters; raise DessinError if the family would not have two trees."""
    family = family.upper()
    need = {"F1": 3, "F2": 2, "F3": 2, "F4": 2, "F5": 1, "F6": 1}
    if family not in need:
        if family in SPORADIC_PASSPORTS:
            return
        raise DessinError(f"unknown family {family!r}")
    vals = [r, s, t][: need[family]]
    if any(v is None for v in vals):
        raise DessinError(f"{family} needs {need[family]} integer parameter(s)")
    if any(v < 1 for v in vals):
        raise DessinError(f"{family} parameters must be positive, got {vals}")
    if family == "F1" and len({r, s, t}) < 3:
        raise DessinError("F1 needs pairwise distinct r, s, t")
    if family in ("F2", "F3") and r == s:
        raise DessinError(f"{family} needs r != s")
    if family in ("F2", "F4") and not r < s:
        raise DessinError(f"{family} needs r < s")
    if family in ("F4", "F5", "F6") and r < 2:
        # F4 with r = 1: the degree-r vertex is a leaf and only one tree exists
        raise DessinError(f"{family} needs r >= 2")


def _block_cycles(sizes: Sequence[int]) -> list[list[int]]:
    out, start = [], 1
    for k in sizes:
        out.append(list(range(start, start + k)))
        start += k
    return out


def lemma_generators(family: str, tree_index: int, r: int | None = None, s: int | None = None, t: int | None = None) -> Dessin:
    """Labelled generators for the two trees of F1..F6.

    The result has sigma0 of the family's black type, sigma1 of its white
    type, and sigma0*sigma1 == (1, ..., n). F1's two trees are mirror images
    and share the same template for both indices.
    """
    family = family.upper()
    if tree_index not in (1, 2):
        raise DessinError(f"tree index must be 1 or 2, got {tree_index}")
    check_params(family, r, s, t)
    target = family_passport(family, r, s, t)
    n = target.n

    if family == "F1":
        s0 = _block_cycles([r, s, t])
        s1 = [[1, r + 1, r + s + 1]]
    elif family == "F2":
        if tree_index == 1:  # (r, s, r, s) around the white vertex
            s0 = _block_cycles([r, s, r, s])
            s1 = [[1, r + 1, r + s + 1, 2 * r + s + 1]]
        else:  # (r, r, s, s)
            s0 = _block_cycles([r, r, s, s])
            s1 = [[1, r + 1, 2 * r + 1, 2 * r + s + 1]]
    elif family == "F3":
        if tree_index == 1:  # (r, r, r, s, s)
            s0 = _block_cycles([r, r, r, s, s])
            s1 = [[1, r + 1, 2 * r + 1, 3 * r + 1, 3 * r + s + 1]]
        else:  # (r, r, s, r, s)
            s0 = _block_cycles([r, r, s, r, s])
            s1 = [[1, r + 1, 2 * r + 1, 2 * r + s + 1, 3 * r + s + 1]]
    elif family == "F4":
        # template with colors exchanged: 3-cycles first, then swap
        if tree_index == 1:
            white = [[3 * i + 1, 3 * i + 2, 3 * i + 3] for i in range(r - 1)]
            white.append([3 * r - 2, n - 1, n])
            white += [[j, j + 1, j + 2] for j in range(3 * r - 1, n - 3, 3)]
            black = [list(range(1, 3 * r - 1, 3)), list(range(3 * r - 1, n, 3))]
        else:
            white = [[3 * i + 1, 3 * i + 2, 3 * i + 3] for i in range(r - 1)]
            white.append([3 * r - 2, 3 * r - 1, n])
            white += [[j, j + 1, j + 2] for j in range(3 * r, n - 2, 3)]
            black = [list(range(1, 3 * r - 1, 3)), list(range(3 * r, n + 1, 3))]
        return _finish(n, black, white, target, swap=False)
    elif family == "F5":
        white = _block_cycles([4] * (n // 4))
        second = 4 * r - 1 if tree_index == 1 else 4 * r - 2
        black = [list(range(1, 4 * r - 2, 4)), [second] + list(range(4 * r + 1, n, 4))]
        return _finish(n, black, white, target, swap=False)
    elif family == "F6":
        white = _block_cycles([5] * (n // 5))
        second = 5 * r - 2 if tree_index == 1 else 5 * r - 3
        black = [list(range(1, 5 * r - 3, 5)), [second] + list(range(5 * r + 1, n, 5))]
        return _finish(n, black, white, target, swap=False)
    else:
        raise DessinError(f"no generator template for {family}")
    return _finish(n, s0, s1, target, swap=False)


def _finish(n, black, white, target: Passport, swap: bool) -> Dessin:
    d = Dessin(Permutation.from_cycles(n, black), Permutation.from_cycles(n, white))
    if swap:
        d = d.swap_colors()
    if d.sigma_inf != Permutation.long_cycle(n):
        d = d.normalized()
    if passport_of(d) != target:
        raise DessinError(f"template produced {passport_of(d)}, expected {target}")
    return d


# enumeration -------------------------------------------------------------


def _class_size(n: int, parts: Sequence[int]) -> int:
    from math import factorial

    z = 1
    for k, m in Counter(parts).items():
        z *= k**m * factorial(m)
    return factorial(n) // z


def max_enumeration_n() -> int:
    raw = os.environ.get(MAX_N_ENV)
    if raw is None:
        return DEFAULT_MAX_N
    try:
        return int(raw)
    except ValueError as exc:
        raise DessinError(f"{MAX_N_ENV} must be an integer, got {raw!r}") from exc


def enumerate_trees(p: Passport, force: bool = False) -> list[Dessin]:
    """All plane trees with passport p, one canonical representative each.

    sigma0*sigma1 is pinned to (1, ..., n); the remaining freedom is
    conjugation by powers of that cycle. The representative is the rotation
    with lexicographically least sigma1 image list; output is sorted by it.
    """
    if sum(p.alpha) != p.n or sum(p.beta) != p.n:
        raise DessinError("inconsistent passport")
    if p.n > max_enumeration_n() and not force:
        raise EnumerationLimitError(
            f"n={p.n} exceeds the enumeration limit {max_enumeration_n()} (use force)"
        )
    if not p.is_tree():
        return []
    n = p.n
    found: dict[tuple[int, ...], Dessin] = {}
    for s1 in _search(p):
        key = _canonical_key(s1, n)
        if key not in found:
            sig1 = Permutation._trusted(key)
            found[key] = _from_sigma1(sig1)
    return [found[k] for k in sorted(found)]


def count_trees(p: Passport, force: bool = False) -> int:
    return len(enumerate_trees(p, force=force))


def _from_sigma1(s1: Permutation) -> Dessin:
    n = s1.n
    inf = Permutation.long_cycle(n)
    s0 = inf * s1.inverse()
    return Dessin(s0, s1)


def _canonical_key(s1: tuple[int, ...], n: int) -> tuple[int, ...]:
    # conjugating by c^k maps x -> x + k (mod n, 1-based)
    best = None
    for k in range(n):
        img = [0] * n
        for x in range(n):
            y = s1[x] - 1
            img[(x + k) % n] = (y + k) % n + 1
        t = tuple(img)
        if best is None or t < best:
            best = t
    return best


def _search(p: Passport) -> Iterator[tuple[int, ...]]:
    """Yield every sigma1 (image tuple) with the right cycle types.

    Whichever of sigma0/sigma1 has the smaller conjugacy class is built
    cycle by cycle; each assignment fixes one value of the other
    permutation, whose closed cycles and open chains are checked against
    its remaining parts.
    """
    n = p.n
    if _class_size(n, p.beta) <= _class_size(n, p.alpha):
        build, other, build_is_s1 = p.beta, p.alpha, True
    else:
        build, other, build_is_s1 = p.alpha, p.beta, False

    pi = [0] * (n + 1)
    rho = [0] * (n + 1)
    rho_inv = [0] * (n + 1)
    remaining_build = Counter(build)
    remaining_other = Counter(other)
    used = [False] * (n + 1)

    def cyc_next(x):
        return x % n + 1

    def cyc_prev(x):
        return (x - 2) % n + 1

    def implied(a, b):
        # pi(a) = b fixes one value of the other permutation
        if build_is_s1:
            return cyc_prev(b), a  # sigma0(c^-1(b)) = a
        return b, cyc_next(a)  # sigma1(b) = c(a)

    def max_other():
        return max((k for k, m in remaining_other.items() if m > 0), default=0)

    def set_rho(u, v):
        # returns (ok, closed_len or 0)
        if rho[u] or rho_inv[v]:
            return False, 0
        rho[u] = v
        rho_inv[v] = u
        # walk forward from v
        length = 1
        x = v
        while x != u and rho[x]:
            x = rho[x]
            length += 1
        if x == u:
            if remaining_other[length] > 0:
                remaining_other[length] -= 1
                return True, length
            rho[u] = 0
            rho_inv[v] = 0
            return False, 0
        # open chain: count backwards from u too
        y = u
        while rho_inv[y]:
            y = rho_inv[y]
            length += 1
        if length + 1 > max_other():
            rho[u] = 0
            rho_inv[v] = 0
            return False, 0
        return True, 0

    def unset_rho(u, v, closed):
        rho[u] = 0
        rho_inv[v] = 0
        if closed:
            remaining_other[closed] += 1

    def start_cycle():
        start = next((x for x in range(1, n + 1) if not used[x]), None)
        if start is None:
            if all(m == 0 for m in remaining_other.values()):
                if build_is_s1:
                    yield tuple(pi[1:])
                else:
                    yield tuple(rho[1:])
            return
        for length in sorted(k for k, m in remaining_build.items() if m > 0):
            remaining_build[length] -= 1
            used[start] = True
            yield from extend(start, start, length - 1)
            used[start] = False
            remaining_build[length] += 1

    def extend(start, last, left):
        if left == 0:
            ok, closed = set_rho(*implied(last, start))
            if ok:
                pi[last] = start
                yield from start_cycle()
                pi[last] = 0
                unset_rho(*implied(last, start), closed)
            return
        for nxt in range(start + 1, n + 1):
            if used[nxt]:
                continue
            u, v = implied(last, nxt)
            ok, closed = set_rho(u, v)
            if not ok:
                continue
            used[nxt] = True
            pi[last] = nxt
            yield from extend(start, nxt, left - 1)
            pi[last] = 0
            used[nxt] = False
            unset_rho(u, v, closed)

    yield from start_cycle()


def enumerate_family(family: str, r: int | None = None, s: int | None = None, t: int | None = None, force: bool = False) -> list[Dessin]:
    return enumerate_trees(family_passport(family, r, s, t), force=force)

