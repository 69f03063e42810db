"""JSON text format for polynomials.

``{"d": <int>, "coeffs": [[an, ad, bn, bd], ...]}`` in ascending degree; each
quadruple encodes ``an/ad + (bn/bd)*sqrt(d)`` in lowest terms, integers written
as decimal strings.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .field import FieldElement
from .poly import Poly


def poly_to_json(p: Poly) -> dict:
    return {
        "d": p.d,
        "coeffs": [
            [str(c.a.numerator), str(c.a.denominator), str(c.b.numerator), str(c.b.denominator)]
            for c in p.coeffs
        ],
    }


def poly_from_json(doc: dict) -> Poly:
    try:
        d = int(doc["d"])
        raw = doc["coeffs"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed polynomial document: {exc}") from exc
    coeffs = []
    for entry in raw:
        if len(entry) != 4:
            raise ValueError(f"coefficient must be a quadruple, got {entry!r}")
        an, ad, bn, bd = (int(v) for v in entry)
        a, b = Fraction(an, ad), Fraction(bn, bd)
        if (a.numerator, a.denominator, b.numerator, b.denominator) != (an, ad, bn, bd):
            raise ValueError(f"coefficient {entry!r} is not in lowest terms")
        coeffs.append(FieldElement(a, b, d))
    p = Poly(coeffs, d)
    if len(p.coeffs) != len(coeffs):
        raise ValueError("trailing zero coefficients are not allowed")
    return p


def dump_poly(p: Poly) -> str:
    return json.dumps(poly_to_json(p))


def load_poly(path: str | Path) -> Poly:
    return poly_from_json(json.loads(Path(path).read_text()))
