"""Dense univariate polynomials with exact integer coefficients.

Coefficients are stored in ascending order of degree. The zero polynomial is
the empty tuple, and no other value has trailing zeros.
"""

from __future__ import annotations

import json
import re
from typing import Iterable, Sequence


class IntPolynomial:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[int, ...] = tuple(c)

    @classmethod
    def from_descending(cls, coeffs: Sequence[int]) -> "IntPolynomial":
        return cls(reversed(list(coeffs)))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "IntPolynomial":
        return cls([0] * degree + [coeff])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> int:
        """Coefficient of ``x**k`` (0 beyond the stored range)."""
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __eq__(self, other):
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == IntPolynomial([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPolynomial({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)

    def __add__(self, other):
        return poly_add(self, _coerce(other))

    __radd__ = __add__

    def __neg__(self):
        return poly_scale(self, -1)

    def __sub__(self, other):
        return poly_add(self, poly_scale(_coerce(other), -1))

    def __rsub__(self, other):
        return poly_add(_coerce(other), -self)

    def __mul__(self, other):
        if isinstance(other, int):
            return poly_scale(self, other)
        return poly_mul(self, _coerce(other))

    __rmul__ = __mul__


def _coerce(p) -> IntPolynomial:
    if isinstance(p, IntPolynomial):
        return p
    if isinstance(p, int):
        return IntPolynomial([p])
    raise TypeError(f"cannot treat {type(p).__name__} as IntPolynomial")


ZERO = IntPolynomial()
ONE = IntPolynomial([1])
X = IntPolynomial([0, 1])


def poly_add(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    a, b = p.coeffs, q.coeffs
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for k, c in enumerate(b):
        out[k] += c
    return IntPolynomial(out)


def poly_mul(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    a, b = p.coeffs, q.coeffs
    if not a or not b:
        return ZERO
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return IntPolynomial(out)


def poly_scale(p: IntPolynomial, c: int) -> IntPolynomial:
    return IntPolynomial(c * a for a in p.coeffs)


def poly_sum(polys: Iterable[IntPolynomial]) -> IntPolynomial:
    total = ZERO
    for p in polys:
        total = poly_add(total, p)
    return total


# -- text formats -------------------------------------------------------------

def format_poly(p: IntPolynomial, style: str = "human") -> str:
    """Render ``p``.

    ``human`` gives descending powers like ``x^4+4x^2+4``; ``coeff_list`` the
    ascending coefficient list ``[-1, 0, 1]``; ``json`` the object
    ``{"coeffs_ascending": [...]}`` with integers encoded as strings.
    """
    if style == "human":
        return _format_human(p)
    if style == "coeff_list":
        return "[" + ", ".join(str(c) for c in p.coeffs) + "]"
    if style == "json":
        return json.dumps(poly_to_json(p))
    raise ValueError(f"unknown polynomial style {style!r}")


def _format_human(p: IntPolynomial) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            power = "x" if k == 1 else f"x^{k}"
            body = power if mag == 1 else f"{mag}{power}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    return out + "".join(s + b for s, b in parts[1:])


_TERM = re.compile(r"([+-]?)(\d*)(x(?:\^(\d+))?)?")


def parse_poly(text: str) -> IntPolynomial:
    """Inverse of the ``human`` format; whitespace is allowed around signs only."""
    s = re.sub(r"\s*([+-])\s*", r"\1", text.strip())
    if not s or re.search(r"\s", s):
        raise ValueError(f"cannot parse polynomial {text!r}")
    coeffs: dict[int, int] = {}
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos or (not m.group(2) and not m.group(3)):
            raise ValueError(f"cannot parse polynomial term at {s[pos:]!r}")
        if pos > 0 and not m.group(1):
            raise ValueError(f"missing sign before {s[pos:]!r}")
        sign = -1 if m.group(1) == "-" else 1
        mag = int(m.group(2)) if m.group(2) else 1
        if m.group(3):
            k = int(m.group(4)) if m.group(4) else 1
        else:
            k = 0
        coeffs[k] = coeffs.get(k, 0) + sign * mag
        pos = m.end()
    top = max(coeffs)
    return IntPolynomial(coeffs.get(k, 0) for k in range(top + 1))


def poly_to_strings(p: IntPolynomial) -> list[str]:
    return [str(c) for c in p.coeffs]


def poly_from_strings(items: Sequence[str | int]) -> IntPolynomial:
    return IntPolynomial(int(c) for c in items)


def poly_to_json(p: IntPolynomial) -> dict:
    return {"coeffs_ascending": poly_to_strings(p)}


def poly_from_json(obj: dict) -> IntPolynomial:
    return poly_from_strings(obj["coeffs_ascending"])
