"""Exact Gaussian-rational scalars.

A :class:`Scalar` is an element of Q(i) stored as ``(a + b*i) / d`` with
integer ``a``, ``b`` and positive integer ``d``, normalized so that
``gcd(a, b, d) == 1``.  All arithmetic is exact; there are no floats
anywhere in this package.

The canonical string form is ``"a/b"`` for rational values and
``"a/b+c/d*I"`` for proper complex ones, e.g. ``"3/2+1/2*I"``, ``"-4"``,
``"1/3*I"``.  :func:`Scalar.parse` reads that form back.
"""

from __future__ import annotations

import re as _re
from fractions import Fraction
from math import gcd
from typing import Union

Rational = Union[int, Fraction]

_TERM_RE = _re.compile(r"[+-][^+-]*")
_RAT_RE = _re.compile(r"^([+-]?\d+)(?:/(\d+))?$")


class Scalar:
    """Immutable element of Q(i)."""

    __slots__ = ("a", "b", "d")

    def __init__(self, re: Rational = 0, im: Rational = 0) -> None:
        re = Fraction(re)
        im = Fraction(im)
        a = re.numerator * im.denominator
        b = im.numerator * re.denominator
        d = re.denominator * im.denominator
        g = gcd(gcd(a, b), d)
        if g > 1:
            a //= g
            b //= g
            d //= g
        self.a = a
        self.b = b
        self.d = d

    @classmethod
    def _make(cls, a: int, b: int, d: int) -> "Scalar":
        # internal: normalize a raw integer triple
        if d < 0:
            a, b, d = -a, -b, -d
        g = gcd(gcd(a, b), d)
        if g > 1:
            a //= g
            b //= g
            d //= g
        s = object.__new__(cls)
        s.a = a
        s.b = b
        s.d = d
        return s

    # -- field data ---------------------------------------------------------

    @property
    def re(self) -> Fraction:
        return Fraction(self.a, self.d)

    @property
    def im(self) -> Fraction:
        return Fraction(self.b, self.d)

    def is_rational(self) -> bool:
        return self.b == 0

    def conjugate(self) -> "Scalar":
        return Scalar._make(self.a, -self.b, self.d)

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: object) -> "Scalar":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        d1, d2 = self.d, other.d
        if d1 == 1 and d2 == 1:
            s = object.__new__(Scalar)
            s.a = self.a + other.a
            s.b = self.b + other.b
            s.d = 1
            return s
        return Scalar._make(self.a * d2 + other.a * d1,
                            self.b * d2 + other.b * d1, d1 * d2)

    __radd__ = __add__

    def __sub__(self, other: object) -> "Scalar":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        d1, d2 = self.d, other.d
        if d1 == 1 and d2 == 1:
            s = object.__new__(Scalar)
            s.a = self.a - other.a
            s.b = self.b - other.b
            s.d = 1
            return s
        return Scalar._make(self.a * d2 - other.a * d1,
                            self.b * d2 - other.b * d1, d1 * d2)

    def __rsub__(self, other: object) -> "Scalar":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other: object) -> "Scalar":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a1, b1, a2, b2 = self.a, self.b, other.a, other.b
        if b1 == 0 and b2 == 0:
            return Scalar._make(a1 * a2, 0, self.d * other.d)
        return Scalar._make(a1 * a2 - b1 * b2, a1 * b2 + b1 * a2,
                            self.d * other.d)

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "Scalar":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if not other:
            raise ZeroDivisionError("division by zero scalar")
        # 1 / ((a+bi)/d) = d*(a-bi) / (a^2+b^2)
        norm = other.a * other.a + other.b * other.b
        return self * Scalar._make(other.d * other.a, -other.d * other.b, norm)

    def __rtruediv__(self, other: object) -> "Scalar":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __neg__(self) -> "Scalar":
        s = object.__new__(Scalar)
        s.a = -self.a
        s.b = -self.b
        s.d = self.d
        return s

    def __bool__(self) -> bool:
        return self.a != 0 or self.b != 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Scalar):
            return self.a == other.a and self.b == other.b and self.d == other.d
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.re == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.b == 0:
            return hash(self.re)
        return hash((self.a, self.b, self.d))

    # -- text form ------------------------------------------------------------

    def __str__(self) -> str:
        if self.b == 0:
            return _frac_str(self.re)
        if self.a == 0:
            return _frac_str(self.im) + "*I"
        im = self.im
        sign = "+" if im > 0 else "-"
        return _frac_str(self.re) + sign + _frac_str(abs(im)) + "*I"

    def __repr__(self) -> str:
        return f"Scalar({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "Scalar":
        """Read the canonical string form back into a scalar."""
        s = text.strip()
        if not s:
            raise ValueError("empty scalar string")
        if s[0] not in "+-":
            s = "+" + s
        terms = _TERM_RE.findall(s)
        if "".join(terms) != s:
            raise ValueError(f"malformed scalar string {text!r}")
        re_part = Fraction(0)
        im_part = Fraction(0)
        for term in terms:
            if term.endswith("*I") or term in ("+I", "-I"):
                coeff = term[:-2] if term.endswith("*I") else term[:-1] + "1"
                im_part += _parse_rational(coeff, text)
            else:
                re_part += _parse_rational(term, text)
        return cls(re_part, im_part)


def _coerce(value: object) -> Scalar | None:
    if isinstance(value, Scalar):
        return value
    if isinstance(value, (int, Fraction)):
        return Scalar(value)
    return None


def _frac_str(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _parse_rational(term: str, original: str) -> Fraction:
    m = _RAT_RE.match(term)
    if m is None:
        raise ValueError(f"malformed scalar string {original!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) else 1
    if den == 0:
        raise ValueError(f"zero denominator in scalar string {original!r}")
    return Fraction(num, den)


ZERO = Scalar(0)
ONE = Scalar(1)
I = Scalar(0, 1)
