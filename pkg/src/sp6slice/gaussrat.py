"""Exact arithmetic in Q(i), the field of Gaussian rationals.

A scalar is a pair of ``fractions.Fraction`` values (real and imaginary
part), so every quantity in this package is exact: there is no floating
point anywhere, and equality of scalars is equality of reduced fractions.

The textual format is "re", "im i" or "re+im i" with rationals written as
"p" or "p/q", e.g. ``-3/2+1i``, ``0``, ``2i``.  ``parse_scalar`` and
``format_scalar`` round-trip.
"""

from __future__ import annotations

import re as _re
from fractions import Fraction
from typing import Union

RatLike = Union[int, Fraction]


def _make(re: Fraction, im: Fraction) -> "GaussRat":
    # Fast internal constructor: trusts that re, im are already Fractions.
    z = GaussRat.__new__(GaussRat)
    z.re = re
    z.im = im
    return z


class GaussRat:
    """An element re + im*i of Q(i).  Instances are treated as immutable."""

    __slots__ = ("re", "im")

    def __init__(self, re: RatLike = 0, im: RatLike = 0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    # -- coercion -----------------------------------------------------------

    @staticmethod
    def _coerce(value) -> "GaussRat | None":
        if isinstance(value, GaussRat):
            return value
        if isinstance(value, (int, Fraction)):
            return _make(Fraction(value), Fraction(0))
        return None

    # -- ring and field operations -----------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return _make(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return _make(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return _make(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return _make(self.re * o.re - self.im * o.im,
                     self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __neg__(self):
        return _make(-self.re, -self.im)

    def __pos__(self):
        return self

    def conj(self) -> "GaussRat":
        return _make(self.re, -self.im)

    def inverse(self) -> "GaussRat":
        n = self.re * self.re + self.im * self.im
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        return _make(self.re / n, -self.im / n)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- structure -----------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __str__(self) -> str:
        return format_scalar(self)

    def __repr__(self) -> str:
        return f"GaussRat({format_scalar(self)!r})"


ZERO = GaussRat(0)
ONE = GaussRat(1)
I = GaussRat(0, 1)
HALF = GaussRat(Fraction(1, 2))


def _rat_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_scalar(z: GaussRat) -> str:
    """Render a scalar in the textual format, e.g. "-3/2+1i"."""
    if not z:
        return "0"
    if not z.im:
        return _rat_str(z.re)
    if not z.re:
        return _rat_str(z.im) + "i"
    sign = "+" if z.im > 0 else "-"
    return _rat_str(z.re) + sign + _rat_str(abs(z.im)) + "i"


_RAT = r"\d+(?:/\d+)?"
_IMAG_RE = _re.compile(rf"([+-]?)({_RAT})?i")
_FULL_RE = _re.compile(rf"([+-]?{_RAT})(?:([+-])({_RAT})?i)?")


def parse_scalar(text: str) -> GaussRat:
    """Parse the textual scalar format; inverse of ``format_scalar``.

    Accepts ASCII and U+2212 minus signs and surrounding whitespace.
    Raises ValueError on malformed input (including zero denominators).
    """
    s = text.strip().replace("−", "-")
    try:
        m = _IMAG_RE.fullmatch(s)
        if m:
            sign, mag = m.groups()
            im = Fraction(mag) if mag else Fraction(1)
            return GaussRat(0, -im if sign == "-" else im)
        m = _FULL_RE.fullmatch(s)
        if m:
            re_part, im_sign, im_mag = m.groups()
            re_val = Fraction(re_part)
            if im_sign is None:
                return GaussRat(re_val, 0)
            im = Fraction(im_mag) if im_mag else Fraction(1)
            return GaussRat(re_val, -im if im_sign == "-" else im)
    except ZeroDivisionError:
        raise ValueError(f"zero denominator in scalar {text!r}") from None
    raise ValueError(f"malformed scalar {text!r}")
