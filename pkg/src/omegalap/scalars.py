"""Exact scalars: rationals (``fractions.Fraction``) and Gaussian rationals.

Two field modes exist, ``"rational"`` and ``"gaussian"``. Rational mode uses
plain :class:`~fractions.Fraction` values; Gaussian mode uses
:class:`GaussianRational`. Scalars serialize as whitespace-free strings:
``"p"``, ``"p/q"`` or ``"a+bi"`` with ``a`` and ``b`` of the former shape.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational
from typing import Union

__all__ = [
    "FIELDS",
    "GaussianRational",
    "Scalar",
    "ScalarError",
    "coerce",
    "conj",
    "format_scalar",
    "is_real_nonnegative",
    "modulus",
    "parse_scalar",
]

FIELDS = ("rational", "gaussian")


class ScalarError(ValueError):
    """Malformed scalar literal or a scalar outside the selected field."""


class GaussianRational:
    """Exact complex number ``re + im*i`` with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @classmethod
    def _lift(cls, other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Rational)):
            return cls(other, 0)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        norm = other.re * other.re + other.im * other.im
        if norm == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        num = self * other.conjugate()
        return GaussianRational(num.re / norm, num.im / norm)

    def __rtruediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other / self

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return GaussianRational(1) / self ** (-k)
        result = GaussianRational(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return f"GaussianRational({format_scalar(self.re)}, {format_scalar(self.im)})"

    def __str__(self):
        return format_scalar(self)


Scalar = Union[Fraction, GaussianRational]

_RAT = r"[+-]?\d+(?:/\d+)?"
_RATIONAL_RE = re.compile(rf"^{_RAT}$")
_IMAG_RE = re.compile(r"^([+-]?)(\d+(?:/\d+)?)?i$")
_COMPLEX_RE = re.compile(rf"^({_RAT})([+-])(\d+(?:/\d+)?)?i$")


def _parse_rational(text: str) -> Fraction:
    if not _RATIONAL_RE.match(text):
        raise ScalarError(f"not a rational literal: {text!r}")
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise ScalarError(f"zero denominator in {text!r}") from None


def parse_scalar(text: str, field: str = "rational") -> Scalar:
    """Parse a scalar literal exactly.

    >>> parse_scalar("-3/6")
    Fraction(-1, 2)
    >>> parse_scalar("1/2-i", field="gaussian")
    GaussianRational(1/2, -1)
    """
    if field not in FIELDS:
        raise ScalarError(f"unknown field {field!r}")
    if not isinstance(text, str):
        raise ScalarError(f"scalar literal must be a string, got {type(text).__name__}")
    if _RATIONAL_RE.match(text):
        value = _parse_rational(text)
        return GaussianRational(value) if field == "gaussian" else value
    m = _COMPLEX_RE.match(text)
    if m:
        re_part = _parse_rational(m.group(1))
        im_part = _parse_rational(m.group(3) or "1")
        if m.group(2) == "-":
            im_part = -im_part
    else:
        m = _IMAG_RE.match(text)
        if not m:
            raise ScalarError(f"not a scalar literal: {text!r}")
        re_part = Fraction(0)
        im_part = _parse_rational(m.group(2) or "1")
        if m.group(1) == "-":
            im_part = -im_part
    if field != "gaussian":
        raise ScalarError(f"complex literal {text!r} requires the gaussian field")
    return GaussianRational(re_part, im_part)


def _format_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_scalar(s) -> str:
    """Canonical reduced string form, the inverse of :func:`parse_scalar`."""
    if isinstance(s, GaussianRational):
        if s.im == 0:
            return _format_rational(s.re)
        sign = "-" if s.im < 0 else "+"
        return f"{_format_rational(s.re)}{sign}{_format_rational(abs(s.im))}i"
    return _format_rational(Fraction(s))


def coerce(value, field: str) -> Scalar:
    """Bring an int, Fraction or Gaussian rational into ``field``."""
    if field == "gaussian":
        if isinstance(value, GaussianRational):
            return value
        return GaussianRational(Fraction(value))
    if field != "rational":
        raise ScalarError(f"unknown field {field!r}")
    if isinstance(value, GaussianRational):
        if value.im != 0:
            raise ScalarError(f"{format_scalar(value)} is not rational")
        return value.re
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    raise ScalarError(f"cannot use {value!r} as an exact scalar")


def modulus(s) -> Fraction:
    """Exact modulus; ``|re| + |im|`` for Gaussian rationals."""
    if isinstance(s, GaussianRational):
        return abs(s.re) + abs(s.im)
    return abs(Fraction(s))


def conj(s):
    if isinstance(s, GaussianRational):
        return s.conjugate()
    return s


def is_real_nonnegative(s) -> bool:
    if isinstance(s, GaussianRational):
        return s.im == 0 and s.re >= 0
    return s >= 0
