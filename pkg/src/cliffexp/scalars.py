"""Scalar helpers: exact rationals, decimal big floats, Gaussian rationals.

Exact scalars are :class:`fractions.Fraction` (ints are accepted wherever a
Fraction is).  Floating scalars are :class:`decimal.Decimal` evaluated in a
context of the requested number of significant digits.
"""
from __future__ import annotations

import decimal
import os
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from numbers import Rational

DEFAULT_DIGITS = 20


def default_digits() -> int:
    """Working precision, overridable through ``CLIFFEXP_DIGITS``."""
    raw = os.environ.get("CLIFFEXP_DIGITS")
    if not raw:
        return DEFAULT_DIGITS
    try:
        digits = int(raw)
    except ValueError:
        raise ValueError(f"CLIFFEXP_DIGITS must be an integer, got {raw!r}") from None
    if digits < 1:
        raise ValueError("CLIFFEXP_DIGITS must be positive")
    return digits


def decimal_context(digits: int) -> decimal.Context:
    return decimal.Context(prec=digits, rounding=decimal.ROUND_HALF_EVEN)


def to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, (float, Decimal)):
        return Fraction(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def to_decimal(x, digits: int) -> Decimal:
    """Round ``x`` to ``digits`` significant decimal digits (half-even)."""
    ctx = decimal_context(digits)
    if isinstance(x, Decimal):
        return ctx.plus(x)
    if isinstance(x, int):
        return ctx.create_decimal(x)
    x = to_fraction(x)
    return ctx.divide(Decimal(x.numerator), Decimal(x.denominator))


def format_rational(x) -> str:
    x = to_fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def format_decimal(x: Decimal, digits: int) -> str:
    """Positional notation for moderate exponents, scientific otherwise."""
    x = to_decimal(x, digits)
    if x == 0:
        return "0"
    exp = x.adjusted()
    if -6 <= exp < digits:
        s = format(x, "f")
    else:
        s = format(x, "e")
    return s


@dataclass(frozen=True)
class GaussianRational:
    """Exact complex number ``re + im*I`` with rational parts."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", to_fraction(self.re))
        object.__setattr__(self, "im", to_fraction(self.im))

    @classmethod
    def coerce(cls, x) -> GaussianRational:
        if isinstance(x, GaussianRational):
            return x
        return cls(to_fraction(x), Fraction(0))

    def __add__(self, other):
        o = GaussianRational.coerce(other)
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = GaussianRational.coerce(other)
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return GaussianRational.coerce(other) - self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        o = GaussianRational.coerce(other)
        return GaussianRational(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def __truediv__(self, other):
        o = GaussianRational.coerce(other)
        d = o.re * o.re + o.im * o.im
        if d == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        n = self * o.conjugate()
        return GaussianRational(n.re / d, n.im / d)

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) / self

    def __eq__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __str__(self):
        if self.im == 0:
            return format_rational(self.re)
        im = _imag_term(self.im)
        if self.re == 0:
            return im if self.im > 0 else "-" + im
        sign = "+" if self.im > 0 else "-"
        return f"{format_rational(self.re)} {sign} {im}"

    def __repr__(self):
        return f"GaussianRational({self.re!s}, {self.im!s})"


def _imag_term(im: Fraction) -> str:
    a = abs(im)
    return "I" if a == 1 else f"{format_rational(a)}*I"
