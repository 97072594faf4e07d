"""Dense univariate polynomials over an exact field.

Coefficients are stored lowest degree first with no trailing zeros.  The
same class serves rational (:class:`~fractions.Fraction`) and complex
(:class:`~cliffexp.scalars.GaussianRational`) coefficients.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .scalars import GaussianRational, format_rational


class Polynomial:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def monomial(cls, k: int, c=Fraction(1)) -> Polynomial:
        return cls([Fraction(0)] * k + [c])

    @classmethod
    def from_descending(cls, coeffs: Sequence) -> Polynomial:
        return cls(reversed(list(coeffs)))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: Polynomial) -> Polynomial:
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self[k] + other[k] for k in range(n))

    def __sub__(self, other: Polynomial) -> Polynomial:
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self[k] - other[k] for k in range(n))

    def __neg__(self) -> Polynomial:
        return Polynomial(-c for c in self.coeffs)

    def __mul__(self, other) -> Polynomial:
        if not isinstance(other, Polynomial):
            return Polynomial(c * other for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __divmod__(self, other: Polynomial) -> tuple[Polynomial, Polynomial]:
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd = other.degree
        lead = other.leading
        quo = [0] * max(len(rem) - dd, 0)
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            t = c / lead
            quo[k - dd] = t
            for j, b in enumerate(other.coeffs):
                rem[k - dd + j] = rem[k - dd + j] - t * b
        return Polynomial(quo), Polynomial(rem[:dd])

    def __mod__(self, other: Polynomial) -> Polynomial:
        return divmod(self, other)[1]

    def __floordiv__(self, other: Polynomial) -> Polynomial:
        return divmod(self, other)[0]

    def monic(self) -> Polynomial:
        return Polynomial(c / self.leading for c in self.coeffs)

    def shift(self, k: int = 1) -> Polynomial:
        """Multiply by x^k."""
        if not self.coeffs:
            return self
        return Polynomial([Fraction(0)] * k + list(self.coeffs))

    def evaluate(self, x, one=None, mul=None):
        """Horner evaluation; ``one``/``mul`` adapt it to rings such as
        multivectors or matrices."""
        mul = mul or (lambda a, b: a * b)
        acc = None
        for c in reversed(self.coeffs):
            if acc is None:
                acc = one * c if one is not None else c
            else:
                acc = mul(acc, x) + (one * c if one is not None else c)
        if acc is None:
            return one * 0 if one is not None else 0
        return acc

    def __call__(self, x):
        return self.evaluate(x)

    def format(self, var: str = "x") -> str:
        """Descending form, e.g. ``x^4 - 2*x^3 + 13*x^2 - 12*x + 40``."""
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            if isinstance(c, GaussianRational) and c.re != 0 and c.im != 0:
                body = f"({c})" if mono else str(c)
                sign = "+"
                if mono:
                    body = f"{body}*{mono}"
            else:
                neg = _is_negative(c)
                mag = -c if neg else c
                sign = "-" if neg else "+"
                text = str(mag) if isinstance(mag, GaussianRational) else format_rational(mag)
                if not mono:
                    body = text
                elif text == "1":
                    body = mono
                else:
                    body = f"{text}*{mono}"
            if not parts:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"Polynomial({self.format()!r})"


def _is_negative(c) -> bool:
    if isinstance(c, GaussianRational):
        return (c.re < 0) if c.im == 0 else (c.re == 0 and c.im < 0)
    return c < 0


RealPolynomial = Polynomial
ComplexPolynomial = Polynomial


def complex_polynomial(coeffs: Iterable) -> Polynomial:
    return Polynomial(GaussianRational.coerce(c) for c in coeffs)
