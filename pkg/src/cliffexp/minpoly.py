"""Real minimal polynomials and the exponential series modulo them.

``climinpoly`` builds the ladder ``Id, p, p^2, ...`` until the next power is
an exact rational combination of the ladder.  ``sexp`` sums
``x^k mod m(x) / k!`` as a polynomial of degree below ``deg m`` and then
evaluates it on the ladder, so no power of ``p`` beyond ``p^(d-1)`` is ever
formed in the algebra.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .algebra import Multivector, coeff_norm
from .errors import ConvergenceError
from .linalg import Span
from .poly import Polynomial
from .scalars import to_fraction

DEFAULT_EPS = Fraction(1, 10**19)
DEFAULT_MAX_N = 64

X = Polynomial([Fraction(0), Fraction(1)])


@dataclass(frozen=True)
class MinimalPolynomial:
    """Monic minimal polynomial of ``p`` and its power ladder."""

    poly: Polynomial
    ladder: tuple[Multivector, ...]

    @property
    def degree(self) -> int:
        return self.poly.degree

    def __iter__(self):
        return iter((self.poly, self.ladder))

    def evaluate(self, r: Polynomial) -> Multivector:
        """Value at ``p`` of a polynomial of degree below ``deg m``."""
        if r.degree >= len(self.ladder):
            raise ValueError("polynomial degree exceeds the power ladder")
        ctx = self.ladder[0].ctx
        terms: dict = {}
        for c, power in zip(r.coeffs, self.ladder):
            if c == 0:
                continue
            for b, v in power.terms.items():
                prev = terms.get(b)
                terms[b] = c * v if prev is None else prev + c * v
        return ctx.multivector(terms)


@functools.lru_cache(maxsize=256)
def climinpoly(p: Multivector) -> MinimalPolynomial:
    """Monic real polynomial of least degree annihilating ``p``."""
    ctx = p.ctx
    ladder = [ctx.identity]
    span = Span([ladder[0].terms])
    while True:
        nxt = ladder[-1] * p
        coeffs = span.add(nxt.terms)
        if coeffs is not None:
            poly = Polynomial([-to_fraction(c) for c in coeffs] + [Fraction(1)])
            return MinimalPolynomial(poly, tuple(ladder))
        ladder.append(nxt)


def poly_powmod(k: int, modulus: Polynomial) -> Polynomial:
    """``x^k mod modulus`` by square-and-multiply."""
    if not modulus:
        raise ZeroDivisionError("zero modulus")
    if k < 0:
        raise ValueError("exponent must be non-negative")
    if modulus.degree < 1:
        raise ValueError("modulus must have degree at least 1")
    result = Polynomial([Fraction(1)]) % modulus
    base = X % modulus
    while k:
        if k & 1:
            result = (result * base) % modulus
        k >>= 1
        if k:
            base = (base * base) % modulus
    return result


class ExpSeries:
    """Partial sums ``sum_{k<=n} p^k/k!`` computed modulo the minimal
    polynomial, advanced one order at a time."""

    def __init__(self, p: Multivector):
        self.p = p
        self.minpoly = climinpoly(p)
        self._modulus = self.minpoly.poly
        self._power = Polynomial([Fraction(1)]) % self._modulus
        self._fact = 1
        self.order = 0
        self.partial = self._power

    def step(self) -> Polynomial:
        """Advance to the next order; return the term just added."""
        self.order += 1
        self._fact *= self.order
        self._power = self._power.shift(1) % self._modulus
        term = self._power * Fraction(1, self._fact)
        self.partial = self.partial + term
        return term

    def value(self) -> Multivector:
        return self.minpoly.evaluate(self.partial)

    def terms(self) -> Iterator[tuple[int, Multivector]]:
        while True:
            self.step()
            yield self.order, self.value()


def exp_series_polynomial(p: Multivector, n: int) -> Polynomial:
    """``sum_{k=0}^{n} (x^k mod m)/k!`` for the minimal polynomial ``m`` of ``p``."""
    series = ExpSeries(p)
    for _ in range(n):
        series.step()
    return series.partial


def sexp(p: Multivector, n: int) -> Multivector:
    """Truncated exponential ``sum_{k=0}^{n} p^k / k!`` (exact)."""
    if not isinstance(n, int) or n < 1:
        raise ValueError("order must be a positive integer")
    series = ExpSeries(p)
    for _ in range(n):
        series.step()
    return series.value()


def exp_converged(
    p: Multivector, eps=DEFAULT_EPS, max_n: int = DEFAULT_MAX_N
) -> tuple[Multivector, int, Fraction]:
    """Raise the order until ``|p_i - p_(i-1)|_inf < eps``.

    Returns ``(p_i, i, last_step)``; raises ConvergenceError after ``max_n``.
    """
    eps = to_fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    series = ExpSeries(p)
    step = None
    for _ in range(max_n):
        term = series.step()
        step = coeff_norm(series.minpoly.evaluate(term), "inf")
        if step < eps:
            return series.value(), series.order, step
    raise ConvergenceError(
        f"exp series not converged after {max_n} terms (last step {float(step):.3g})",
        last_step=step,
        n_used=max_n,
    )


def approximation_error(p: Multivector, n: int) -> Fraction:
    """Largest over blades of the smallest successive change of that blade's
    coefficient along ``p_1, ..., p_n``."""
    series = ExpSeries(p)
    history: list[Multivector] = []
    for _ in range(n):
        series.step()
        history.append(series.value())
    blades = set()
    for v in history:
        blades.update(v.terms)
    worst = Fraction(0)
    for b in blades:
        seq = [v.terms.get(b, Fraction(0)) for v in history]
        smallest = min(abs(seq[i] - seq[i - 1]) for i in range(1, len(seq)))
        worst = max(worst, smallest)
    return worst


def annihilates(poly: Polynomial, p: Multivector) -> bool:
    return poly.evaluate(p, one=p.ctx.identity).is_zero
