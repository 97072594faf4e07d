"""Clifford algebras Cl(p,q) over a diagonal quadratic form.

Blades are int bitmasks (bit ``i - 1`` for generator ``e_i``).  A
:class:`Multivector` is an immutable sparse map from blades to scalars bound
to one :class:`AlgebraContext`.  Coefficients may be exact
(:class:`~fractions.Fraction`, int) or :class:`~decimal.Decimal`; the
arithmetic is written once and only relies on ``+ - *`` and ``== 0``.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator, Mapping, Union

from . import kernel
from .errors import ContextMismatchError, SignatureError
from .scalars import format_rational

MAX_GENERATORS = 16

Blade = int


@dataclass(frozen=True)
class Signature:
    """Quadratic form with ``p`` generators squaring to +1 and ``q`` to -1."""

    p: int
    q: int

    def __post_init__(self):
        if not (isinstance(self.p, int) and isinstance(self.q, int)):
            raise SignatureError("signature entries must be integers")
        if self.p < 0 or self.q < 0:
            raise SignatureError(f"negative signature ({self.p},{self.q})")
        if not 1 <= self.p + self.q <= MAX_GENERATORS:
            raise SignatureError(
                f"p + q must lie in [1, {MAX_GENERATORS}], got {self.p + self.q}"
            )

    @property
    def n(self) -> int:
        return self.p + self.q

    @property
    def neg_mask(self) -> int:
        return ((1 << self.q) - 1) << self.p

    def metric(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise IndexError(f"generator index {i} out of range 1..{self.n}")
        return 1 if i <= self.p else -1

    @property
    def is_simple(self) -> bool:
        return (self.p - self.q) % 4 != 1

    def __str__(self):
        return f"({self.p},{self.q})"


# -- blades -------------------------------------------------------------------


def grade(blade: Blade) -> int:
    return bin(blade).count("1")


def blade_indices(blade: Blade) -> tuple[int, ...]:
    out = []
    i = 1
    while blade:
        if blade & 1:
            out.append(i)
        blade >>= 1
        i += 1
    return tuple(out)


def blade_from_indices(indices: Iterable[int]) -> Blade:
    mask = 0
    for i in indices:
        mask |= 1 << (i - 1)
    return mask


def blade_name(blade: Blade) -> str:
    if blade == 0:
        return "Id"
    idx = blade_indices(blade)
    if idx[-1] <= 9:
        return "e" + "".join(map(str, idx))
    return "e" + "_".join(map(str, idx))


def blade_key(blade: Blade) -> tuple:
    """Sort key: by grade, then lexicographic on ascending indices."""
    return (grade(blade), blade_indices(blade))


def canonical_blades(n: int) -> tuple[Blade, ...]:
    return tuple(sorted(range(1 << n), key=blade_key))


def blade_product(a: Blade, b: Blade, sig: Signature) -> tuple[int, Blade]:
    """Clifford product of two basis blades as ``(sign, blade)``."""
    return kernel.blade_sign(a, b, sig.neg_mask), a ^ b


def blade_square(blade: Blade, sig: Signature) -> int:
    return kernel.blade_sign(blade, blade, sig.neg_mask)


def blades_commute(a: Blade, b: Blade) -> bool:
    # e_a e_b = (-1)^(|a||b| - |a&b|) e_b e_a for a diagonal form
    return (grade(a) * grade(b) - grade(a & b)) % 2 == 0


# -- algebra context ----------------------------------------------------------


class AlgebraContext:
    """Per-signature data: blade ordering and constructors for multivectors.

    Obtain instances through :func:`algebra`, which caches one per signature
    so that identity comparison is enough to detect mismatched operands.
    """

    def __init__(self, sig: Signature):
        self.sig = sig
        self.n = sig.n
        self.dim = 1 << sig.n
        self.blades = canonical_blades(sig.n)
        self.blade_index = {b: i for i, b in enumerate(self.blades)}

    def __repr__(self):
        return f"AlgebraContext(Cl{self.sig})"

    def __reduce__(self):
        return (algebra, (self.sig.p, self.sig.q))

    def multivector(self, terms: Mapping[Blade, object] | None = None) -> Multivector:
        return Multivector(self, terms or {})

    def zero(self) -> Multivector:
        return Multivector(self, {})

    def scalar(self, c) -> Multivector:
        return Multivector(self, {0: c})

    @property
    def identity(self) -> Multivector:
        return Multivector(self, {0: Fraction(1)})

    def blade(self, b: Union[Blade, str], coeff=Fraction(1)) -> Multivector:
        if isinstance(b, str):
            b = self.parse_blade(b)
        self.check_blade(b)
        return Multivector(self, {b: coeff})

    def e(self, *indices: int) -> Multivector:
        """Product ``e_i e_j ...`` of generators, in the order given."""
        out = self.identity
        for i in indices:
            self.sig.metric(i)
            out = out * Multivector(self, {1 << (i - 1): Fraction(1)})
        return out

    def basis(self) -> list[Multivector]:
        return [self.blade(b) for b in self.blades]

    def check_blade(self, b: Blade) -> None:
        if b < 0 or b >> self.n:
            raise ValueError(f"blade {b:#b} does not fit Cl{self.sig}")

    def parse_blade(self, name: str) -> Blade:
        from .parsing import parse_blade_name

        return parse_blade_name(name, self.n)


@functools.lru_cache(maxsize=None)
def _context(p: int, q: int) -> AlgebraContext:
    return AlgebraContext(Signature(p, q))


def algebra(p: Union[int, Signature], q: int | None = None) -> AlgebraContext:
    """Cached :class:`AlgebraContext` for Cl(p,q)."""
    if isinstance(p, Signature):
        return _context(p.p, p.q)
    if isinstance(p, AlgebraContext):
        return p
    if q is None:
        raise TypeError("algebra() needs a Signature or both p and q")
    Signature(p, q)
    return _context(p, q)


# -- multivectors -------------------------------------------------------------


class Multivector:
    """Immutable element of Cl(p,q); the zero coefficients are never stored."""

    __slots__ = ("ctx", "terms", "_hash")

    def __init__(self, ctx: AlgebraContext, terms: Mapping[Blade, object]):
        clean = {}
        for b, c in terms.items():
            if c != 0:
                if b < 0 or b >> ctx.n:
                    raise ValueError(f"blade {b:#b} does not fit Cl{ctx.sig}")
                clean[b] = c
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _raw(cls, ctx, terms):
        # terms already normalized by the caller
        obj = cls.__new__(cls)
        object.__setattr__(obj, "ctx", ctx)
        object.__setattr__(obj, "terms", terms)
        object.__setattr__(obj, "_hash", None)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("Multivector is immutable")

    def __reduce__(self):
        return (Multivector, (self.ctx, dict(self.terms)))

    # views
    def coeff(self, blade: Union[Blade, str]):
        if isinstance(blade, str):
            blade = self.ctx.parse_blade(blade)
        return self.terms.get(blade, 0)

    def items(self) -> Iterator[tuple[Blade, object]]:
        """Terms in canonical blade order."""
        for b in sorted(self.terms, key=blade_key):
            yield b, self.terms[b]

    def coefficients(self) -> list:
        """Dense coefficient list in the context's canonical blade order."""
        return [self.terms.get(b, 0) for b in self.ctx.blades]

    def grade_part(self, k: int) -> Multivector:
        return Multivector._raw(
            self.ctx, {b: c for b, c in self.terms.items() if grade(b) == k}
        )

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    # arithmetic
    def _check(self, other: Multivector) -> None:
        if other.ctx is not self.ctx:
            raise ContextMismatchError(
                f"operands live in Cl{self.ctx.sig} and Cl{other.ctx.sig}"
            )

    def _lift(self, other):
        if isinstance(other, Multivector):
            self._check(other)
            return other
        return Multivector(self.ctx, {0: other})

    def __add__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        out = dict(self.terms)
        for b, c in other.terms.items():
            prev = out.get(b)
            new = c if prev is None else prev + c
            if new == 0:
                out.pop(b, None)
            else:
                out[b] = new
        return Multivector._raw(self.ctx, out)

    __radd__ = __add__

    def __neg__(self):
        return Multivector._raw(self.ctx, {b: -c for b, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, Multivector):
            self._check(other)
        elif not _is_scalar(other):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return cmul(self, other)
        if not _is_scalar(other):
            return NotImplemented
        return self.scale(other)

    def __rmul__(self, other):
        if not _is_scalar(other):
            return NotImplemented
        return self.scale(other)

    def __truediv__(self, other):
        if not _is_scalar(other):
            return NotImplemented
        return Multivector._raw(
            self.ctx, {b: c / other for b, c in self.terms.items()}
        )

    def __xor__(self, other):
        if isinstance(other, Multivector):
            return wedge(self, other)
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers are supported")
        out = self.ctx.identity
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def scale(self, s) -> Multivector:
        if s == 0:
            return Multivector._raw(self.ctx, {})
        return Multivector._raw(self.ctx, {b: c * s for b, c in self.terms.items()})

    def map_coefficients(self, fn) -> Multivector:
        return Multivector(self.ctx, {b: fn(c) for b, c in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, Multivector):
            return self.ctx is other.ctx and self.terms == other.terms
        if _is_scalar(other):
            return self.terms == ({0: other} if other != 0 else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(
                self, "_hash", hash((self.ctx.sig, frozenset(self.terms.items())))
            )
        return self._hash

    def __str__(self):
        return format_multivector(self)

    def __repr__(self):
        return f"Multivector(Cl{self.ctx.sig}, {format_multivector(self)!r})"


def _is_scalar(x) -> bool:
    return isinstance(x, (Rational, Decimal)) and not isinstance(x, bool)


def cmul(x: Multivector, y: Multivector) -> Multivector:
    """Clifford product, the bilinear extension of :func:`blade_product`."""
    x._check(y)
    terms = kernel.geometric_product(x.terms, y.terms, x.ctx.sig.neg_mask)
    return Multivector._raw(x.ctx, terms)


def wedge(x: Multivector, y: Multivector) -> Multivector:
    """Exterior product; overlapping blades contribute zero."""
    x._check(y)
    return Multivector._raw(x.ctx, kernel.outer_product(x.terms, y.terms))


def coeff_norm(x: Multivector, kind: str = "inf"):
    """Coefficient norm: ``"inf"`` (max abs) or ``"one"`` (sum of abs)."""
    values = [abs(c) for c in x.terms.values()]
    if kind == "inf":
        return max(values, default=Fraction(0))
    if kind == "one":
        return sum(values, Fraction(0)) if values else Fraction(0)
    raise ValueError(f"unknown norm kind {kind!r}; use 'inf' or 'one'")


# -- text form ----------------------------------------------------------------


def _format_coeff(c) -> str:
    if isinstance(c, Decimal):
        return str(c)
    return format_rational(c)


def format_multivector(x: Multivector) -> str:
    """Render as ``Id - 1/2 e1 + 3 e12``; the parser reads this back."""
    if not x.terms:
        return "0"
    parts: list[str] = []
    for b, c in x.items():
        neg = c < 0
        mag = -c if neg else c
        name = blade_name(b)
        if b == 0:
            body = _format_coeff(mag)
            if body == "1":
                body = "Id"
            else:
                body = f"{body} Id"
        elif mag == 1:
            body = name
        else:
            body = f"{_format_coeff(mag)} {name}"
        if not parts:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f"{'-' if neg else '+'} {body}")
    return " ".join(parts)
