"""Structure of simple Clifford algebras Cl(p,q).

Builds, for a signature, a primitive idempotent ``f``, a real basis of the
minimal left ideal ``S = Cl f``, the division ring ``K = f Cl f``, a basis of
``S`` as a right K-module, and the spinor representation
``x -> gamma_x`` with ``x f_i = sum_j f_j gamma_x[j][i]``.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from dataclasses import field as dc_field
from fractions import Fraction
from typing import Sequence, Union

from .algebra import (
    AlgebraContext,
    Blade,
    Multivector,
    Signature,
    algebra,
    blade_name,
    blade_square,
    blades_commute,
    format_multivector,
)
from .errors import (
    ContextMismatchError,
    DimensionError,
    InternalError,
    NotIdempotentError,
    SemisimpleError,
)
from .kmatrix import KIND_DIMS, KField, KMatrix
from .linalg import Span

_RH_BASE = (0, 1, 2, 2, 3, 3, 3, 3)

# Factor blades used by the reference sessions; other signatures are searched.
IDEMPOTENT_OVERRIDES: dict[tuple[int, int], tuple[str, ...]] = {
    (3, 1): ("e1", "e34"),
    (3, 0): ("e1",),
    (1, 3): ("e14",),
}

SigLike = Union[Signature, AlgebraContext, tuple]


def as_signature(sig: SigLike) -> Signature:
    if isinstance(sig, Signature):
        return sig
    if isinstance(sig, AlgebraContext):
        return sig.sig
    p, q = sig
    return Signature(p, q)


def radon_hurwitz(i: int) -> int:
    """Radon-Hurwitz number r_i, with r_(i+8) = r_i + 4 in both directions."""
    block, rest = divmod(i, 8)
    return _RH_BASE[rest] + 4 * block


def field_kind(sig: SigLike) -> str:
    sig = as_signature(sig)
    r = (sig.p - sig.q) % 8
    if r in (0, 1, 2):
        return "real"
    if r in (3, 7):
        return "complex"
    return "quaternionic"


def require_simple(sig: SigLike) -> Signature:
    sig = as_signature(sig)
    if not sig.is_simple:
        raise SemisimpleError(sig.p, sig.q)
    return sig


def idempotent_factor_count(sig: SigLike) -> int:
    """Number k of factors 1/2(1 + e_T) in a primitive idempotent."""
    sig = require_simple(sig)
    return sig.q - radon_hurwitz(sig.q - sig.p)


def _gf2_independent(mask: int, basis: list[int]) -> bool:
    # basis is kept in reduced form: each entry has a distinct leading bit
    for b in basis:
        mask = min(mask, mask ^ b)
    return mask != 0


def _gf2_insert(mask: int, basis: list[int]) -> list[int]:
    for b in basis:
        mask = min(mask, mask ^ b)
    return sorted(basis + [mask], reverse=True)


def _k_dimension(picks: Sequence[Blade], n: int) -> int:
    # f b f is nonzero iff b commutes with every factor, and b, b*e_T give
    # the same element up to sign, so dim K = #commuting blades / 2^k.
    commuting = sum(
        1 for b in range(1 << n) if all(blades_commute(b, t) for t in picks)
    )
    return commuting >> len(picks)


def idempotent_blades(sig: SigLike) -> tuple[Blade, ...]:
    """Commuting blades ``e_T`` with square +1 whose factors give a
    primitive idempotent.  Deterministic: override table, else a depth-first
    search over blades in canonical order."""
    sig = require_simple(sig)
    ctx = algebra(sig)
    k = idempotent_factor_count(sig)
    want_kdim = 1 << (sig.n - 2 * k)
    if (sig.p, sig.q) in IDEMPOTENT_OVERRIDES:
        return tuple(ctx.parse_blade(s) for s in IDEMPOTENT_OVERRIDES[(sig.p, sig.q)])

    candidates = [b for b in ctx.blades[1:] if blade_square(b, sig) == 1]

    def search(start: int, picks: list[int], gf2: list[int]):
        if len(picks) == k:
            return tuple(picks) if _k_dimension(picks, sig.n) == want_kdim else None
        for idx in range(start, len(candidates)):
            b = candidates[idx]
            if not all(blades_commute(b, t) for t in picks):
                continue
            if not _gf2_independent(b, gf2):
                continue
            found = search(idx + 1, picks + [b], _gf2_insert(b, gf2))
            if found is not None:
                return found
        return None

    found = search(0, [], [])
    if found is None:
        raise InternalError(f"no commuting idempotent set found for Cl{sig}")
    return found


def idempotent_from_blades(
    ctx: AlgebraContext, blades: Sequence[Blade], signs: Sequence[int] | None = None
) -> Multivector:
    half = Fraction(1, 2)
    f = ctx.identity
    signs = signs or [1] * len(blades)
    for b, s in zip(blades, signs):
        f = f * Multivector(ctx, {0: half, b: half * s})
    return f


def primitive_idempotent(sig: SigLike) -> Multivector:
    """Product of the factors 1/2(1 + e_T), all signs "+"."""
    sig = require_simple(sig)
    return idempotent_from_blades(algebra(sig), idempotent_blades(sig))


def idempotent_family(sig: SigLike) -> list[Multivector]:
    """All 2^k primitive idempotents obtained from the sign choices."""
    sig = require_simple(sig)
    ctx = algebra(sig)
    blades = idempotent_blades(sig)
    k = len(blades)
    out = []
    for choice in range(1 << k):
        signs = [-1 if choice >> j & 1 else 1 for j in range(k)]
        out.append(idempotent_from_blades(ctx, blades, signs))
    return out


def _check_idempotent(f: Multivector) -> None:
    if f.is_zero or f * f != f:
        raise NotIdempotentError(f"{format_multivector(f)} is not an idempotent")


def minimal_ideal_basis(
    ctx: AlgebraContext, f: Multivector
) -> tuple[list[Multivector], list[Blade]]:
    """Real basis ``b f`` of the left ideal ``Cl f``, scanning blades ``b``
    in canonical order and keeping the linearly independent products."""
    if f.ctx is not ctx:
        f = Multivector(ctx, f.terms)
    _check_idempotent(f)
    span = Span()
    elements, generators = [], []
    for b in ctx.blades:
        v = ctx.blade(b) * f
        if v.is_zero:
            continue
        if span.add(v.terms) is None:
            elements.append(v)
            generators.append(b)
    return elements, generators


def k_field_basis(
    ideal: tuple[Sequence[Multivector], Sequence[Blade]], f: Multivector
) -> tuple[list[Multivector], list[Blade]]:
    """Basis ``f g f`` of the division ring K drawn from the ideal generators."""
    elements_in, generators_in = ideal
    span = Span()
    elements, generators = [], []
    for v, g in zip(elements_in, generators_in):
        w = f * v
        if w.is_zero:
            continue
        if span.add(w.terms) is None:
            elements.append(w)
            generators.append(g)
    sig = f.ctx.sig
    if sig.is_simple and len(elements) != KIND_DIMS[field_kind(sig)]:
        raise InternalError(
            f"K has dimension {len(elements)} in Cl{sig}, "
            f"expected {KIND_DIMS[field_kind(sig)]} for {field_kind(sig)}"
        )
    return elements, generators


def _build_field(
    ctx: AlgebraContext, f: Multivector, k_generators: Sequence[Blade]
) -> tuple[KField, list[Multivector]]:
    kappas = [ctx.blade(g) * f for g in k_generators]
    span = Span(k.terms for k in kappas)
    table = []
    for a in kappas:
        row = []
        for b in kappas:
            coeffs = span.express((a * b).terms)
            if coeffs is None:
                raise InternalError("K is not closed under the Clifford product")
            nz = [(i, c) for i, c in enumerate(coeffs) if c != 0]
            if len(nz) != 1 or abs(nz[0][1]) != 1:
                raise InternalError("K basis products are not signed basis elements")
            row.append((int(nz[0][1]), nz[0][0]))
        table.append(tuple(row))
    kind = {1: "real", 2: "complex", 4: "quaternionic"}.get(len(kappas))
    if kind is None:
        raise InternalError(f"K of dimension {len(kappas)} is not R, C or H")
    if kind == "real":
        names, signs = ("",), (1,)
    elif kind == "complex":
        names, signs = ("", "I"), (1, 1)
    else:
        # ii, jj follow the generators sorted by grade; kk := ii*jj
        sign_kk, idx_kk = table[1][2]
        if idx_kk != 3:
            raise InternalError("quaternion generators do not close as ii*jj = kk")
        names, signs = ("", "ii", "jj", "kk"), (1, 1, 1, sign_kk)
    return KField(kind, tuple(k_generators), tuple(table), names, signs), kappas


@dataclass(frozen=True)
class SpinorBasis:
    """Basis ``f_i = g_i f`` of the spinor space over K."""

    ctx: AlgebraContext
    f: Multivector
    elements: tuple[Multivector, ...]
    generators: tuple[Blade, ...]
    field: KField
    k_elements: tuple[Multivector, ...]
    _span: Span = dc_field(repr=False, compare=False, default=None)

    @property
    def dim(self) -> int:
        return len(self.elements)

    @property
    def k_generators(self) -> tuple[Blade, ...]:
        return self.field.generators

    def decompose(self, v: Multivector) -> list[tuple]:
        """K coordinates ``c_j`` with ``v = sum_j f_j c_j``."""
        coeffs = self._span.express(v.terms)
        if coeffs is None:
            raise InternalError(f"{format_multivector(v)} is not in the spinor space")
        d = self.field.dim
        coeffs = [Fraction(c) for c in coeffs]
        return [tuple(coeffs[j * d : (j + 1) * d]) for j in range(self.dim)]


def spinor_k_basis(
    sb_gens: Sequence[Blade], f: Multivector, fb_gens: Sequence[Blade]
) -> SpinorBasis:
    """Pick ``g`` from ``sb_gens`` while ``g f`` leaves the K-span so far."""
    ctx = f.ctx
    field, kappas = _build_field(ctx, f, fb_gens)
    ideal_dim = len(sb_gens)
    if ideal_dim % field.dim:
        raise DimensionError(
            f"ideal dimension {ideal_dim} is not a multiple of dim K = {field.dim}"
        )
    span = Span()
    elements, generators = [], []
    for g in sb_gens:
        fi = ctx.blade(g) * f
        if span.contains(fi.terms):
            continue
        for kappa in kappas:
            if span.add((fi * kappa).terms) is not None:
                raise DimensionError(
                    f"{blade_name(g)} f is not K-independent of the basis so far"
                )
        elements.append(fi)
        generators.append(g)
        if len(span) == ideal_dim:
            break
    if len(span) != ideal_dim:
        raise DimensionError(
            f"spinor K-basis spans {len(span)} real dimensions, ideal has {ideal_dim}"
        )
    return SpinorBasis(ctx, f, tuple(elements), tuple(generators), field, tuple(kappas), span)


@dataclass(frozen=True)
class AlgebraData:
    """The seven structure facts of a simple Cl(p,q), plus the spinor basis."""

    field_kind: str
    spinor_dim: int
    simple: bool
    idempotent: Multivector
    real_S_generators: tuple[Blade, ...]
    K_generators: tuple[Blade, ...]
    K_S_generators: tuple[Blade, ...]
    ideal_elements: tuple[Multivector, ...] = dc_field(repr=False, compare=False, default=())
    k_elements: tuple[Multivector, ...] = dc_field(repr=False, compare=False, default=())

    def as_tuple(self) -> tuple:
        return (
            self.field_kind,
            self.spinor_dim,
            "simple" if self.simple else "semisimple",
            self.idempotent,
            self.real_S_generators,
            self.K_generators,
            self.K_S_generators,
        )

    def __str__(self):
        def names(bs):
            return "[" + ", ".join(blade_name(b) for b in bs) + "]"

        return (
            f"[{self.field_kind}, {self.spinor_dim}, "
            f"{'simple' if self.simple else 'semisimple'}, "
            f"{format_multivector(self.idempotent)}, "
            f"{names(self.real_S_generators)}, {names(self.K_generators)}, "
            f"{names(self.K_S_generators)}]"
        )


@functools.lru_cache(maxsize=None)
def _spinor_basis(p: int, q: int) -> SpinorBasis:
    sig = require_simple(Signature(p, q))
    ctx = algebra(sig)
    f = primitive_idempotent(sig)
    ideal = minimal_ideal_basis(ctx, f)
    _, fb_gens = k_field_basis(ideal, f)
    return spinor_k_basis(ideal[1], f, fb_gens)


def spinor_basis(sig: SigLike) -> SpinorBasis:
    """Cached spinor K-basis of Cl(p,q) built from the default idempotent."""
    sig = require_simple(sig)
    return _spinor_basis(sig.p, sig.q)


@functools.lru_cache(maxsize=None)
def _clidata(p: int, q: int) -> AlgebraData:
    sig = Signature(p, q)
    ctx = algebra(sig)
    f = primitive_idempotent(sig)
    ideal = minimal_ideal_basis(ctx, f)
    k_elements, fb_gens = k_field_basis(ideal, f)
    basis = spinor_basis(sig)
    expected = 1 << (sig.n - idempotent_factor_count(sig))
    if len(ideal[0]) != expected:
        raise InternalError(
            f"ideal of Cl{sig} has dimension {len(ideal[0])}, expected {expected}"
        )
    return AlgebraData(
        field_kind=field_kind(sig),
        spinor_dim=basis.dim,
        simple=True,
        idempotent=f,
        real_S_generators=tuple(ideal[1]),
        K_generators=tuple(fb_gens),
        K_S_generators=basis.generators,
        ideal_elements=tuple(ideal[0]),
        k_elements=tuple(k_elements),
    )


def clidata(sig: SigLike) -> AlgebraData:
    """Structure data of a simple Cl(p,q); semisimple signatures raise."""
    sig = require_simple(sig)
    return _clidata(sig.p, sig.q)


def mat_k_repr(x: Multivector, basis: SpinorBasis) -> KMatrix:
    """Matrix of left multiplication by ``x`` on the spinor basis:
    column ``i`` holds the K coordinates of ``x f_i``."""
    if x.ctx is not basis.ctx:
        raise ContextMismatchError(
            f"multivector in Cl{x.ctx.sig}, basis in Cl{basis.ctx.sig}"
        )
    cols = [basis.decompose(x * fi) for fi in basis.elements]
    n = basis.dim
    return KMatrix(basis.field, tuple(tuple(cols[i][j] for i in range(n)) for j in range(n)))
