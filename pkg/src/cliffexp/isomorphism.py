"""The algebra isomorphism between K-matrices and Cl(p,q).

``unphi`` expands a multivector over the matrices ``m[i]`` representing the
basis blades; ``phi`` inverts it by solving the exact real linear system
``A = sum_j a_j m[j]`` in the K coordinates of every entry.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from dataclasses import field as dc_field
from fractions import Fraction

from .algebra import AlgebraContext, Multivector, Signature, algebra
from .errors import ContextMismatchError, DimensionError, SingularSystemError
from .kmatrix import KField, KMatrix
from .linalg import Span
from .structure import SigLike, SpinorBasis, mat_k_repr, require_simple, spinor_basis


def _flatten(A: KMatrix) -> dict:
    return {
        (i, j, l): x
        for i, row in enumerate(A.rows)
        for j, e in enumerate(row)
        for l, x in enumerate(e)
        if x != 0
    }


def _intify(A: KMatrix) -> KMatrix:
    # blade matrices have integer entries; ints mix with Fraction and Decimal
    return A.map(lambda x: int(x) if Fraction(x).denominator == 1 else x)


@dataclass(frozen=True)
class ReprTable:
    """Matrices ``m[i]`` of the canonical basis blades (``m[0]`` = identity)."""

    ctx: AlgebraContext
    basis: SpinorBasis
    m: tuple[KMatrix, ...]
    _span: Span = dc_field(repr=False, compare=False, default=None)

    @property
    def field(self) -> KField:
        return self.basis.field

    @property
    def FBgens(self):
        return self.basis.k_generators

    @property
    def size(self) -> int:
        return self.basis.dim


@functools.lru_cache(maxsize=None)
def _repr_table(p: int, q: int) -> ReprTable:
    ctx = algebra(p, q)
    basis = spinor_basis(ctx.sig)
    m = tuple(_intify(mat_k_repr(ctx.blade(b), basis)) for b in ctx.blades)
    span = Span()
    for mi in m:
        if span.add(_flatten(mi)) is not None:
            raise SingularSystemError(
                f"blade matrices of Cl{ctx.sig} are linearly dependent"
            )
    return ReprTable(ctx, basis, m, span)


def repr_table(sig: SigLike) -> ReprTable:
    """Cached table of blade matrices for a simple signature."""
    sig = require_simple(sig)
    return _repr_table(sig.p, sig.q)


def phi(A: KMatrix, table: ReprTable) -> Multivector:
    """Clifford image of a K-matrix."""
    if A.field != table.field:
        raise DimensionError(
            f"{A.field.kind} matrix does not match K = {table.field.kind} of Cl{table.ctx.sig}"
        )
    if A.shape != (table.size, table.size):
        raise DimensionError(
            f"matrix shape {A.shape} does not match spinor dimension {table.size}"
        )
    coeffs = table._span.express(_flatten(A))
    if coeffs is None:
        raise SingularSystemError("matrix is outside the span of the blade matrices")
    return table.ctx.multivector(dict(zip(table.ctx.blades, coeffs)))


def unphi(x: Multivector, table: ReprTable) -> KMatrix:
    """Matrix ``sum_i coeff(x, blade_i) m[i]``."""
    if x.ctx is not table.ctx:
        raise ContextMismatchError(
            f"multivector in Cl{x.ctx.sig}, table for Cl{table.ctx.sig}"
        )
    n = table.size
    d = table.field.dim
    acc = [[[None] * d for _ in range(n)] for _ in range(n)]
    for b, c in x.terms.items():
        mi = table.m[table.ctx.blade_index[b]]
        for i, row in enumerate(mi.rows):
            for j, e in enumerate(row):
                for l, v in enumerate(e):
                    if v == 0:
                        continue
                    cur = acc[i][j][l]
                    acc[i][j][l] = c * v if cur is None else cur + c * v
    zero = next(iter(x.terms.values()), Fraction(0))
    zero = zero - zero
    return KMatrix(
        table.field,
        tuple(
            tuple(tuple(zero if v is None else v for v in e) for e in row)
            for row in acc
        ),
    )


def default_signature(kind: str, size: int):
    """Signature used when none is given: Cl(3,1) for real 4x4, Cl(3,0) for
    complex 2x2, Cl(1,3) for quaternionic 2x2, and the same families for
    other powers of two."""
    if size < 1 or size & (size - 1):
        raise DimensionError(f"matrix size {size} is not a power of two")
    m = size.bit_length() - 1
    if kind == "real":
        if m == 0:
            raise DimensionError("1x1 real matrices have no simple Cl(p,q) with p+q >= 1")
        return Signature(m + 1, m - 1)
    if kind == "complex":
        return Signature(0, 1) if m == 0 else Signature(m + 2, m - 1)
    if kind == "quaternionic":
        return Signature(0, 2) if m == 0 else Signature(m, m + 2)
    raise ValueError(f"unknown field kind {kind!r}")
