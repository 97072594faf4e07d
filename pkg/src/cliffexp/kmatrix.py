"""Division ring K = f Cl(p,q) f and matrices over it.

A K-scalar is a tuple of real coordinates over the K generators (length 1,
2 or 4).  Multiplication follows a structure table derived from the Clifford
product, so the quaternionic case is noncommutative and entry order matters.
"""
from __future__ import annotations

from dataclasses import dataclass
from dataclasses import field as dc_field
from decimal import Decimal
from fractions import Fraction
from typing import Callable, Sequence

from .algebra import blade_name
from .errors import DimensionError, InternalError
from .scalars import decimal_context, to_decimal

KIND_DIMS = {"real": 1, "complex": 2, "quaternionic": 4}

KScalar = tuple


@dataclass(frozen=True)
class KField:
    """Real basis of K with its multiplication table.

    ``table[a][b] == (sign, c)`` means ``K_a * K_b == sign * K_c``.
    ``generators`` are the blades ``g`` with ``K_a = g_a f``; the first is Id.
    ``unit_names`` label the coordinates in text form (``""`` for 1, then
    ``I`` or ``ii, jj, kk``); ``unit_signs[a]`` is the sign relating the
    named unit to the basis element.
    """

    kind: str
    generators: tuple[int, ...]
    table: tuple[tuple[tuple[int, int], ...], ...]
    unit_names: tuple[str, ...] = dc_field(default=())
    unit_signs: tuple[int, ...] = dc_field(default=())

    def __post_init__(self):
        if KIND_DIMS.get(self.kind) != len(self.generators):
            raise InternalError(
                f"{self.kind} field needs {KIND_DIMS.get(self.kind)} generators, "
                f"got {len(self.generators)}"
            )

    @property
    def dim(self) -> int:
        return len(self.generators)

    @property
    def generator_names(self) -> list[str]:
        return [blade_name(g) for g in self.generators]

    def zero(self) -> KScalar:
        return (Fraction(0),) * self.dim

    def one(self) -> KScalar:
        return (Fraction(1),) + (Fraction(0),) * (self.dim - 1)

    def embed(self, x) -> KScalar:
        """Real scalar as a K element."""
        return (x,) + (x - x,) * (self.dim - 1)

    def add(self, a: KScalar, b: KScalar) -> KScalar:
        return tuple(x + y for x, y in zip(a, b))

    def sub(self, a: KScalar, b: KScalar) -> KScalar:
        return tuple(x - y for x, y in zip(a, b))

    def neg(self, a: KScalar) -> KScalar:
        return tuple(-x for x in a)

    def scale(self, a: KScalar, s) -> KScalar:
        return tuple(s * x for x in a)

    def mul(self, a: KScalar, b: KScalar) -> KScalar:
        if self.dim == 1:
            return (a[0] * b[0],)
        out = [0] * self.dim
        for i, x in enumerate(a):
            if x == 0:
                continue
            row = self.table[i]
            for j, y in enumerate(b):
                if y == 0:
                    continue
                sign, k = row[j]
                out[k] = out[k] + x * y if sign > 0 else out[k] - x * y
        zero = a[0] - a[0]
        return tuple(zero + v if isinstance(v, int) else v for v in out)

    def is_zero(self, a: KScalar) -> bool:
        return all(x == 0 for x in a)

    def magnitude(self, a: KScalar, digits: int) -> Decimal:
        """Euclidean norm of the coordinate vector."""
        ctx = decimal_context(digits)
        sq = sum((to_decimal(x, digits) ** 2 for x in a), Decimal(0))
        return ctx.sqrt(sq)

    def left_regular(self, a: KScalar) -> list[list]:
        """Real matrix of ``y -> a*y`` in the K basis (columns = images)."""
        d = self.dim
        cols = [self.mul(a, tuple(1 if i == j else 0 for i in range(d))) for j in range(d)]
        return [[cols[j][i] for j in range(d)] for i in range(d)]

    def unit(self, name: str) -> KScalar:
        """Coordinates of a named unit (``"I"``, ``"ii"``, ...)."""
        try:
            i = self.unit_names.index(name)
        except ValueError:
            raise KeyError(f"{name!r} is not a unit of the {self.kind} field") from None
        coords = [Fraction(0)] * self.dim
        coords[i] = Fraction(self.unit_signs[i])
        return tuple(coords)


@dataclass(frozen=True)
class KMatrix:
    """Dense matrix with K-scalar entries (tuples of real coordinates)."""

    field: KField
    rows: tuple[tuple[KScalar, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(tuple(e) for e in r) for r in self.rows)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise DimensionError("ragged matrix rows")
        for r in rows:
            for e in r:
                if len(e) != self.field.dim:
                    raise DimensionError(
                        f"entry {e} does not have {self.field.dim} K coordinates"
                    )
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_real(cls, field_: KField, rows: Sequence[Sequence]) -> KMatrix:
        return cls(field_, tuple(tuple(field_.embed(x) for x in r) for r in rows))

    @classmethod
    def identity(cls, field_: KField, n: int) -> KMatrix:
        return cls(
            field_,
            tuple(
                tuple(field_.one() if i == j else field_.zero() for j in range(n))
                for i in range(n)
            ),
        )

    @classmethod
    def zeros(cls, field_: KField, n: int, m: int | None = None) -> KMatrix:
        m = n if m is None else m
        return cls(field_, tuple(tuple(field_.zero() for _ in range(m)) for _ in range(n)))

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), (len(self.rows[0]) if self.rows else 0)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def _check_same(self, other: KMatrix) -> None:
        if not isinstance(other, KMatrix):
            raise TypeError("expected a KMatrix")
        if other.field != self.field:
            raise DimensionError(
                f"K mismatch: {self.field.kind} vs {other.field.kind}"
            )

    def __add__(self, other: KMatrix) -> KMatrix:
        self._check_same(other)
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch {self.shape} vs {other.shape}")
        f = self.field
        return KMatrix(
            f,
            tuple(
                tuple(f.add(a, b) for a, b in zip(ra, rb))
                for ra, rb in zip(self.rows, other.rows)
            ),
        )

    def __sub__(self, other: KMatrix) -> KMatrix:
        self._check_same(other)
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch {self.shape} vs {other.shape}")
        f = self.field
        return KMatrix(
            f,
            tuple(
                tuple(f.sub(a, b) for a, b in zip(ra, rb))
                for ra, rb in zip(self.rows, other.rows)
            ),
        )

    def __neg__(self) -> KMatrix:
        return self.map(lambda x: -x)

    def scale(self, s) -> KMatrix:
        """Multiply every entry by the real scalar ``s``."""
        return self.map(lambda x: s * x)

    def __matmul__(self, other: KMatrix) -> KMatrix:
        self._check_same(other)
        n, k = self.shape
        k2, m = other.shape
        if k != k2:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        f = self.field
        out = []
        for i in range(n):
            row = []
            for j in range(m):
                acc = None
                for t in range(k):
                    a = self.rows[i][t]
                    b = other.rows[t][j]
                    if f.is_zero(a) or f.is_zero(b):
                        continue
                    prod = f.mul(a, b)
                    acc = prod if acc is None else f.add(acc, prod)
                if acc is None:
                    acc = tuple(x - x for x in self.rows[i][0])
                row.append(acc)
            out.append(tuple(row))
        return KMatrix(f, tuple(out))

    def map(self, fn: Callable) -> KMatrix:
        """Apply ``fn`` to every real coordinate."""
        return KMatrix(
            self.field,
            tuple(tuple(tuple(fn(x) for x in e) for e in r) for r in self.rows),
        )

    def to_decimal(self, digits: int) -> KMatrix:
        return self.map(lambda x: to_decimal(x, digits))

    def is_zero(self) -> bool:
        return all(self.field.is_zero(e) for r in self.rows for e in r)

    def real_entries(self) -> list[list]:
        """Entries of a real matrix; raises if any entry leaves R."""
        if self.field.dim != 1:
            raise DimensionError("matrix has non-real K")
        return [[e[0] for e in r] for r in self.rows]
