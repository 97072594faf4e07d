"""Exact linear algebra over any field whose elements support ``+ - * /``.

Vectors are sparse dicts ``key -> coefficient`` with no stored zeros.  The
workhorse is :class:`Span`, an incrementally built row-echelon basis that
remembers how each reduced row combines the vectors that were inserted, so
linear dependencies (Krylov ladders, ideal bases) come out directly.
"""
from __future__ import annotations

from collections.abc import Hashable, Iterable, Mapping, Sequence
from fractions import Fraction

from .errors import SingularSystemError

Vector = Mapping[Hashable, object]


def _axpy(target: dict, factor, source: Mapping) -> None:
    """target -= factor * source, in place, dropping zeros."""
    for k, v in source.items():
        new = target.get(k)
        new = -factor * v if new is None else new - factor * v
        if new == 0:
            target.pop(k, None)
        else:
            target[k] = new


class Span:
    """Row-echelon span of inserted vectors.

    Each stored row is ``(pivot, reduced, combo)`` where ``reduced`` equals
    ``sum(combo[i] * inserted[i])``.  Rows are reduced against all earlier
    pivots, so sequential elimination in insertion order is exact.
    """

    def __init__(self, vectors: Iterable[Vector] = ()):
        self._rows: list[tuple[Hashable, dict, dict]] = []
        self._count = 0
        for v in vectors:
            if self.add(v) is not None:
                raise SingularSystemError("initial vectors are linearly dependent")

    def __len__(self) -> int:
        return self._count

    def _reduce(self, vec: Vector) -> tuple[dict, dict]:
        residual = {k: _exact(v) for k, v in vec.items() if v != 0}
        combo: dict[int, object] = {}
        for pivot, reduced, rcombo in self._rows:
            c = residual.get(pivot)
            if c is None:
                continue
            factor = c / reduced[pivot]
            _axpy(residual, factor, reduced)
            for i, w in rcombo.items():
                new = combo.get(i)
                combo[i] = factor * w if new is None else new + factor * w
        return residual, combo

    def express(self, vec: Vector) -> list | None:
        """Coefficients of ``vec`` over the inserted vectors, or None."""
        residual, combo = self._reduce(vec)
        if residual:
            return None
        return [combo.get(i, 0) for i in range(self._count)]

    def contains(self, vec: Vector) -> bool:
        residual, _ = self._reduce(vec)
        return not residual

    def add(self, vec: Vector) -> list | None:
        """Insert ``vec`` if independent and return None; else return its
        coefficients over the already inserted vectors (nothing inserted)."""
        residual, combo = self._reduce(vec)
        if not residual:
            return [combo.get(i, 0) for i in range(self._count)]
        pivot = min(residual)
        rcombo = {i: -w for i, w in combo.items() if w != 0}
        rcombo[self._count] = 1
        self._rows.append((pivot, residual, rcombo))
        self._count += 1
        return None


def _exact(v):
    # int / int would produce a float
    return Fraction(v) if isinstance(v, int) else v


def solve(matrix: Sequence[Sequence], rhs: Sequence) -> list:
    """Solve the square system ``matrix @ x = rhs`` exactly.

    Raises SingularSystemError when the matrix is singular.
    """
    n = len(matrix)
    if any(len(row) != n for row in matrix) or len(rhs) != n:
        raise ValueError("solve expects a square system")
    cols = [{i: matrix[i][j] for i in range(n) if matrix[i][j] != 0} for j in range(n)]
    span = Span()
    for col in cols:
        if span.add(col) is not None:
            raise SingularSystemError("matrix is singular")
    coeffs = span.express({i: rhs[i] for i in range(n) if rhs[i] != 0})
    if coeffs is None:  # pragma: no cover - impossible for a nonsingular matrix
        raise SingularSystemError("system is inconsistent")
    return coeffs


def rank(vectors: Iterable[Vector]) -> int:
    span = Span()
    for v in vectors:
        span.add(v)
    return len(span)


def as_fraction_matrix(rows) -> list[list[Fraction]]:
    return [[Fraction(x) for x in row] for row in rows]
