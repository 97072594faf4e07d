"""Matrix-side reference computations used to check the Clifford route.

Nothing here touches multivectors: the matrix exponential oracle works on
the real left-regular embedding of a K-matrix with decimal arithmetic, and
minimal polynomials come from Krylov dependence of matrix powers.
"""
from __future__ import annotations

from decimal import Decimal, localcontext
from fractions import Fraction

from .errors import DimensionError, UnsupportedFieldError
from .kmatrix import KField, KMatrix
from .linalg import Span
from .poly import Polynomial
from .scalars import GaussianRational, decimal_context, default_digits, to_decimal

GUARD_DIGITS = 10


def kmat_mul(A: KMatrix, B: KMatrix) -> KMatrix:
    """Matrix product; K entries multiply left to right."""
    return A @ B


def matrix_1norm(A: KMatrix, digits: int | None = None) -> Decimal:
    """Largest column sum of entry magnitudes (Euclidean norm over K)."""
    digits = digits or default_digits()
    work = digits + GUARD_DIGITS
    n, m = A.shape
    best = Decimal(0)
    with localcontext(decimal_context(work)):
        for j in range(m):
            col = sum((A.field.magnitude(A.rows[i][j], work) for i in range(n)), Decimal(0))
            best = max(best, col)
    return to_decimal(best, digits)


def real_embedding(A: KMatrix) -> list[list]:
    """Real (d*n x d*n) matrix replacing each entry by its left-regular block."""
    d = A.field.dim
    n, m = A.shape
    out = [[None] * (d * m) for _ in range(d * n)]
    for i in range(n):
        for j in range(m):
            block = A.field.left_regular(A.rows[i][j])
            for a in range(d):
                for b in range(d):
                    out[i * d + a][j * d + b] = block[a][b]
    return out


def from_real_embedding(M: list[list], field: KField) -> KMatrix:
    """Inverse of :func:`real_embedding`: the first column of each block."""
    d = field.dim
    n = len(M) // d
    m = len(M[0]) // d
    return KMatrix(
        field,
        tuple(
            tuple(tuple(M[i * d + a][j * d] for a in range(d)) for j in range(m))
            for i in range(n)
        ),
    )


def _matmul(X, Y):
    n, k, m = len(X), len(Y), len(Y[0])
    return [[sum((X[i][t] * Y[t][j] for t in range(k)), Decimal(0)) for j in range(m)] for i in range(n)]


def _real_expm(M: list[list[Decimal]], prec: int) -> list[list[Decimal]]:
    n = len(M)
    norm = max((sum(abs(M[i][j]) for i in range(n)) for j in range(n)), default=Decimal(0))
    squarings = 0
    half = Decimal("0.5")
    while norm > half:
        norm /= 2
        squarings += 1
    scale = Decimal(2) ** squarings
    X = [[x / scale for x in row] for row in M]
    E = [[Decimal(1) if i == j else Decimal(0) for j in range(n)] for i in range(n)]
    term = [row[:] for row in E]
    tol = Decimal(10) ** -(prec + 2)
    k = 0
    while True:
        k += 1
        term = [[x / k for x in row] for row in _matmul(term, X)]
        E = [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(E, term)]
        if max(abs(x) for row in term for x in row) < tol:
            break
    for _ in range(squarings):
        E = _matmul(E, E)
    return E


def reference_expm(A: KMatrix, digits: int | None = None) -> KMatrix:
    """exp(A) by scaling and squaring around a Taylor core, in decimal
    arithmetic carried at ``digits`` plus guard digits; the result is rounded
    to ``digits`` significant digits."""
    digits = digits or default_digits()
    n, m = A.shape
    if n != m:
        raise DimensionError(f"matrix exponential needs a square matrix, got {A.shape}")
    prec = digits + GUARD_DIGITS
    with localcontext(decimal_context(prec)):
        M = [[to_decimal(x, prec) for x in row] for row in real_embedding(A)]
        E = _real_expm(M, prec)
    return from_real_embedding(E, A.field).map(lambda x: to_decimal(x, digits))


def _entry_field_values(A: KMatrix) -> list[list]:
    kind = A.field.kind
    if kind == "real":
        return [[Fraction(e[0]) for e in r] for r in A.rows]
    if kind == "complex":
        # the non-identity generator plays the imaginary unit
        s = A.field.unit_signs[1]
        return [[GaussianRational(e[0], s * e[1]) for e in r] for r in A.rows]
    raise UnsupportedFieldError("matrix minimal polynomial needs commutative K (R or C)")


def matrix_minpoly(A: KMatrix) -> Polynomial:
    """Monic minimal polynomial over R or C via Krylov dependence of powers."""
    n, m = A.shape
    if n != m:
        raise DimensionError("minimal polynomial needs a square matrix")
    M = _entry_field_values(A)
    complex_ = A.field.kind == "complex"
    one = GaussianRational(1) if complex_ else Fraction(1)
    zero = one - one
    power = [[one if i == j else zero for j in range(n)] for i in range(n)]
    span = Span()
    while True:
        vec = {(i, j): power[i][j] for i in range(n) for j in range(n) if power[i][j] != 0}
        coeffs = span.add(vec)
        if coeffs is not None:
            return Polynomial([-c for c in coeffs] + [one])
        power = [[sum((power[i][t] * M[t][j] for t in range(n)), zero) for j in range(n)] for i in range(n)]


def matrix_poly_eval(poly: Polynomial, A: KMatrix) -> KMatrix:
    """``poly(A)`` for a polynomial with real (rational) coefficients."""
    n = A.shape[0]
    eye = KMatrix.identity(A.field, n)
    acc = KMatrix.zeros(A.field, n)
    for c in reversed(poly.coeffs):
        acc = acc @ A + eye.scale(Fraction(c))
    return acc


def cpoly_divide(num: Polynomial, den: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Exact complex long division: ``num = q*den + r``, ``deg r < deg den``."""
    if not den:
        raise ZeroDivisionError("division by the zero polynomial")
    num = Polynomial(GaussianRational.coerce(c) for c in num.coeffs)
    den = Polynomial(GaussianRational.coerce(c) for c in den.coeffs)
    return divmod(num, den)
