"""Hypothesis strategies shared by the property suites."""
from fractions import Fraction

from hypothesis import strategies as st

from cliffexp.algebra import Signature, algebra
from cliffexp.kmatrix import KMatrix

small_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=6)


def simple_signatures(max_n):
    return [
        (p, n - p)
        for n in range(1, max_n + 1)
        for p in range(n + 1)
        if Signature(p, n - p).is_simple
    ]


def all_signatures(max_n):
    return [(p, n - p) for n in range(1, max_n + 1) for p in range(n + 1)]


@st.composite
def multivectors(draw, sig, max_terms=5):
    ctx = algebra(*sig)
    blades = draw(
        st.lists(st.integers(0, (1 << ctx.n) - 1), max_size=max_terms, unique=True)
    )
    return ctx.multivector({b: draw(small_fractions) for b in blades})


@st.composite
def kmatrices(draw, field, size):
    rows = tuple(
        tuple(
            tuple(draw(small_fractions) for _ in range(field.dim)) for _ in range(size)
        )
        for _ in range(size)
    )
    return KMatrix(field, rows)


def fraction_matrix(rows):
    return [[Fraction(x) for x in r] for r in rows]
