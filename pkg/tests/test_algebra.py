from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cliffexp.algebra import (
    Signature,
    algebra,
    blade_from_indices,
    blade_name,
    blade_product,
    canonical_blades,
    coeff_norm,
)
from cliffexp.errors import ContextMismatchError, SignatureError

from .strategies import all_signatures, multivectors, simple_signatures

SMALL_SIMPLE = simple_signatures(4)


def test_canonical_order_is_grade_then_lex():
    names = [blade_name(b) for b in canonical_blades(4)]
    assert names == [
        "Id", "e1", "e2", "e3", "e4",
        "e12", "e13", "e14", "e23", "e24", "e34",
        "e123", "e124", "e134", "e234", "e1234",
    ]


def test_wide_index_names():
    assert blade_name(blade_from_indices([1, 10])) == "e1_10"
    ctx = algebra(6, 5)
    assert ctx.parse_blade("e1_10") == blade_from_indices([1, 10])


@pytest.mark.parametrize("p,q", all_signatures(5))
def test_generator_squares_follow_metric(p, q):
    ctx = algebra(p, q)
    for i in range(1, p + q + 1):
        expected = 1 if i <= p else -1
        assert ctx.e(i) * ctx.e(i) == expected


@pytest.mark.parametrize("p,q", all_signatures(4))
def test_distinct_generators_anticommute(p, q):
    ctx = algebra(p, q)
    n = p + q
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            assert ctx.e(i) * ctx.e(j) == -(ctx.e(j) * ctx.e(i))
            assert ctx.e(i, j) == ctx.blade(blade_from_indices([i, j]))


def test_blade_product_sign_example():
    sig = Signature(3, 1)
    # e23 e13 = -e2 e3 e3 e1 ... = e12 with e3^2 = 1: e2 e3 e1 e3 = -e2 e1 = e12
    assert blade_product(0b0110, 0b0101, sig) == (1, 0b0011)
    # e4 e4 = -1 in Cl(3,1)
    assert blade_product(0b1000, 0b1000, sig) == (-1, 0)


@pytest.mark.parametrize("sig", SMALL_SIMPLE, ids=str)
@given(data=st.data())
def test_product_is_associative(sig, data):
    x = data.draw(multivectors(sig))
    y = data.draw(multivectors(sig))
    z = data.draw(multivectors(sig))
    assert (x * y) * z == x * (y * z)


@pytest.mark.parametrize("sig", [(3, 1), (1, 3), (0, 4)], ids=str)
@given(data=st.data())
def test_product_distributes(sig, data):
    x, y, z = (data.draw(multivectors(sig)) for _ in range(3))
    assert x * (y + z) == x * y + x * z
    assert (x + y) * z == x * z + y * z


@given(multivectors((3, 1)), multivectors((3, 1)))
def test_wedge_of_vectors_is_antisymmetric_part(x, y):
    a, b = x.grade_part(1), y.grade_part(1)
    assert (a ^ b) == (a * b - b * a) / 2


def test_identity_and_zero():
    ctx = algebra(2, 2)
    x = ctx.e(1) + Fraction(3, 2) * ctx.e(2, 3)
    assert ctx.identity * x == x == x * ctx.identity
    assert (ctx.zero() * x).is_zero
    assert x ** 0 == ctx.identity
    assert x ** 3 == x * x * x


def test_mixed_contexts_are_rejected():
    with pytest.raises(ContextMismatchError):
        algebra(3, 1).e(1) * algebra(1, 3).e(1)


@pytest.mark.parametrize("p,q", [(-1, 2), (0, 0), (9, 8)])
def test_bad_signatures(p, q):
    with pytest.raises(SignatureError):
        Signature(p, q)


def test_coeff_norms():
    ctx = algebra(3, 0)
    x = ctx.multivector({0: Fraction(-3), 5: Fraction(1, 2)})
    assert coeff_norm(x, "inf") == 3
    assert coeff_norm(x, "one") == Fraction(7, 2)
    assert coeff_norm(ctx.zero()) == 0
    with pytest.raises(ValueError):
        coeff_norm(x, "two")


def test_multivectors_are_hashable_values():
    ctx = algebra(3, 0)
    a = ctx.e(1) + ctx.e(2)
    b = ctx.e(2) + ctx.e(1)
    assert a == b and hash(a) == hash(b)
    assert len({a, b}) == 1
