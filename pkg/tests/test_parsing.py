import json
from fractions import Fraction

import pytest
from hypothesis import given

from cliffexp.algebra import algebra, format_multivector
from cliffexp.errors import DimensionError, ParseError
from cliffexp.isomorphism import repr_table
from cliffexp.parsing import (
    format_k_entry,
    load_matrix_document,
    matrix_document,
    matrix_to_document,
    parse_k_entry,
    parse_matrix,
    parse_multivector,
)

from .strategies import multivectors

CL31 = algebra(3, 1)


@given(multivectors((3, 1), max_terms=8))
def test_format_parse_round_trip(x):
    assert parse_multivector(format_multivector(x), CL31) == x


@given(multivectors((6, 5), max_terms=6))
def test_round_trip_with_wide_indices(x):
    assert parse_multivector(str(x), algebra(6, 5)) == x


def test_parse_examples():
    x = parse_multivector("Id - 1/2 e1 + 1/2 e12 - 5/2 e1234", CL31)
    assert x.coeff(0) == 1
    assert x.coeff("e1234") == Fraction(-5, 2)
    assert parse_multivector("0", CL31).is_zero
    assert parse_multivector("2*e1 + e1 - 3 e1", CL31).is_zero
    assert parse_multivector("  -e34+1/4  ", CL31) == CL31.scalar(Fraction(1, 4)) - CL31.e(3, 4)


@pytest.mark.parametrize(
    "text,pos",
    [
        ("e21", 0),
        ("Id + e15", 5),
        ("Id + + e1", 5),
        ("e1 e2", 3),
        ("Id - 1/0 e1", 5),
        ("Id ? e1", 3),
        ("Id -", 4),
    ],
)
def test_parse_errors_report_position(text, pos):
    with pytest.raises(ParseError) as info:
        parse_multivector(text, CL31)
    assert info.value.position == pos
    assert f"at position {pos}" in str(info.value)


def test_k_entries():
    quat = repr_table((1, 3)).field
    assert parse_k_entry("1+2*ii-3*kk", quat) == tuple(
        Fraction(c) * s for c, s in zip((1, 2, 0, -3), quat.unit_signs)
    )
    assert format_k_entry(parse_k_entry("kk - 3*ii", quat), quat) == "-3*ii + kk"
    cplx = repr_table((3, 0)).field
    assert format_k_entry(parse_k_entry("1-3*I", cplx), cplx) == "1 - 3*I"
    with pytest.raises(ParseError, match="mixed"):
        parse_k_entry("1 + ii", cplx)
    with pytest.raises(ParseError, match="unknown unit"):
        parse_k_entry("1 + J", cplx)


def test_matrix_documents(data_dir):
    doc = load_matrix_document(data_dir / "complex2.json")
    assert doc.field_kind == "complex" and doc.size == 2
    table = repr_table((3, 0))
    A = parse_matrix(doc, table.field, table.size)
    assert matrix_to_document(A)["rows"] == [["1 + 2*I", "1 - 3*I"], ["1 - I", "-2*I"]]

    ident = matrix_document({"kind": "real", "rows": [[1, 0], [0, 1]]})
    real = repr_table((2, 0)).field
    assert parse_matrix(ident, real).rows == (((1,), (0,)), ((0,), (1,)))


def test_document_errors(tmp_path):
    real = repr_table((3, 1)).field
    with pytest.raises(DimensionError):
        matrix_document({"kind": "real", "rows": [[1, 2], [3]]})
    with pytest.raises(ParseError):
        matrix_document({"kind": "octonion", "rows": [[1]]})
    with pytest.raises(ParseError):
        matrix_document({"rows": "nope"})
    doc = matrix_document({"kind": "complex", "rows": [["I"]]})
    with pytest.raises(DimensionError):
        parse_matrix(doc, real)
    doc = matrix_document({"kind": "real", "rows": [[1, 0], [0, 1]]})
    with pytest.raises(DimensionError):
        parse_matrix(doc, real, 4)
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(ParseError):
        load_matrix_document(bad)
    sig = matrix_document({"kind": "real", "rows": [[1]], "signature": [2, 0]}).signature
    assert (sig.p, sig.q) == (2, 0)


def test_float_entries_print_rounded():
    cplx = repr_table((3, 0)).field
    e = parse_k_entry("1/3 - 2/3*I", cplx)
    assert format_k_entry(e, cplx, digits=5) == "0.33333 - 0.66667*I"
    assert json.dumps(format_k_entry(e, cplx)) == '"1/3 - 2/3*I"'
