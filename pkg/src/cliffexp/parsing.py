"""Text forms: multivector expressions and K-matrix documents.

Multivectors read and print as ``Id - 1/2 e1 + 1/2 e12 - 5/2 e1234``.
Matrix documents are JSON objects::

    {"kind": "complex", "rows": [["1+2*I", "1-3*I"], ["1-I", "-2*I"]]}

with ``kind`` one of ``real``, ``complex``, ``quaternion`` and an optional
``"signature": [p, q]``.  Complex entries use ``I``; quaternion entries use
``ii``, ``jj``, ``kk``.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from .algebra import AlgebraContext, Multivector, Signature
from .errors import DimensionError, ParseError
from .kmatrix import KField, KMatrix
from .scalars import format_decimal, format_rational

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<num>\d+(?:\.\d+)?(?:/\d+)?|\.\d+)
  | (?P<op>[+\-*])
  | (?P<word>[A-Za-z][A-Za-z0-9_]*)
  """,
    re.VERBOSE,
)

DOC_KINDS = {
    "real": "real",
    "complex": "complex",
    "quaternion": "quaternionic",
    "quaternionic": "quaternionic",
}

KIND_UNITS = {
    "real": (),
    "complex": ("I",),
    "quaternionic": ("ii", "jj", "kk"),
}


def _tokens(text: str):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", text, pos)
        if m.lastgroup != "ws":
            out.append((m.lastgroup, m.group(), pos))
        pos = m.end()
    return out


def _number(tok: str, text: str, pos: int) -> Fraction:
    try:
        return Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad coefficient {tok!r}", text, pos) from None


def _linear_terms(text: str):
    """Split ``[sign] [coef] [*] [word] (sign ...)`` into (coef, word, pos)."""
    toks = _tokens(text)
    if not toks:
        raise ParseError("empty expression", text, 0)
    terms = []
    i = 0
    first = True
    while i < len(toks):
        sign = 1
        kind, tok, pos = toks[i]
        if kind == "op" and tok in "+-":
            sign = -1 if tok == "-" else 1
            i += 1
        elif not first:
            raise ParseError(f"expected '+' or '-' before {tok!r}", text, pos)
        first = False
        if i >= len(toks):
            raise ParseError("dangling sign", text, len(text))
        kind, tok, pos = toks[i]
        coef = Fraction(1)
        word = None
        term_pos = pos
        if kind == "num":
            coef = _number(tok, text, pos)
            i += 1
            if i < len(toks) and toks[i][0] == "op" and toks[i][1] == "*":
                i += 1
                if i >= len(toks) or toks[i][0] != "word":
                    p = toks[i][2] if i < len(toks) else len(text)
                    raise ParseError("expected a unit after '*'", text, p)
            if i < len(toks) and toks[i][0] == "word":
                word = toks[i][1]
                term_pos = toks[i][2]
                i += 1
        elif kind == "word":
            word = tok
            i += 1
        else:
            raise ParseError(f"unexpected {tok!r}", text, pos)
        terms.append((sign * coef, word, term_pos))
    return terms


def parse_blade_name(name: str, n: int, text: str | None = None, pos: int = 0) -> int:
    """``Id`` -> 0, ``e134`` -> mask of e1 e3 e4, ``e1_10`` for indices > 9."""
    src = text if text is not None else name
    if name == "Id":
        return 0
    if not name.startswith("e") or len(name) < 2:
        raise ParseError(f"malformed blade {name!r}", src, pos)
    body = name[1:]
    if "_" in body:
        parts = body.split("_")
    else:
        parts = list(body)
    try:
        idx = [int(x) for x in parts]
    except ValueError:
        raise ParseError(f"malformed blade {name!r}", src, pos) from None
    if any(b <= a for a, b in zip(idx, idx[1:])):
        raise ParseError(f"blade {name!r} indices are not strictly ascending", src, pos)
    if idx[0] < 1 or idx[-1] > n:
        raise ParseError(f"blade {name!r} index out of range 1..{n}", src, pos)
    mask = 0
    for i in idx:
        mask |= 1 << (i - 1)
    return mask


def parse_multivector(text: str, ctx: AlgebraContext) -> Multivector:
    """Parse ``[sign] [coef] blade`` terms; repeated blades are summed."""
    terms: dict[int, Fraction] = {}
    for coef, word, pos in _linear_terms(text):
        blade = 0 if word is None else parse_blade_name(word, ctx.n, text, pos)
        terms[blade] = terms.get(blade, Fraction(0)) + coef
    return ctx.multivector(terms)


def parse_k_entry(text: str, field: KField) -> tuple:
    """Parse ``1 + 2*ii - 3*kk`` (or ``1-3*I``) into K coordinates."""
    if isinstance(text, (int, Fraction)):
        return field.embed(Fraction(text))
    if not isinstance(text, str):
        raise ParseError(f"matrix entry {text!r} must be a string or an integer")
    units = KIND_UNITS[field.kind]
    coords = [Fraction(0)] * field.dim
    for coef, word, pos in _linear_terms(text):
        if word is None:
            coords[0] += coef
            continue
        if word not in units:
            other = [k for k, u in KIND_UNITS.items() if word in u]
            if other:
                raise ParseError(
                    f"{other[0]} unit {word!r} in a {field.kind} matrix (mixed entry kinds)",
                    text,
                    pos,
                )
            raise ParseError(f"unknown unit {word!r}", text, pos)
        unit = field.unit(word)
        coords = [c + coef * u for c, u in zip(coords, unit)]
    return tuple(coords)


@dataclass(frozen=True)
class MatrixDocument:
    entry_kind: str
    rows: tuple[tuple[str, ...], ...]
    signature: Signature | None = None

    @property
    def field_kind(self) -> str:
        return DOC_KINDS[self.entry_kind]

    @property
    def size(self) -> int:
        return len(self.rows)


def matrix_document(data: dict) -> MatrixDocument:
    if not isinstance(data, dict):
        raise ParseError("matrix document must be a JSON object")
    kind = data.get("kind", "real")
    if kind not in DOC_KINDS:
        raise ParseError(f"unknown matrix kind {kind!r}; use real, complex or quaternion")
    rows = data.get("rows")
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise ParseError("'rows' must be a non-empty list of lists")
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise DimensionError(f"matrix must be square; got {n} rows of lengths {[len(r) for r in rows]}")
    sig = data.get("signature")
    if sig is not None:
        try:
            p, q = sig
            sig = Signature(int(p), int(q))
        except (TypeError, ValueError):
            raise ParseError(f"bad signature {sig!r}") from None
    return MatrixDocument(kind, tuple(tuple(r) for r in rows), sig)


def load_matrix_document(path: str | Path) -> MatrixDocument:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc.msg})", position=exc.pos) from None
    return matrix_document(data)


def parse_matrix(doc: MatrixDocument, field: KField, size: int | None = None) -> KMatrix:
    """Exact K-matrix from a document; ``size`` enforces the spinor dimension."""
    if doc.field_kind != field.kind:
        raise DimensionError(
            f"{doc.entry_kind} matrix cannot be represented over {field.kind} K"
        )
    if size is not None and doc.size != size:
        raise DimensionError(
            f"matrix is {doc.size}x{doc.size}, spinor dimension is {size}"
        )
    return KMatrix(
        field, tuple(tuple(parse_k_entry(e, field) for e in r) for r in doc.rows)
    )


def format_k_entry(coords: Sequence, field: KField, digits: int | None = None) -> str:
    """Text form of a K scalar, exact or rounded to ``digits``."""
    parts = []
    for i, c in enumerate(coords):
        if c == 0:
            continue
        c = c * field.unit_signs[i]
        neg = c < 0
        mag = -c if neg else c
        if digits is not None or isinstance(mag, Decimal):
            num = format_decimal(mag, digits or 20)
        else:
            num = format_rational(mag)
        unit = field.unit_names[i]
        if unit and num == "1" and digits is None:
            body = unit
        elif unit:
            body = f"{num}*{unit}"
        else:
            body = num
        if not parts:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f"{'-' if neg else '+'} {body}")
    return " ".join(parts) if parts else "0"


def format_matrix_rows(A: KMatrix, digits: int | None = None) -> list[list[str]]:
    return [[format_k_entry(e, A.field, digits) for e in r] for r in A.rows]


def matrix_to_document(A: KMatrix, digits: int | None = None) -> dict:
    kind = {"quaternionic": "quaternion"}.get(A.field.kind, A.field.kind)
    return {"kind": kind, "rows": format_matrix_rows(A, digits)}
