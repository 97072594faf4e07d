"""Command-line front end for the Clifford exponential pipeline."""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .algebra import Signature, algebra
from .errors import CliffordError, ParseError
from .isomorphism import default_signature, phi, repr_table, unphi
from .matrixref import matrix_1norm, matrix_minpoly, reference_expm
from .minpoly import DEFAULT_MAX_N, climinpoly, exp_converged, sexp
from .parsing import (
    load_matrix_document,
    matrix_to_document,
    parse_matrix,
    parse_multivector,
)
from .scalars import default_digits, format_decimal
from .structure import clidata


def _signature(text: str) -> Signature:
    try:
        p, q = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected P,Q, got {text!r}") from None
    try:
        return Signature(p, q)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _positive_fraction(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a number, got {text!r}") from None
    if value <= 0:
        raise argparse.ArgumentTypeError("eps must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cliffexp",
        description="Exponentials of real, complex and quaternionic matrices via Clifford algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("clidata", help="print the spinor data of Cl(p,q)")
    p.add_argument("-p", type=int, required=True)
    p.add_argument("-q", type=int, required=True)

    def matrix_args(sp, required=True):
        sp.add_argument("--sig", type=_signature, help="signature P,Q (default by matrix kind)")
        sp.add_argument("--matrix", required=required, metavar="FILE", help="JSON matrix document")

    p = sub.add_parser("phi", help="Clifford image of a matrix")
    matrix_args(p)

    p = sub.add_parser("minpoly", help="real minimal polynomial")
    matrix_args(p, required=False)
    p.add_argument("--expr", help="multivector expression (needs --sig)")
    p.add_argument(
        "--over-entries",
        action="store_true",
        help="also print the minimal polynomial over the entry field (R or C)",
    )

    for name, text in (
        ("exp", "exponential of a matrix via the Clifford route"),
        ("verify", "exponential plus a 1-norm check against a matrix oracle"),
    ):
        p = sub.add_parser(name, help=text)
        matrix_args(p)
        stop = p.add_mutually_exclusive_group()
        stop.add_argument("--order", type=_positive_int, help="truncation order N")
        stop.add_argument("--eps", type=_positive_fraction, help="stop when the step is below eps")
        p.add_argument("--max-order", type=_positive_int, default=DEFAULT_MAX_N)
        p.add_argument("--digits", type=_positive_int, default=None)
        if name == "exp":
            p.add_argument("--format", choices=("exact", "float"), default="exact")
    return parser


def _load(args):
    doc = load_matrix_document(args.matrix)
    sig = args.sig or doc.signature or default_signature(doc.field_kind, doc.size)
    table = repr_table(sig)
    A = parse_matrix(doc, table.field, table.size)
    return sig, table, A


def _exponential(args, table, A):
    p = phi(A, table)
    if args.order is not None:
        return sexp(p, args.order), args.order
    eps = args.eps if args.eps is not None else Fraction(1, 10**default_digits())
    value, n, _ = exp_converged(p, eps, args.max_order)
    return value, n


def _cmd_clidata(args, out):
    print(clidata((args.p, args.q)), file=out)


def _cmd_phi(args, out):
    _, table, A = _load(args)
    print(phi(A, table), file=out)


def _cmd_minpoly(args, out):
    if (args.matrix is None) == (args.expr is None):
        raise ParseError("give exactly one of --matrix or --expr")
    if args.expr is not None:
        if args.sig is None:
            raise ParseError("--expr needs --sig")
        x = parse_multivector(args.expr, algebra(args.sig))
        print(climinpoly(x).poly, file=out)
        return
    _, table, A = _load(args)
    print(climinpoly(phi(A, table)).poly, file=out)
    if args.over_entries:
        print(matrix_minpoly(A), file=out)


def _cmd_exp(args, out):
    sig, table, A = _load(args)
    value, n = _exponential(args, table, A)
    E = unphi(value, table)
    digits = args.digits or default_digits()
    doc = matrix_to_document(E, digits if args.format == "float" else None)
    doc = {"kind": doc["kind"], "signature": [sig.p, sig.q], "order": n, "rows": doc["rows"]}
    print(json.dumps(doc, indent=2), file=out)


def _cmd_verify(args, out):
    sig, table, A = _load(args)
    value, n = _exponential(args, table, A)
    E = unphi(value, table)
    digits = args.digits or default_digits()
    # the exact Clifford result against the rounded oracle
    R = reference_expm(A, digits)
    norm = matrix_1norm(E - R.map(Fraction), digits)
    print(f"signature: {sig}", file=out)
    print(f"order: {n}", file=out)
    print(f"one_norm: {format_decimal(norm, digits)}", file=out)


COMMANDS = {
    "clidata": _cmd_clidata,
    "phi": _cmd_phi,
    "minpoly": _cmd_minpoly,
    "exp": _cmd_exp,
    "verify": _cmd_verify,
}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        COMMANDS[args.command](args, out)
    except ParseError as exc:
        print(f"cliffexp: parse error: {exc}", file=sys.stderr)
        return 2
    except (CliffordError, OSError) as exc:
        print(f"cliffexp: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
