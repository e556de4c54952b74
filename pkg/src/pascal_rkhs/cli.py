"""Command-line front end.

Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 input parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import formats, hurwitz, hypergroup, kernels, operators, rkhs, transforms, verify
from .combinatorics import format_rational, parse_rational

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_PARSE = 0, 1, 2, 3


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _rational(text: str | None, flag: str):
    if text is None:
        return None
    try:
        return parse_rational(text)
    except ValueError:
        raise CliError(f"{flag}: malformed rational {text!r}", EXIT_PARSE) from None


def _require(value, flag: str):
    if value is None:
        raise CliError(f"{flag} is required here", EXIT_USAGE)
    return value


def _read_sequence(args):
    if args.values is not None:
        try:
            vals = [parse_rational(v) for v in args.values.split(",")]
        except ValueError as exc:
            raise CliError(str(exc), EXIT_PARSE) from None
        if args.finite_support:
            return transforms.FiniteSupportSeq(vals)
        return transforms.Prefix(vals)
    if args.input is None:
        raise CliError("give --input FILE (or -) or --values", EXIT_USAGE)
    try:
        text = sys.stdin.read() if args.input == "-" else open(args.input).read()
    except OSError as exc:
        raise CliError(f"cannot read {args.input}: {exc.strerror}", EXIT_PARSE) from None
    try:
        return formats.sequence_from_json(text)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_PARSE) from None


def _emit_json(obj) -> None:
    print(formats.dump(obj))


def _emit_sequence(seq, fmt: str) -> None:
    if fmt == "csv":
        print(",".join(format_rational(v) for v in seq.values))
    else:
        _emit_json(formats.sequence_to_dict(seq))


def cmd_kernel(args) -> int:
    params = {"lambda": _rational(args.lam, "--lambda"), "q": _rational(args.q, "--q")}
    if args.kind in ("lambda", "q"):
        param = _require(params[args.kind], f"--{args.kind}")
    else:
        param = None
    try:
        kind = kernels.KernelKind(args.kind, param)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_USAGE) from None
    if args.size is not None:
        if args.size < 1:
            raise CliError("--size must be >= 1", EXIT_USAGE)
        gram = kernels.gram_matrix(kind, args.size - 1)
        if args.format == "json":
            _emit_json([[format_rational(v) for v in row] for row in gram.entries])
        else:
            sys.stdout.write(gram.to_csv())
        return EXIT_OK
    x, y = _require(args.x, "--x"), _require(args.y, "--y")
    if x < 0 or y < 0:
        raise CliError("--x and --y must be non-negative", EXIT_USAGE)
    print(format_rational(kind(x, y)))
    return EXIT_OK


_TRANSFORMS = {
    "bft": transforms.bft,
    "bft-inv": transforms.bft_inv,
    "second": transforms.second_fwd,
    "second-inv": transforms.second_inv,
}


def cmd_transform(args) -> int:
    seq = _read_sequence(args)
    try:
        out = _TRANSFORMS[args.kind](seq)
    except transforms.NotFinitelySupported as exc:
        raise CliError(str(exc), EXIT_USAGE) from None
    _emit_sequence(out, args.format)
    return EXIT_OK


def cmd_matrix(args) -> int:
    if args.size < 1:
        raise CliError("--size must be >= 1", EXIT_USAGE)
    n = args.size - 1
    lam = _rational(args.lam, "--lambda")
    if args.kind == "A":
        mat = operators.build_A(n)
    else:
        lam = 1 if lam is None else lam
        builder = {"L": operators.build_L, "M": operators.build_M, "D": operators.build_D}[args.kind]
        mat = builder(lam, n)
    if args.format == "json":
        _emit_json(
            {
                "orientation": mat.orientation,
                "entries": [[format_rational(v) for v in row] for row in mat.entries],
            }
        )
    else:
        sys.stdout.write(mat.to_csv())
    return EXIT_OK


def cmd_coproduct(args) -> int:
    if args.m < 0 or args.n < 0:
        raise CliError("--m and --n must be non-negative", EXIT_USAGE)
    oracle = hypergroup.coproduct_oracle(args.m, args.n)
    formula = hypergroup.coproduct_formula(args.m, args.n)
    agree = oracle.coeffs == formula.coeffs
    _emit_json(formats.coproduct_to_dict(oracle, agree))
    return EXIT_OK if agree else EXIT_FAIL


def cmd_hurwitz(args) -> int:
    seq = _read_sequence(args)
    if args.degree < 0:
        raise CliError("--degree must be non-negative", EXIT_USAGE)
    values = seq.padded(args.degree + 1) if isinstance(seq, transforms.FiniteSupportSeq) else seq
    try:
        series = (hurwitz.script_h if args.script_h else hurwitz.hurwitz_series)(values, args.degree)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_USAGE) from None
    out = series.to_dict()
    if args.eval is not None:
        out["value"] = format_rational(series(_rational(args.eval, "--eval")))
    _emit_json(out)
    return EXIT_OK


def cmd_member(args) -> int:
    seq = _read_sequence(args)
    if isinstance(seq, transforms.FiniteSupportSeq):
        seq = transforms.Prefix(seq.values or [0])
    if len(seq) < 4:
        raise CliError("membership diagnostic needs at least 4 values", EXIT_USAGE)
    report = rkhs.membership_diagnostic(seq, zero_tail=args.zero_tail)
    _emit_json(formats.membership_to_dict(report))
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.max_n < 0:
        raise CliError("--max-n must be non-negative", EXIT_USAGE)
    report = verify.run_suite(args.suite, args.max_n)
    print(json.dumps(report, indent=2))
    return EXIT_OK if report["summary"]["failed"] == 0 else EXIT_FAIL


def _add_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", help="sequence JSON file, or - for stdin")
    p.add_argument("--values", help="comma-separated rationals instead of --input")
    p.add_argument(
        "--finite-support", action="store_true", help="with --values: declare an exact zero tail"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pascal-rkhs", description="Exact computations in the Pascal-kernel RKHS."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("kernel", help="kernel value or Gram matrix")
    p.add_argument("--kind", required=True, choices=kernels.KernelKind.TAGS)
    p.add_argument("--x", type=int)
    p.add_argument("--y", type=int)
    p.add_argument("--lambda", dest="lam")
    p.add_argument("--q")
    p.add_argument("--size", type=int, help="print the Gram matrix on {0..size-1}")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_kernel)

    p = sub.add_parser("transform", help="apply one of the four transforms")
    p.add_argument("--kind", required=True, choices=tuple(_TRANSFORMS))
    _add_input(p)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("matrix", help="leading block of L, A, M or D")
    p.add_argument("--kind", required=True, choices=("L", "A", "M", "D"))
    p.add_argument("--lambda", dest="lam")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("coproduct", help="expand e_m * e_n in the basis")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_coproduct)

    p = sub.add_parser("hurwitz", help="truncated Hurwitz series of a sequence")
    p.add_argument("--degree", type=int, required=True)
    _add_input(p)
    p.add_argument("--eval", help="evaluate the truncation at this rational point")
    p.add_argument("--script-h", action="store_true", help="multiply by e^-z")
    p.set_defaults(func=cmd_hurwitz)

    p = sub.add_parser("member", help="membership evidence for a value prefix")
    _add_input(p)
    p.add_argument("--zero-tail", type=int, default=2)
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("verify", help="run an identity suite")
    p.add_argument("--suite", choices=verify.SUITES, default="all")
    p.add_argument("--max-n", type=int, default=16)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"pascal-rkhs {args.command}: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
