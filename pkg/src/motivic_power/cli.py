"""Command-line front end.

Commands compute with exact truncated series and print either a text
table (one ``t^k: ...`` line per coefficient) or the JSON forms shared
with the library.  Exit status: 0 on success, 1 on computation or check
failure, 2 on bad usage.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from .axioms import run_axiom_suite
from .checks import run_oracle_checks
from .expressions import ParseError, parse_polynomial, parse_series
from .hilbert import (
    LocalHilbertData,
    VarietyClass,
    euler_specialization,
    global_series,
    hodge_deligne_series,
    kapranov_zeta,
    local_series,
)
from .localdata import MOTIVIC_RING
from .power import EulerProduct, assemble, exp_map, factor, log_map, pow_series
from .rings import Polynomial, RingDescriptor
from .series import Series

HODGE_RING = RingDescriptor(("u", "v"))

MAX_ORDER = 200


def _order(value: str) -> int:
    n = int(value)
    if not 0 <= n <= MAX_ORDER:
        raise argparse.ArgumentTypeError(
            "truncation order must be between 0 and %d" % MAX_ORDER
        )
    return n


def _add_common(parser: argparse.ArgumentParser, default_truncate: int = 10):
    parser.add_argument("--vars", nargs="*", default=None, metavar="NAME",
                        help="ring variables (default: none, plain integers)")
    parser.add_argument("--laurent", action="store_true",
                        help="allow negative exponents on the ring variables")
    parser.add_argument("--truncate", type=_order, default=default_truncate,
                        metavar="N", help="truncation order (0..%d)" % MAX_ORDER)
    parser.add_argument("--format", choices=("text", "json"), default="text")


def _ring(args, default: Optional[RingDescriptor] = None) -> RingDescriptor:
    if args.vars is not None:
        return RingDescriptor(tuple(args.vars), args.laurent)
    if default is not None:
        return default
    return RingDescriptor((), args.laurent)


def _print_series(S: Series, fmt: str, out):
    if fmt == "json":
        json.dump(S.to_json(), out)
        out.write("\n")
        return
    for k, c in enumerate(S.coefficients):
        out.write("t^%d: %s\n" % (k, c))


def _print_exponents(exponents, order: int, fmt: str, out):
    if fmt == "json":
        payload = EulerProduct(exponents[0].ring, order, list(exponents)).to_json() \
            if exponents else {"order": order, "exponents": []}
        json.dump(payload, out)
        out.write("\n")
        return
    for i, b in enumerate(exponents, start=1):
        out.write("b_%d: %s\n" % (i, b))


def _cmd_zeta(args, out) -> int:
    ring = _ring(args)
    cls = parse_polynomial(args.cls, ring)
    _print_series(kapranov_zeta(cls, args.truncate), args.format, out)
    return 0


def _cmd_pow(args, out) -> int:
    ring = _ring(args)
    A = parse_series(args.series, ring, args.truncate)
    m = parse_polynomial(args.exponent, ring)
    _print_series(pow_series(A, m), args.format, out)
    return 0


def _cmd_factor(args, out) -> int:
    ring = _ring(args)
    A = parse_series(args.series, ring, args.truncate)
    _print_exponents(factor(A).exponents, args.truncate, args.format, out)
    return 0


def _cmd_assemble(args, out) -> int:
    ring = _ring(args)
    exponents = [parse_polynomial(src, ring) for src in args.exponents]
    product = EulerProduct(ring, args.truncate,
                           (exponents + [Polynomial.zero(ring)] * args.truncate
                            )[: args.truncate])
    _print_series(assemble(product), args.format, out)
    return 0


def _cmd_exp(args, out) -> int:
    ring = _ring(args)
    exponents = [parse_polynomial(src, ring) for src in args.exponents]
    _print_series(exp_map(exponents, order=args.truncate, ring=ring),
                  args.format, out)
    return 0


def _cmd_log(args, out) -> int:
    ring = _ring(args)
    A = parse_series(args.series, ring, args.truncate)
    _print_exponents(log_map(A), args.truncate, args.format, out)
    return 0


def _load_local_data(path: str) -> LocalHilbertData:
    with open(path, "r", encoding="utf-8") as fh:
        return LocalHilbertData.from_json(json.load(fh))


def _cmd_hilbert(args, out) -> int:
    user_data = _load_local_data(args.local_data) if args.local_data else None
    if args.specialize == "hodge":
        ring = _ring(args, default=HODGE_RING)
        cls = VarietyClass(parse_polynomial(args.cls, ring), args.dim)
        result = hodge_deligne_series(cls, args.truncate, user_data)
    else:
        ring = _ring(args, default=MOTIVIC_RING)
        cls = VarietyClass(parse_polynomial(args.cls, ring), args.dim)
        local = local_series(args.dim, args.truncate, user_data)
        result = global_series(cls, local, args.truncate)
        if args.specialize == "euler":
            result = euler_specialization(result)
    _print_series(result, args.format, out)
    return 0


def _cmd_oracle_check(args, out) -> int:
    failures = run_oracle_checks(args.max_points, args.max_weight,
                                 args.max_size, args.truncate)
    if args.format == "json":
        json.dump({"status": "fail" if failures else "pass",
                   "failures": failures}, out)
        out.write("\n")
    else:
        out.write("equivalence sweep: points<=%d weights<=%d sizes<=%d "
                  "order=%d\n" % (args.max_points, args.max_weight,
                                  args.max_size, args.truncate))
        for failure in failures:
            out.write("FAIL %s\n" % failure)
        out.write("oracle-check: %s\n" % ("FAIL" if failures else "PASS"))
    return 1 if failures else 0


def _cmd_axioms(args, out) -> int:
    if args.seed is not None:
        seed = args.seed
    else:
        seed = int(os.environ.get("MOTIVIC_POWER_SEED", "0"))
    ring = _ring(args)
    report = run_axiom_suite(ring, args.truncate, args.samples, seed)
    if args.format == "json":
        json.dump({"status": "pass" if report.ok else "fail",
                   "seed": seed, "samples": args.samples,
                   "order": args.truncate,
                   "failures": report.failures}, out)
        out.write("\n")
    else:
        for line in report.summary_lines():
            out.write(line + "\n")
        for failure in report.failures:
            out.write("FAIL %s\n" % failure)
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="motivic-power",
        description="Exact power structures over polynomial rings and "
                    "generating series of Hilbert schemes of points.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("zeta", help="zeta series of a class (symmetric powers)")
    p.add_argument("--class", dest="cls", required=True, metavar="EXPR")
    _add_common(p)
    p.set_defaults(handler=_cmd_zeta)

    p = sub.add_parser("pow", help="raise a unital series to a class power")
    p.add_argument("--series", required=True, metavar="EXPR")
    p.add_argument("--exponent", required=True, metavar="EXPR")
    _add_common(p)
    p.set_defaults(handler=_cmd_pow)

    p = sub.add_parser("factor", help="Euler-product exponents of a series")
    p.add_argument("--series", required=True, metavar="EXPR")
    _add_common(p)
    p.set_defaults(handler=_cmd_factor)

    p = sub.add_parser("assemble", help="multiply out an Euler product")
    p.add_argument("--exponents", nargs="+", required=True, metavar="EXPR",
                   help="exponents b_1 b_2 ... (missing ones are zero)")
    _add_common(p)
    p.set_defaults(handler=_cmd_assemble)

    p = sub.add_parser("exp", help="Exp of P_1 t + P_2 t^2 + ...")
    p.add_argument("--exponents", nargs="+", required=True, metavar="EXPR",
                   help="coefficients P_1 P_2 ... (missing ones are zero)")
    _add_common(p)
    p.set_defaults(handler=_cmd_exp)

    p = sub.add_parser("log", help="Log of a unital series")
    p.add_argument("--series", required=True, metavar="EXPR")
    _add_common(p)
    p.set_defaults(handler=_cmd_log)

    p = sub.add_parser("hilbert",
                       help="generating series of Hilbert schemes of points")
    p.add_argument("--dim", type=int, required=True, metavar="D")
    p.add_argument("--class", dest="cls", required=True, metavar="EXPR",
                   help="class of the variety (e_X polynomial for hodge)")
    p.add_argument("--specialize", choices=("euler", "hodge"), default=None)
    p.add_argument("--local-data", metavar="FILE", default=None,
                   help="JSON file with the punctual series (needed for dim >= 3)")
    _add_common(p)
    p.set_defaults(handler=_cmd_hilbert)

    p = sub.add_parser("oracle-check",
                       help="exhaustive equivalence sweeps of the counting oracles")
    p.add_argument("--max-points", type=int, default=4, metavar="M")
    p.add_argument("--max-weight", type=int, default=4, metavar="W")
    p.add_argument("--max-size", type=int, default=3, metavar="A")
    _add_common(p, default_truncate=6)
    p.set_defaults(handler=_cmd_oracle_check)

    p = sub.add_parser("axioms",
                       help="randomized check of the seven power-structure laws")
    p.add_argument("--seed", type=int, default=None,
                   help="defaults to MOTIVIC_POWER_SEED, then 0")
    p.add_argument("--samples", type=int, default=20)
    _add_common(p, default_truncate=8)
    p.set_defaults(handler=_cmd_axioms)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args, sys.stdout)
    except (ParseError, ValueError, ArithmeticError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
