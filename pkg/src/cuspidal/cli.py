"""Command-line entry point.

Every command prints one JSON document on standard output.  Exit codes:
0 success, 1 a checked property failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import sys

from . import io
from .bivariate import conic_report
from .circuits import classify
from .configuration import GaleDual, PointConfiguration, gale_dual
from .core import cuspidal_polynomial, hessian_form
from .errors import CuspidalError, InputError, InternalCheckError
from .suites import SUITES, run_suite

EXIT_OK, EXIT_FAILURE, EXIT_INPUT = 0, 1, 2


def _config(args) -> PointConfiguration:
    where = "<stdin>" if args.input in (None, "-") else args.input
    return io.parse_config(io.read_text(args.input), where)


def _gale(args, A: PointConfiguration) -> GaleDual:
    if not args.gale:
        return gale_dual(A)
    B = io.parse_gale(io.read_text(args.gale), args.gale)
    if not B.is_dual_of(A):
        raise InputError(f"{args.gale}: not a Gale dual of the configuration "
                         f"(need an {A.N}x{A.m} matrix of rank {A.m} with A.B = 0)")
    return B


def cmd_validate(args, out):
    A = _config(args)
    doc = io.config_to_dict(A)
    doc.update(n=A.n, N=A.N, m=A.m)
    out(doc)
    return EXIT_OK


def cmd_gale(args, out):
    out(io.gale_to_dict(gale_dual(_config(args))))
    return EXIT_OK


def cmd_form(args, out):
    A = _config(args)
    if A.m == 0:
        out({"codimension": 0, "message": "codimension zero: no discriminant parameters"})
        return EXIT_OK
    out(cuspidal_polynomial(A, _gale(args, A)).to_dict())
    return EXIT_OK


def cmd_classify(args, out):
    out(classify(_config(args)).to_dict())
    return EXIT_OK


def cmd_conic(args, out):
    report = conic_report(_config(args))
    out(report.to_dict())
    return EXIT_OK if report.agree else EXIT_FAILURE


def cmd_hessian_check(args, out):
    A = _config(args)
    B = _gale(args, A)
    P, H = cuspidal_polynomial(A, B), hessian_form(A, B)
    out({"equal": P == H, "cuspidal_form": P.to_dict(), "hessian_form": H.to_dict()})
    return EXIT_OK if P == H else EXIT_FAILURE


def cmd_verify(args, out):
    report = run_suite(args.suite, args.seed, args.count, args.workers)
    out(report.to_dict())
    return EXIT_OK if report.ok else EXIT_FAILURE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cuspidal",
        description="Cuspidal forms, dual defect and conic classification of point configurations.")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)

    def command(name, func, help, gale=False):
        p = sub.add_parser(name, help=help)
        p.add_argument("input", nargs="?", default=None,
                       help="configuration JSON file (default: standard input)")
        if gale:
            p.add_argument("--gale", metavar="FILE", help="Gale dual JSON file (default: canonical dual)")
        p.set_defaults(func=func)
        return p

    command("validate", cmd_validate, "normalize a configuration and echo it")
    command("gale", cmd_gale, "print the canonical Gale dual")
    command("form", cmd_form, "print the cuspidal form", gale=True)
    command("classify", cmd_classify, "dual defect and iterated circuit witness")
    command("conic", cmd_conic, "signature and conic class of a planar configuration")
    command("hessian-check", cmd_hessian_check, "compare the Hessian determinant with the cuspidal form",
            gale=True)

    v = sub.add_parser("verify", help="run a seeded property suite")
    v.add_argument("--suite", required=True, choices=list(SUITES))
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--count", type=int, default=100)
    v.add_argument("--workers", type=int, default=None,
                   help="worker processes (default: CUSPIDAL_THREADS or 1)")
    v.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)

    def out(doc):
        print(io.dumps(doc))

    try:
        return args.func(args, out)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InternalCheckError as exc:
        print(f"check failed: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    except CuspidalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
