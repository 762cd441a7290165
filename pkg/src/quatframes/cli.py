"""Command line front end.

Subcommands: gen, bounds, dual, check-frame, controlled-check,
multiplier-apply, verify.  Exit codes: 0 success, 1 verification
failures, 2 domain error (not a frame / mismatch / bad controller),
64 usage error, 65 unreadable or malformed input.
"""

from __future__ import annotations

import argparse
import sys

from .controlled import (ControllerNotInGL, NotSelfAdjoint, check_controlled,
                         verify_controlled_equivalence,
                         verify_controlled_identities)
from .frames import NotAFrame, format_frame, read_frame, write_frame
from .harness import SUITES, TrialConfig, gen_frame, run_verification
from .hilbert import DimensionMismatch, format_vector, read_vector
from .multiplier import (CardinalityMismatch, MixedSignSymbol,
                         NonPositiveWeights, multiplier_apply, read_symbol)
from .operator import Singular, read_operator
from .quaternion import ParseError, format_real

USAGE_ERROR = 64
PARSE_ERROR = 65
DOMAIN_ERROR = 2

_DOMAIN_ERRORS = (NotAFrame, DimensionMismatch, CardinalityMismatch,
                  ControllerNotInGL, NotSelfAdjoint, MixedSignSymbol,
                  NonPositiveWeights, Singular, ValueError)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(USAGE_ERROR)


def _bool_word(value: bool) -> str:
    return "true" if value else "false"


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="quatframes",
                     description="Frames on left quaternionic Hilbert spaces")
    sub = parser.add_subparsers(dest="command", required=True,
                                parser_class=_Parser)

    p = sub.add_parser("gen", help="write a random frame file")
    p.add_argument("--dim", type=int, default=2)
    p.add_argument("--count", type=int, default=6)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trial", type=int, default=0)
    p.add_argument("--out", default="-", help="output path, '-' for stdout")

    p = sub.add_parser("bounds", help="optimal frame bounds of a .qhf file")
    p.add_argument("frame")

    p = sub.add_parser("dual", help="write the canonical dual frame")
    p.add_argument("frame")
    p.add_argument("--out", required=True)

    p = sub.add_parser("check-frame", help="report frame diagnostics")
    p.add_argument("frame")

    p = sub.add_parser("controlled-check",
                       help="controlled-frame checks for a controller")
    p.add_argument("frame")
    p.add_argument("--operator", required=True)
    p.add_argument("--tol", type=float, default=1e-9)

    p = sub.add_parser("multiplier-apply", help="apply a frame multiplier")
    p.add_argument("frame", help="output family")
    p.add_argument("--second-frame", default=None,
                   help="analysis family (defaults to the first frame)")
    p.add_argument("--symbol", required=True)
    p.add_argument("--vector", required=True)

    p = sub.add_parser("verify", help="run the randomized verification suites")
    p.add_argument("--suite", choices=SUITES, default="all")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--dims", default="2,3,4,6,8",
                   help="comma-separated dimensions to rotate through")
    p.add_argument("--samples", type=int, default=64)
    p.add_argument("--report", default=None, help="also write a JSON report")
    return parser


def _cmd_gen(args) -> int:
    try:
        cfg = TrialConfig(dim=args.dim, count=args.count, trials=1,
                          master_seed=args.seed)
    except ValueError as error:
        print(str(error), file=sys.stderr)
        return USAGE_ERROR
    frame = gen_frame(cfg, args.trial)
    if args.out == "-":
        sys.stdout.write(format_frame(frame))
    else:
        write_frame(frame, args.out)
    return 0


def _cmd_bounds(args) -> int:
    frame = read_frame(args.frame)
    lower, upper = frame.bounds
    print(f"{format_real(lower)} {format_real(upper)} {_bool_word(frame.is_frame())}")
    return 0


def _cmd_dual(args) -> int:
    frame = read_frame(args.frame)
    write_frame(frame.canonical_dual(), args.out)
    return 0


def _cmd_check_frame(args) -> int:
    frame = read_frame(args.frame)
    s = frame.operator
    print(f"dimension {frame.dimension}")
    print(f"count {len(frame)}")
    print(f"lower {format_real(frame.lower_bound)}")
    print(f"upper {format_real(frame.upper_bound)}")
    print(f"is_frame {_bool_word(frame.is_frame())}")
    print(f"normalized {_bool_word(frame.is_normalized())}")
    print(f"self_adjoint_defect {format_real((s - s.adjoint()).max_abs())}")
    return 0


def _cmd_controlled_check(args) -> int:
    frame = read_frame(args.frame)
    controller = read_operator(args.operator)
    check = check_controlled(frame, controller, tol=args.tol)
    print(f"is_controlled {_bool_word(check.is_controlled)}")
    print(f"lower {format_real(check.lower)}")
    print(f"upper {format_real(check.upper)}")
    print(f"sum_is_real {_bool_word(check.sum_is_real)}")
    print(f"max_imag {format_real(check.max_imag)}")
    ident = verify_controlled_identities(frame, controller)
    print(f"base_is_frame {_bool_word(ident.is_frame)}")
    print(f"operator_identity_residual {format_real(ident.operator_identity_residual)}")
    print(f"sum_identity_residual {format_real(ident.sum_identity_residual)}")
    print(f"recovery_residual {format_real(ident.recovery_residual)}")
    if controller.is_self_adjoint(1e-10 * (1.0 + controller.max_abs())):
        eq = verify_controlled_equivalence(frame, controller, tol=args.tol)
        print(f"forward {_bool_word(eq.forward)}")
        print(f"backward {_bool_word(eq.backward)}")
        print(f"commutation_residual {format_real(eq.commutation_residual)}")
    return 0


def _cmd_multiplier_apply(args) -> int:
    phi = read_frame(args.frame)
    psi = read_frame(args.second_frame) if args.second_frame else phi
    symbol = read_symbol(args.symbol)
    vector = read_vector(args.vector)
    image = multiplier_apply(symbol, phi, psi, vector)
    print(format_vector(image))
    return 0


def _cmd_verify(args) -> int:
    try:
        dims = tuple(int(d) for d in args.dims.split(",") if d.strip())
    except ValueError:
        print(f"invalid --dims value {args.dims!r}", file=sys.stderr)
        return USAGE_ERROR
    if not dims or any(not 1 <= d <= 8 for d in dims):
        print("--dims entries must lie in [1, 8]", file=sys.stderr)
        return USAGE_ERROR
    report = run_verification(args.suite, trials=args.trials,
                              master_seed=args.seed, dims=dims,
                              tol=args.tol, samples=args.samples)
    for line in report.to_lines():
        print(line)
    if args.report:
        report.write_json(args.report)
    if report.ok():
        print(f"OK {len(report.records)} statements, 0 failures", file=sys.stderr)
        return 0
    print(f"FAIL {report.total_failures} failures across "
          f"{len(report.records)} statements", file=sys.stderr)
    return 1


_COMMANDS = {
    "gen": _cmd_gen,
    "bounds": _cmd_bounds,
    "dual": _cmd_dual,
    "check-frame": _cmd_check_frame,
    "controlled-check": _cmd_controlled_check,
    "multiplier-apply": _cmd_multiplier_apply,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_request:
        return int(exit_request.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except ParseError as error:
        print(str(error), file=sys.stderr)
        return PARSE_ERROR
    except OSError as error:
        print(str(error), file=sys.stderr)
        return PARSE_ERROR
    except _DOMAIN_ERRORS as error:
        print(str(error), file=sys.stderr)
        return DOMAIN_ERROR


if __name__ == "__main__":
    sys.exit(main())
