#!/usr/bin/env python3
"""Run the full randomized verification across a sweep of instance shapes
and print one table per suite, plus wall-clock timings.

Usage: python scripts/run_verification.py [--trials N] [--seed S] [--tol T]
"""

import argparse
import sys
import time

from quatframes import run_verification


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--trials", type=int, default=200)
    parser.add_argument("--seed", type=int, default=42)
    parser.add_argument("--tol", type=float, default=1e-9)
    parser.add_argument("--dims", default="2,3,4,6,8")
    args = parser.parse_args()

    dims = tuple(int(d) for d in args.dims.split(","))
    exit_code = 0
    for suite in ("axioms", "frames", "controlled", "multipliers"):
        started = time.monotonic()
        report = run_verification(suite, trials=args.trials,
                                  master_seed=args.seed, dims=dims,
                                  tol=args.tol)
        elapsed = time.monotonic() - started
        print(f"== {suite} ({args.trials} trials, {elapsed:.2f}s) ==")
        width = max(len(r.statement) for r in report.records)
        for record in report.records:
            marker = "ok  " if record.failures == 0 else "FAIL"
            print(f"  {marker} {record.statement:<{width}}  "
                  f"worst {record.max_residual:.3e}  "
                  f"failures {record.failures}/{record.trials}")
        if not report.ok():
            exit_code = 1
    return exit_code


if __name__ == "__main__":
    sys.exit(main())
