#!/usr/bin/env python3
"""Write a small set of demo input files for the command line tool.

Creates, inside the target directory (default ./demo):
  mercedes.qhf   three vectors in H^2 with optimal bounds (1, 2)
  random.qhf     a seeded random frame in H^3
  identity.op    the identity controller
  poly.op        a positive polynomial in the mercedes frame operator
  weights.sym    a positive symbol of matching length
  e1.vec         the first basis vector of H^2

Try afterwards:
  quatframes bounds demo/mercedes.qhf
  quatframes dual demo/mercedes.qhf --out demo/mercedes_dual.qhf
  quatframes controlled-check demo/mercedes.qhf --operator demo/poly.op
  quatframes multiplier-apply demo/mercedes.qhf --symbol demo/weights.sym \
      --vector demo/e1.vec
"""

import argparse
import math
import pathlib

from quatframes import (Frame, QOperator, QVector, TrialConfig,
                        commuting_positive, format_vector, gen_frame,
                        write_frame, write_operator)


def main():
    parser = argparse.ArgumentParser(description="write demo input files")
    parser.add_argument("target", nargs="?", default="demo")
    args = parser.parse_args()
    target = pathlib.Path(args.target)
    target.mkdir(parents=True, exist_ok=True)

    s = 1.0 / math.sqrt(2.0)
    mercedes = Frame([
        QVector.basis(2, 0),
        QVector.basis(2, 1),
        QVector.from_reals([s, 0, 0, 0, s, 0, 0, 0]),
    ])
    write_frame(mercedes, target / "mercedes.qhf")

    cfg = TrialConfig(dim=3, count=9, trials=1, master_seed=7)
    write_frame(gen_frame(cfg, 0), target / "random.qhf")

    write_operator(QOperator.identity(2), target / "identity.op")
    write_operator(commuting_positive(mercedes, (0.5, 1.0, 0.25)),
                   target / "poly.op")

    (target / "weights.sym").write_text("1\n1\n2\n")
    (target / "e1.vec").write_text(format_vector(QVector.basis(2, 0)) + "\n")
    print(f"wrote demo files to {target}/")


if __name__ == "__main__":
    main()
