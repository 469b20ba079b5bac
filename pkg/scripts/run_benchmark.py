#!/usr/bin/env python3
"""Time closed forms against direct summation and the recursions.

Usage:
    python scripts/run_benchmark.py [--n-max 5000] [--out bench.csv]

Covers the parameter-free catalogued identities on a geometric n grid up to
n-max (the grid always contains n-max itself) plus the power sums U_2 and V_2.
The headline number is the closed-form speedup for the plain inverse
central-binomial sum at large n, where direct summation drags thousands of
big-rational reductions.
"""

import argparse
import io
import sys

from hbe import cli


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=5000)
    ap.add_argument("--out", default="bench.csv")
    args = ap.parse_args()

    parser = cli.build_parser()
    chunks = []
    for argv in (
        ["bench", "--identity", "all", "--n-max", str(args.n_max), "--format", "csv"],
        ["bench", "--sum", "U", "--d", "2", "--n-max", "1024", "--format", "csv"],
        ["bench", "--sum", "V", "--d", "2", "--n-max", "1024", "--format", "csv"],
    ):
        buf = io.StringIO()
        code = cli.run(cli.config_from_args(parser.parse_args(argv)), out=buf)
        if code != 0:
            return code
        text = buf.getvalue()
        chunks.append(text if not chunks else text.split("\n", 1)[1])

    with open(args.out, "w", newline="") as fh:
        fh.write("".join(chunks))
    print(f"wrote {args.out}")

    for line in chunks[0].splitlines():
        if line.startswith("I-cb0") and line.split(",")[2] == str(args.n_max):
            cols = line.split(",")
            print(f"I-cb0 at n={args.n_max}: direct {int(cols[3])/1e6:.1f} ms, "
                  f"closed {int(cols[4])/1e6:.3f} ms, speedup {cols[6]}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
