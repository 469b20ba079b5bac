#!/usr/bin/env python3
"""Run the full exact verification sweep and write one CSV record per point.

Usage:
    python scripts/run_sweep.py [--n-max 200] [--out sweep.csv]

Exercises every catalogued identity over n <= n-max and, for the
parameterized ones, every exact parameter with 2m in [-1, 40] admitted by the
identity's domain.  Exits nonzero if any point fails.
"""

import argparse
import csv
import sys
import time

from hbe.catalog import registry, verify_range


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=200)
    ap.add_argument("--out", default="sweep.csv")
    args = ap.parse_args()

    t0 = time.time()
    n_bad = 0
    n_pts = 0
    with open(args.out, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=(
            "identity", "m", "n", "equal", "lhs", "rhs",
            "terms", "t_lhs_ns", "t_rhs_ns"))
        writer.writeheader()
        for desc in registry():
            t_id = time.time()
            reports = verify_range(desc.id, args.n_max)
            bad = sum(1 for r in reports if not r.equal)
            n_bad += bad
            n_pts += len(reports)
            for r in reports:
                writer.writerow(r.to_record())
            status = "ok" if bad == 0 else f"{bad} MISMATCH"
            print(f"{desc.id:14s} {len(reports):6d} points  "
                  f"{time.time() - t_id:6.2f}s  {status}")
    print(f"total: {n_pts} points in {time.time() - t0:.1f}s -> {args.out}")
    return 1 if n_bad else 0


if __name__ == "__main__":
    sys.exit(main())
