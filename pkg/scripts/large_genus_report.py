"""Ratio diagnostics for growing genus, written as CSV."""
from __future__ import annotations

import argparse
import math
import sys

from wpvol.asymptotics import (bracket_ratio, ratio_boundary, ratio_genus, report_csv,
                               zograf_conjecture_report)
from wpvol.recursion import VolumeCache


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-genus", type=int, default=6)
    ap.add_argument("--n", type=int, default=1, help="number of boundaries for the genus ratio")
    ap.add_argument("--output", help="CSV path (default: stdout)")
    args = ap.parse_args()
    cache = VolumeCache()
    rows = []
    for g in range(2, args.max_genus + 1):
        rows.append((g, 0, ratio_boundary(g, 0, cache), 4 * math.pi ** 2))
        rows.append((g, args.n, ratio_genus(g, args.n, cache), 1.0))
        print(f"g={g}: boundary {rows[-2][2]:.4f}  genus {rows[-1][2]:.4f}  "
              f"bracket[tau_1] {bracket_ratio(g, (1,), cache):.4f}  "
              f"conjecture {zograf_conjecture_report(g, 1, cache):.4f}", file=sys.stderr)
    text = report_csv(rows)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
