"""Enumerate trivalent ribbon graphs and check Kontsevich's formula type by type."""
from __future__ import annotations

import argparse
import time
from fractions import Fraction

from wpvol.kdv import build_table
from wpvol.ribbon import BudgetExceeded, enumerate_trivalent, kontsevich_check


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-edges", type=int, default=9)
    args = ap.parse_args()
    table = build_table(6)
    status = 0
    print("g,n,classes,sum_inverse_aut,formula,seconds")
    for g in range(0, 3):
        for n in range(1, 6):
            if 2 - 2 * g - n >= 0 or 6 * g - 6 + 3 * n > args.max_edges:
                continue
            t0 = time.perf_counter()
            classes = enumerate_trivalent(g, n, args.max_edges)
            mass = sum(Fraction(1, a) for _, a in classes)
            try:
                rep = kontsevich_check(g, n, table.correlator, args.max_edges)
                verdict = rep.status
            except BudgetExceeded:
                verdict = "skipped"
            status |= verdict == "fail"
            print(f"{g},{n},{len(classes)},{mass},{verdict},{time.perf_counter() - t0:.2f}")
    return status


if __name__ == "__main__":
    raise SystemExit(main())
