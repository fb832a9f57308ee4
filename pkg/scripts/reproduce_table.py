"""Recompute every volume in the published table and diff it against the stored rows."""
from __future__ import annotations

import argparse
import time

from wpvol.intersection import closed_volume
from wpvol.polyring import format_pi_coeff
from wpvol.recursion import VolumeCache, compute_volume
from wpvol.reference import CLOSED_VOLUMES, VOLUME_TABLE, table_entry
from wpvol.reports import first_difference


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--quiet", action="store_true", help="only print the summary")
    args = ap.parse_args()
    cache = VolumeCache()
    t0 = time.perf_counter()
    bad = 0
    for g, n in sorted(VOLUME_TABLE):
        V = compute_volume(g, n, cache)
        ok = V == table_entry(g, n)
        bad += not ok
        if not args.quiet:
            print(f"g={g} n={n} {'ok' if ok else 'MISMATCH ' + first_difference(V, table_entry(g, n))}")
            print(f"    {V.to_human()}")
    for g, expected in sorted(CLOSED_VOLUMES.items()):
        got = closed_volume(g, cache).at_zero()
        bad += got != expected
        if not args.quiet:
            print(f"g={g} n=0 {'ok' if got == expected else 'MISMATCH'}  {format_pi_coeff(*got)}")
    rows = len(VOLUME_TABLE) + len(CLOSED_VOLUMES)
    print(f"{rows - bad}/{rows} rows match in {time.perf_counter() - t0:.2f}s")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
