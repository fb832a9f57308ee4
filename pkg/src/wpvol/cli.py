"""Command-line entry point: compute, table, verify, intersections, census."""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional, Sequence

from .checks import SUITES, VerifyConfig, run_suite
from .intersection import closed_volume, psi_kappa
from .polyring import PolynomialError, VolumePolynomial, format_pi_coeff
from .recursion import VolumeCache, compute_volume
from .reports import FAIL, summarize
from .ribbon import BudgetExceeded, census_csv

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3
CACHE_ENV = "WPVOL_CACHE"
CACHE_VERSION = 1


class UsageError(Exception):
    pass


@dataclass
class CacheFile:
    """Serialized volumes; every record is re-checked on load."""
    version: int = CACHE_VERSION
    volumes: List[VolumePolynomial] = field(default_factory=list)

    def dumps(self) -> str:
        records = sorted((V for V in self.volumes if V.n > 0), key=lambda V: (V.g, V.n))
        data = {"version": self.version, "volumes": [V.to_dict() for V in records]}
        return json.dumps(data, sort_keys=True, separators=(",", ":")) + "\n"

    @classmethod
    def loads(cls, text: str) -> "CacheFile":
        data = json.loads(text)
        if data.get("version") != CACHE_VERSION:
            raise ValueError(f"unsupported cache version {data.get('version')!r}")
        vols = [VolumePolynomial.from_dict(rec) for rec in data["volumes"]]
        for V in vols:
            V.check_volume_invariants(V.g, V.n)
        return cls(CACHE_VERSION, vols)

    @classmethod
    def from_cache(cls, cache: VolumeCache) -> "CacheFile":
        return cls(CACHE_VERSION, [V for _, V in sorted(cache.items())])

    def fill(self, cache: VolumeCache) -> None:
        for V in self.volumes:
            if (V.g, V.n) not in cache:
                cache.insert(V.g, V.n, V)


def _cache_path(args) -> Optional[Path]:
    path = getattr(args, "cache", None) or os.environ.get(CACHE_ENV)
    return Path(path) if path else None


def _load_cache(args) -> VolumeCache:
    cache = VolumeCache()
    path = _cache_path(args)
    if path is not None and path.exists():
        CacheFile.loads(path.read_text()).fill(cache)
    return cache


def _save_cache(args, cache: VolumeCache) -> None:
    path = _cache_path(args)
    if path is not None:
        path.write_text(CacheFile.from_cache(cache).dumps())


def _csv_rows(V: VolumePolynomial) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["g", "n", "p"] + [f"x{k}" for k in range(1, V.n + 1)] + ["num", "den"])
    for m, c in V.items():
        w.writerow([V.g, V.n] + list(m) + [c.numerator, c.denominator])
    return buf.getvalue()


def render(V: VolumePolynomial, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(V.to_dict(), sort_keys=True)
    if fmt == "csv":
        return _csv_rows(V).rstrip("\n")
    if V.n == 0:
        c, d = V.at_zero()
        return format_pi_coeff(c, d)
    return V.to_human()


def _volume(g: int, n: int, cache: VolumeCache) -> VolumePolynomial:
    if n == 0:
        if g < 2:
            raise UsageError(f"V_{{{g},0}} is undefined: closed surfaces need g >= 2")
        return closed_volume(g, cache)
    if g < 0 or n < 0 or 2 * g - 2 + n <= 0:
        raise UsageError(f"(g, n) = ({g}, {n}) is unstable: need 2g - 2 + n > 0")
    return compute_volume(g, n, cache)


def cmd_compute(args, out) -> int:
    cache = _load_cache(args)
    V = _volume(args.genus, args.boundaries, cache)
    print(render(V, args.format), file=out)
    _save_cache(args, cache)
    return EXIT_OK


def _table_pairs(max_level: int) -> List[tuple]:
    pairs = []
    for g in range(max_level // 3 + 2):
        for n in range(0, max_level - 3 * g + 4):
            if 3 * g - 3 + n > max_level:
                continue
            if (n == 0 and g >= 2) or (n > 0 and 2 * g - 2 + n > 0):
                pairs.append((g, n))
    return sorted(pairs)


def cmd_table(args, out) -> int:
    cache = _load_cache(args)
    pairs = _table_pairs(args.max_level)
    if args.format == "json":
        rows = [{"g": g, "n": n, "volume": _volume(g, n, cache).to_dict()} for g, n in pairs]
        print(json.dumps(rows, sort_keys=True), file=out)
    elif args.format == "csv":
        first = True
        for g, n in pairs:
            text = _csv_rows(_volume(g, n, cache))
            print(text if first else text.split("\n", 1)[1], end="", file=out)
            first = False
    else:
        for g, n in pairs:
            print(f"g={g} n={n}: {render(_volume(g, n, cache), 'human')}", file=out)
    _save_cache(args, cache)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    if args.suite != "all" and args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from all, {', '.join(SUITES)}")
    cache = _load_cache(args)
    reports = run_suite(args.suite, cache, VerifyConfig(max_level=args.max_level))
    if args.format == "json":
        print(json.dumps({"suite": args.suite, "summary": summarize(reports),
                          "checks": [r.to_dict() for r in reports]}, sort_keys=True), file=out)
    else:
        for r in reports:
            print(r.line(), file=out)
        counts = summarize(reports)
        print(f"{args.suite}: " + ", ".join(f"{v} {k}" for k, v in counts.items()), file=out)
    _save_cache(args, cache)
    return EXIT_FAIL if any(r.status == FAIL for r in reports) else EXIT_OK


def _parse_psi(text: str) -> tuple:
    try:
        vals = tuple(int(v) for v in text.split(",") if v.strip() != "")
    except ValueError:
        raise UsageError(f"--psi expects comma-separated integers, got {text!r}")
    if not vals or any(v < 0 for v in vals):
        raise UsageError("--psi needs at least one non-negative exponent")
    return vals


def cmd_intersections(args, out) -> int:
    cache = _load_cache(args)
    alpha = _parse_psi(args.psi)
    g, n = args.genus, len(alpha)
    if 2 * g - 2 + n <= 0:
        raise UsageError(f"(g, n) = ({g}, {n}) is unstable")
    m = args.kappa if args.kappa is not None else 3 * g - 3 + n - sum(alpha)
    if m < 0 or sum(alpha) + m != 3 * g - 3 + n:
        raise UsageError(f"degrees must sum to dim = {3 * g - 3 + n}; got |psi| = {sum(alpha)}, kappa = {m}")
    value = psi_kappa(g, alpha, m, cache)
    if args.format == "json":
        print(json.dumps({"g": g, "psi": list(alpha), "kappa": m, "value": str(value)}, sort_keys=True), file=out)
    else:
        print(str(value), file=out)
    _save_cache(args, cache)
    return EXIT_OK


def cmd_census(args, out) -> int:
    print(census_csv(args.genus, args.boundaries, args.max_edges), end="", file=out)
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="wpvol", description="Exact Weil-Petersson volumes and intersection numbers.")
    parser.add_argument("--cache", help=f"JSON cache file (default: ${CACHE_ENV})")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    fmt = dict(choices=["human", "json", "csv"], default="human")

    p = sub.add_parser("compute", help="print V_{g,n}")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--boundaries", type=int, required=True)
    p.add_argument("--format", **fmt)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("table", help="all volumes with 3g-3+n <= max level")
    p.add_argument("--max-level", type=int, default=6)
    p.add_argument("--format", **fmt)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", default="all")
    p.add_argument("--max-level", type=int, default=6)
    p.add_argument("--format", choices=["human", "json"], default="human")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("intersections", help="int psi^alpha kappa_1^m")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--psi", required=True, help="comma-separated psi exponents, one per marked point")
    p.add_argument("--kappa", type=int, default=None)
    p.add_argument("--format", choices=["human", "json"], default="human")
    p.set_defaults(func=cmd_intersections)

    p = sub.add_parser("census", help="CSV of trivalent ribbon graphs of type (g, n)")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--boundaries", type=int, required=True)
    p.add_argument("--max-edges", type=int, default=12)
    p.set_defaults(func=cmd_census)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except UsageError as exc:
        print(f"usage error: {exc}", file=err)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=err)
        return EXIT_BUDGET
    except (PolynomialError, ValueError) as exc:
        print(f"usage error: {exc}", file=err)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
