"""Command line driver: ``oddcat verify <suite> [options]``."""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .cache import CODE_VERSION, DiskCache, resolve_dir
from .report import to_json, to_markdown
from .suites import SUITES, Config, run


def _positive(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="oddcat", description="Exact verification suites for odd nilHecke computations.")
    p.add_argument("--version", action="version", version=f"oddcat {CODE_VERSION}")
    sub = p.add_subparsers(dest="command", required=True)
    v = sub.add_parser("verify", help="run a verification suite and emit a report")
    v.add_argument("suite", choices=SUITES + ("all",))
    v.add_argument("--n", type=_positive, help="single size to check (default: the suite's range)")
    v.add_argument("--k", type=_positive, help="restrict to one k (or m) where the suite ranges over it")
    v.add_argument("--degree-bound", type=_positive, dest="degree_bound", help="degree bound D (default 2n^2+8 or 16)")
    v.add_argument("--format", choices=("json", "markdown"), default="json")
    v.add_argument("--cache-dir", help="cache directory (default $ODDCAT_CACHE or ~/.cache/oddcat)")
    v.add_argument("--no-cache", action="store_true", help="neither read nor write the cache")
    v.add_argument("--specialize", choices=("d0", "undeformed"), help="specialize A_n in the complex suite")
    v.add_argument("--samples", type=_positive, default=100, help="random elements per n in the mod2 suite")
    v.add_argument("--no-timing", action="store_true", help="omit wall times from JSON")
    v.add_argument("-o", "--output", help="write the report here instead of stdout")
    v.add_argument("-v", "--verbose", action="store_true")
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    cache = None if args.no_cache else DiskCache(resolve_dir(args.cache_dir))
    cfg = Config(args.n, args.k, args.degree_bound, args.specialize, cache, args.samples)
    records = run(args.suite, cfg)
    if args.format == "json":
        text = to_json(records, args.suite, CODE_VERSION, timing=not args.no_timing)
    else:
        text = to_markdown(records, args.suite, CODE_VERSION)
    if args.output:
        try:
            Path(args.output).write_text(text)
        except OSError as exc:
            print(f"oddcat: cannot write report to {args.output}: {exc}", file=sys.stderr)
            return 2
    else:
        sys.stdout.write(text)
    return 1 if any(r.failed for r in records) else 0


if __name__ == "__main__":
    sys.exit(main())
