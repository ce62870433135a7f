"""Command line driver: run verification suites, print one line per
check, optionally write a JSON report.

Exit codes: 0 all checks pass, 1 at least one check fails, 2 usage or
configuration error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from gmpy2 import mpq

from spinalg import __version__
from spinalg.graded import WindowTooSmall
from spinalg.scalars import parse_rational
from spinalg.suites import SUITE_ORDER, SUITES

# degree window defaults keep the largest blocks at desk scale as the
# number of pairs grows
DEFAULT_DEGREE = {1: 4, 2: 4, 3: 4, 4: 3, 5: 2}

DEFAULT_K = ("1/2", "3/2", "5/2")


@dataclass
class RunConfig:
    suites: tuple
    pairs: int = 3
    max_degree: int = 4
    window: int = 4
    k: tuple = field(default_factory=lambda: tuple(mpq(v) for v in DEFAULT_K))
    jobs: int = 1
    report_path: str | None = None
    quiet: bool = False
    corrupt: bool = False


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="verify",
        description="Exact verification of the Bannai-Ito / Racah operator algebras.",
    )
    p.add_argument(
        "suites",
        nargs="*",
        default=["all"],
        metavar="suite",
        help=f"suites to run: {', '.join(SUITE_ORDER)}, or all (default)",
    )
    p.add_argument("--pairs", type=int, default=None, help="number of coordinate pairs n")
    p.add_argument(
        "--max-degree", type=int, default=None, help="largest polynomial degree to verify"
    )
    p.add_argument("--window", type=int, default=4, help="Laurent exponent bound W")
    p.add_argument(
        "--k",
        default=",".join(DEFAULT_K),
        help="comma-separated rational angular momenta for the reduced model",
    )
    p.add_argument("--jobs", type=int, default=None, help="worker threads (default: all cores)")
    p.add_argument("--report", dest="report_path", default=None, help="write JSON report here")
    p.add_argument("--quiet", action="store_true", help="suppress per-check output")
    p.add_argument("--inject-sign-error", action="store_true", help=argparse.SUPPRESS)
    return p


def parse_config(argv) -> RunConfig:
    parser = _build_parser()
    args = parser.parse_args(argv)

    names = list(dict.fromkeys(args.suites))
    if "all" in names:
        names = list(SUITE_ORDER)
    unknown = [s for s in names if s not in SUITES]
    if unknown:
        parser.error(f"unknown suite(s): {', '.join(unknown)}")

    try:
        k = tuple(parse_rational(part) for part in args.k.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        parser.error(f"bad --k value: {exc}")

    pairs = args.pairs if args.pairs is not None else 3
    if pairs < 1:
        parser.error("--pairs must be at least 1")
    max_degree = (
        args.max_degree if args.max_degree is not None else DEFAULT_DEGREE.get(pairs, 2)
    )
    if max_degree < 0:
        parser.error("--max-degree must be nonnegative")
    if args.window < 2:
        parser.error("--window must be at least 2")
    jobs = args.jobs if args.jobs is not None else (os.cpu_count() or 1)
    if jobs < 1:
        parser.error("--jobs must be at least 1")

    return RunConfig(
        suites=tuple(names),
        pairs=pairs,
        max_degree=max_degree,
        window=args.window,
        k=k,
        jobs=jobs,
        report_path=args.report_path,
        quiet=args.quiet,
        corrupt=args.inject_sign_error,
    )


def run(cfg: RunConfig) -> int:
    """Execute the configured suites.  Results are aggregated in suite
    order no matter how many workers ran them."""
    try:
        if cfg.jobs > 1 and len(cfg.suites) > 1:
            with ThreadPoolExecutor(max_workers=cfg.jobs) as pool:
                futures = [pool.submit(SUITES[name], cfg) for name in cfg.suites]
                results = [(name, f.result()) for name, f in zip(cfg.suites, futures)]
        else:
            results = [(name, SUITES[name](cfg)) for name in cfg.suites]
    except WindowTooSmall as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2

    n_pass = n_fail = 0
    checks = []
    for name, reports in results:
        for rep in reports:
            checks.append((name, rep))
            if rep.passed:
                n_pass += 1
            else:
                n_fail += 1
            if not cfg.quiet or not rep.passed:
                print(f"[{name}] {rep.text_line()}")
    print(f"{n_pass + n_fail} checks: {n_pass} passed, {n_fail} failed")

    if cfg.report_path:
        payload = {
            "version": __version__,
            "config": {
                "suites": list(cfg.suites),
                "pairs": cfg.pairs,
                "max_degree": cfg.max_degree,
                "window": cfg.window,
                "k": [str(v) for v in cfg.k],
            },
            "checks": [dict(rep.to_json(), suite=suite) for suite, rep in checks],
            "summary": {"pass": n_pass, "fail": n_fail},
        }
        with open(cfg.report_path, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=1)
            fh.write("\n")

    return 0 if n_fail == 0 else 1


def main(argv=None) -> int:
    try:
        cfg = parse_config(sys.argv[1:] if argv is None else argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else int(exc.code or 0)
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
