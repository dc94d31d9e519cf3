"""``verify`` command line entry point."""

from __future__ import annotations

import argparse
import sys

from .checks import DEFAULT_CUTOFF, DEFAULT_ETA, DEFAULT_TOL, SuiteConfig, run_suite, suite_failed
from .report import render_report


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="verify",
        description="Run every registered mirror-space identity check and report the outcome.",
    )
    p.add_argument("--cutoff", type=int, default=DEFAULT_CUTOFF, help="Fock truncation level (>= 3)")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL, help="float-mode tolerance (ignored in exact mode)")
    p.add_argument("--eta", type=float, default=DEFAULT_ETA, help="regulator for Delta_-")
    p.add_argument("--seed", type=int, default=0, help="seed for random-matrix sampling")
    p.add_argument("--mode", choices=("exact", "float"), default="exact")
    p.add_argument("--format", choices=("text", "json"), default="text")
    # negative control: swaps in a corrupted Theta so the anticommutation check must fail
    p.add_argument("--corrupt-theta", action="store_true", help=argparse.SUPPRESS)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = SuiteConfig(
            cutoff=args.cutoff, tol=args.tol, eta=args.eta, seed=args.seed,
            mode=args.mode, format=args.format, corrupt_theta=args.corrupt_theta,
        )
    except ValueError as exc:
        parser.print_usage(sys.stderr)
        print(f"verify: error: {exc}", file=sys.stderr)
        return 2
    reports = run_suite(cfg)
    sys.stdout.buffer.write(render_report(reports, cfg.format))
    if cfg.format == "json":
        sys.stdout.buffer.write(b"\n")
    sys.stdout.flush()
    failed = [r.check_id for r in reports if r.status == "fail"]
    if failed:
        print(f"verify: {len(failed)} check(s) failed: {', '.join(failed)}", file=sys.stderr)
    return 1 if suite_failed(reports) else 0


if __name__ == "__main__":
    sys.exit(main())
