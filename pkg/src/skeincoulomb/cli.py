"""Command-line front end: run verification suites and write a JSON or text report."""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import List, Optional

from . import __version__
from .errors import ConfigError
from .theoremsuite import SUITES, RunConfig, run_suites

EXIT_OK, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise ConfigError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="skeincoulomb", description="Verify skein, DAHA and Coulomb-branch identities exactly.")
    p.add_argument("--suite", default="all", help=f"one of {', '.join(SUITES)}, or all (default)")
    p.add_argument("--gamma-range", type=int, default=5, help="curve family range N, at least 1")
    p.add_argument("--basis-depth", type=int, default=12, help="symmetric basis depth, at least 4")
    p.add_argument("--mode", default="symbolic", help="symbolic or random")
    p.add_argument("--seed", type=int, default=0, help="seed for random-evaluation mode")
    p.add_argument("--report", default="text", help="json or text")
    p.add_argument("--out", default=None, help="write the report here instead of stdout")
    p.add_argument("--no-timing", action="store_true", help="report zero millis everywhere")
    return p


def parse_config(argv: Optional[List[str]] = None):
    args = build_parser().parse_args(argv)
    if args.report not in ("json", "text"):
        raise ConfigError(f"unknown report format {args.report!r}")
    cfg = RunConfig(args.suite, args.gamma_range, args.basis_depth, args.mode, args.seed, not args.no_timing)
    cfg.validate()
    return cfg, args


def build_report(cfg: RunConfig, results, total_millis: int) -> dict:
    return {
        "version": __version__,
        "config": cfg.as_dict(),
        "suites": [r.as_dict() for r in results],
        "total_millis": total_millis if cfg.timing else 0,
        "pass": all(r.passed for r in results),
    }


def render_text(report: dict) -> str:
    lines = [f"skeincoulomb {report['version']}"]
    lines.append("config: " + " ".join(f"{k}={v}" for k, v in report["config"].items()))
    for s in report["suites"]:
        ok = all(c["pass"] for c in s["checks"])
        lines.append(f"== {s['name']}: {'PASS' if ok else 'FAIL'} ==")
        for c in s["checks"]:
            lines.append(f"  {'PASS' if c['pass'] else 'FAIL'} [{c['tier']}] {c['desc']} ({c['millis']} ms)")
            lines.append(f"    residual: {c['residual_text']}")
        for k, v in s["constants"].items():
            lines.append(f"  const {k} = {v}")
    lines.append(f"total_millis: {report['total_millis']}")
    lines.append(f"result: {'PASS' if report['pass'] else 'FAIL'}")
    return "\n".join(lines) + "\n"


def run(cfg: RunConfig):
    start = time.perf_counter()
    results = run_suites(cfg)
    total = int(round((time.perf_counter() - start) * 1000))
    report = build_report(cfg, results, total)
    return (EXIT_OK if report["pass"] else EXIT_FAIL), report


def main(argv: Optional[List[str]] = None) -> int:
    try:
        cfg, args = parse_config(argv)
    except ConfigError as e:
        print(f"configuration error: {e}", file=sys.stderr)
        return EXIT_CONFIG
    status, report = run(cfg)
    text = json.dumps(report, indent=2, sort_keys=False) + "\n" if args.report == "json" else render_text(report)
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as e:
            print(f"configuration error: cannot write {args.out}: {e}", file=sys.stderr)
            return EXIT_CONFIG
    else:
        sys.stdout.write(text)
    for s in report["suites"]:
        for c in s["checks"]:
            if not c["pass"]:
                print(f"FAIL {s['name']}: {c['desc']}", file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
