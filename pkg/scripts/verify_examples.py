#!/usr/bin/env python3
"""Re-check every fact recorded for the built-in worked-example fixtures.

Usage:
    python scripts/verify_examples.py [--only NAME] [--out report.json]

Exit status 0 when every fact holds, 2 otherwise.
"""
import argparse
import json
import sys

from grl.fixtures import FIXTURES, UnknownFixtureError, run_all_fixtures, run_fixture


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--only", default=None,
                        help=f"one of: {', '.join(FIXTURES)}")
    parser.add_argument("--out", default=None, help="optional JSON report path")
    args = parser.parse_args(argv)

    try:
        reports = ([run_fixture(args.only)] if args.only else run_all_fixtures())
    except UnknownFixtureError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3

    all_passed = True
    for report in reports:
        ok = sum(f.passed for f in report.facts)
        print(f"{report.name}: {'PASS' if report.passed else 'FAIL'} "
              f"({ok}/{len(report.facts)} facts) — {report.description}")
        for fact in report.facts:
            mark = "ok" if fact.passed else "FAIL"
            print(f"  [{mark:>4}] {fact.key}")
            if not fact.passed:
                print(f"         expected {fact.expected!r}, got {fact.actual!r}")
        all_passed &= report.passed

    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump([r.to_dict() for r in reports], fh, sort_keys=True, indent=2)
            fh.write("\n")
        print(f"report written to {args.out}")
    return 0 if all_passed else 2


if __name__ == "__main__":
    sys.exit(main())
