#!/usr/bin/env python3
"""Run the full corpus sweep and write a deterministic JSON report.

Usage:
    python scripts/run_sweep.py [--family all] [--max-order 8]
                                [--field F2 --field F3 ...]
                                [--out sweep_report.json]

Exit status follows the library convention: 0 all green, 2 a claim
failed, 4 an enumeration budget was exceeded.
"""
import argparse
import sys
import time

from grl.harness import (DEFAULT_BUDGET, DEFAULT_CAP, SweepConfig, corpus_sweep,
                         exit_code, report_json)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--family", default="all",
                        help="group_rings | crossed_products | Zk_graded | all")
    parser.add_argument("--max-order", type=int, default=8)
    parser.add_argument("--field", action="append", dest="fields",
                        help="repeatable; default F2 F3 F5 Q")
    parser.add_argument("--cap", type=int, default=DEFAULT_CAP)
    parser.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    parser.add_argument("--out", default="sweep_report.json")
    args = parser.parse_args(argv)

    config = SweepConfig(family=args.family, max_order=args.max_order,
                         fields=tuple(args.fields or ("F2", "F3", "F5", "Q")),
                         cap=args.cap, budget=args.budget)
    t0 = time.monotonic()
    result = corpus_sweep(config)
    elapsed = time.monotonic() - t0

    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(report_json(result))

    counts = result.counts
    print(f"{len(result.reports)} instances verified in {elapsed:.2f}s "
          f"(family={config.family}, fields={','.join(config.fields)})")
    print(f"claims: {counts['passed']} passed, {counts['failed']} failed, "
          f"{counts['not_applicable']} not applicable, "
          f"{counts['not_evaluated']} not evaluated")
    for report in result.failures:
        print(f"FAILED: {report.name}")
        for claim in report.claims:
            if claim.status == "failed":
                print(f"  {claim.key}: {claim.detail}")
    print(f"report written to {args.out}")
    return exit_code(result.reports)


if __name__ == "__main__":
    sys.exit(main())
