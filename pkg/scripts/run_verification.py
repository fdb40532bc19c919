#!/usr/bin/env python3
"""Run the flagship verification grid and print one line per check.

Equivalent to `moments verify --m-max 8 --n-max 30` plus a human summary.
"""

import argparse
import json
import sys
import time

from binomial_moments.verify import VerifyConfig, run_verification


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--m-max", type=int, default=8)
    ap.add_argument("--n-max", type=int, default=30)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", help="also write the JSON report here")
    args = ap.parse_args()

    t0 = time.perf_counter()
    report = run_verification(VerifyConfig(m_max=args.m_max, n_max=args.n_max, seed=args.seed))
    dt = time.perf_counter() - t0

    for check in report.checks:
        print(f"{check.status.upper():4s}  {check.name:40s} cases={check.cases}")
        if check.status != "pass":
            print(f"      witness: {check.witness}")
    print(f"\nall_pass={report.all_pass}  ({dt:.1f}s)")

    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(report.to_dict(), fh, indent=2)
        print(f"report written to {args.out}")
    return 0 if report.all_pass else 1


if __name__ == "__main__":
    sys.exit(main())
