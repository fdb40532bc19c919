#!/usr/bin/env python3
"""Search candidate closed forms for the even-power D sums (the open case).

Fits every shape in the structural catalogue against exact oracle data
and reports honest statuses.  A verified candidate (exact on >= 10
holdout points) would be a genuine conjecture worth further study; the
expected outcome is that every shape is refuted.
"""

import argparse
import sys

from binomial_moments.conjecture import SearchConfig, explore_D_even, search_catalogue


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--m-max", type=int, default=3, help="search D_0, D_2, ..., D_{2*m_max}")
    ap.add_argument("--max-degree", type=int, default=4)
    ap.add_argument("--max-roots", type=int, default=2)
    ap.add_argument("--holdout", type=int, default=10)
    args = ap.parse_args()

    config = SearchConfig(
        max_degree=args.max_degree, max_roots=args.max_roots, holdout=args.holdout
    )
    print(f"catalogue: {len(search_catalogue(config))} shapes per exponent\n")
    found_any = False
    for m in range(0, args.m_max + 1):
        candidates = explore_D_even(m, config)
        verified = [c for c in candidates if c.status == "verified"]
        refuted = sum(1 for c in candidates if c.status == "refuted")
        print(f"D_{2 * m}: attempted={len(candidates)} refuted={refuted} verified={len(verified)}")
        for c in verified:
            found_any = True
            print(f"  CANDIDATE (holdout-verified, not proved): {c.formula()}")
    if not found_any:
        print("\nno catalogue shape fits; the even-power D case stays open here")
    return 0


if __name__ == "__main__":
    sys.exit(main())
