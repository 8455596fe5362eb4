#!/usr/bin/env python3
"""Compare the graph pipeline against schoolbook long division over a grid.

Checks every k/m with m <= --max-m and k <= 2m, in every base given, and
reports throughput. Exits nonzero on the first disagreement.
"""

import argparse
import sys
import time

from radixgraph.expansion import run_oracle_sweep
from radixgraph.export import format_expansion


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-m", type=int, default=300)
    ap.add_argument("--bases", default="2,3,8,10,12,16", help="comma separated bases")
    args = ap.parse_args()
    bases = tuple(int(b) for b in args.bases.split(","))
    t0 = time.perf_counter()
    result = run_oracle_sweep(args.max_m, bases)
    elapsed = time.perf_counter() - t0
    rate = result.cases / elapsed if elapsed else float("inf")
    if result.ok:
        print(f"{result.cases} fractions agree ({elapsed:.2f}s, {rate:.0f}/s)")
        return 0
    mis = result.mismatch
    print(f"mismatch at {mis.numerator}/{mis.denominator} base {mis.base} after {result.cases} cases:")
    print(f"  pipeline: {format_expansion(mis.expanded, ascii_style=True)}")
    print(f"  oracle:   {format_expansion(mis.oracle, ascii_style=True)}")
    return 1


if __name__ == "__main__":
    sys.exit(main())
