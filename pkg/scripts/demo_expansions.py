#!/usr/bin/env python3
"""Print a tour of expansions: one fraction across bases, one base across fractions."""

from radixgraph.expansion import Fraction, expand
from radixgraph.export import format_expansion


def main() -> int:
    print("7/20 across bases:")
    for base in (2, 3, 8, 10, 12, 16):
        result, red = expand(Fraction(7, 20), base)
        tail = ""
        if red.multiplier is not None:
            tail = f"   [shift {red.shift}, modulus {base * red.graph_n - 1}]"
        print(f"  base {base:>2}: {format_expansion(result, ascii_style=True)}{tail}")

    print("\nsmall denominators in base 10:")
    for m in range(2, 17):
        result, _ = expand(Fraction(1, m), 10)
        print(f"  1/{m:<2} = {format_expansion(result)}")

    print("\nreciprocals in base 12:")
    for m in (5, 7, 11, 13, 20, 35):
        result, _ = expand(Fraction(1, m), 12)
        print(f"  1/{m:<2} = {format_expansion(result)}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
