"""Print chi* next to the oracle value and chi_= for every K_{a,b} (or K_{a,b,c}).

Usage:
    python scripts/threshold_table.py [--max-n 9] [--parts 2]
"""

from __future__ import annotations

import argparse
from itertools import combinations_with_replacement

from equipart.oracle import oracle_chi_eq, oracle_chi_star
from equipart.threshold import chi_star


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=9)
    ap.add_argument("--parts", type=int, default=2)
    args = ap.parse_args()

    print(f"{'parts':<16}{'h':>4}{'chi*':>6}{'oracle':>8}{'chi_=':>7}")
    mismatches = 0
    for parts in combinations_with_replacement(range(1, args.max_n + 1), args.parts):
        report = chi_star(parts)
        truth = oracle_chi_star(parts)
        mismatches += report.chi_star != truth
        flag = "" if report.chi_star == truth else "  <-- mismatch"
        print(f"{','.join(map(str, parts)):<16}{report.h:>4}{report.chi_star:>6}"
              f"{truth:>8}{oracle_chi_eq(parts):>7}{flag}")
    print(f"\n{mismatches} mismatches")


if __name__ == "__main__":
    main()
