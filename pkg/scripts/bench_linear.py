"""Time chi_star on random instances with l = 1e6 / 2^j parts and plot the curve.

Usage:
    python scripts/bench_linear.py [--seed 0] [--out bench.png]
"""

from __future__ import annotations

import argparse

from equipart.bench import run_bench


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-l", type=int, default=10**6)
    ap.add_argument("--out", default=None, help="optional PNG path (needs matplotlib)")
    args = ap.parse_args()

    rows = run_bench(max_l=args.max_l, seed=args.seed, repeat=5)
    prev = None
    for l, t in rows:
        ratio = f"{t / prev:.2f}" if prev else "-"
        print(f"{l:>9}  {t * 1e3:9.3f} ms  x{ratio}")
        prev = t

    if args.out:
        import matplotlib

        matplotlib.use("Agg")
        import matplotlib.pyplot as plt

        ls, ts = zip(*rows)
        plt.loglog(ls, ts, "o-")
        plt.xlabel("number of parts l")
        plt.ylabel("chi_star wall time [s]")
        plt.savefig(args.out, dpi=120)


if __name__ == "__main__":
    main()
