#!/usr/bin/env python3
"""Compute gamma(n) by exhaustive search and write the witness table.

Usage:
    python scripts/gamma_table.py [--max-n 5] [--out results/gamma] [--threads 1]
"""

import argparse
import time

from goodlabel.labeller import gamma, write_gamma_table


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=5)
    ap.add_argument("--out", default="results/gamma")
    ap.add_argument("--threads", type=int, default=1)
    args = ap.parse_args()

    entries = []
    for n in range(1, args.max_n + 1):
        t0 = time.perf_counter()
        e = gamma(n, cap=max(args.max_n, 5), threads=args.threads)
        entries.append(e)
        print(f"n={n}  gamma={e.gamma}  graphs_checked={e.graphs_checked}  edges={list(e.graph.edges)}  ({time.perf_counter() - t0:.2f}s)")
    print("table:", write_gamma_table(entries, args.out))


if __name__ == "__main__":
    main()
