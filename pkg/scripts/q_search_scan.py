#!/usr/bin/env python3
"""Scan a_t - 4c*b_t over dyadic q to see for which t an admissible q' exists.

Prints, per (t, c), the smallest admissible q' if one exists, together with
a_t/b_t at a few small q. For t >= 3 the ratio stays near 3 (t = 3) or 2
(t >= 4), below 4c for every c >= 1, so no q' exists.

Usage:
    python scripts/q_search_scan.py [--max-t 8] [--max-c 4]
"""

import argparse
from fractions import Fraction

from goodlabel.bounds import BoundsError, ab_sequences, find_q_prime


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-t", type=int, default=8)
    ap.add_argument("--max-c", type=int, default=4)
    args = ap.parse_args()

    for t in range(1, args.max_t + 1):
        ratios = []
        for qp in (2, 4, 8, 16):
            seq = ab_sequences(t, Fraction(1, 2**qp))
            ratios.append("inf" if seq.bk(t) == 0 else f"{float(seq.ak(t) / seq.bk(t)):.4f}")
        found = []
        for c in range(1, args.max_c + 1):
            try:
                found.append(str(find_q_prime(t, c).q_prime))
            except BoundsError:
                found.append("-")
        print(f"t={t}  q' by c=1..{args.max_c}: {' '.join(found):12s}  a_t/b_t at q=2^-(2,4,8,16): {', '.join(ratios)}")


if __name__ == "__main__":
    main()
