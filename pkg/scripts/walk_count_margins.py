#!/usr/bin/env python3
"""Nice-walk counts on random regular graphs against the closed-form lower bound g_t.

For each graph and random labelling, reports the count of nice t-walks and the
margin over g_t(n, nd/2, d) at q = 1/4 (needs qd, qpd, ... to be integers).

Usage:
    python scripts/walk_count_margins.py [--n 30] [--d 16] [--graphs 20] [--labellings 100] [--t 2 3]
"""

import argparse
import random
import statistics
from fractions import Fraction

from goodlabel.bounds import g_value
from goodlabel.graph import random_regular
from goodlabel.labeller import random_labelling
from goodlabel.walks import count_nice_walks


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=30)
    ap.add_argument("--d", type=int, default=16)
    ap.add_argument("--graphs", type=int, default=20)
    ap.add_argument("--labellings", type=int, default=100)
    ap.add_argument("--t", type=int, nargs="+", default=[2, 3])
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    q = Fraction(1, 4)
    m = args.n * args.d // 2
    rng = random.Random(args.seed)
    for t in args.t:
        bound = g_value(args.n, m, args.d, t, q)
        counts = []
        for _ in range(args.graphs):
            g = random_regular(args.n, args.d, seed=rng.getrandbits(64))
            for _ in range(args.labellings):
                counts.append(count_nice_walks(g, random_labelling(g, rng.getrandbits(64)), t))
        print(
            f"t={t}  g_t={bound}  min={min(counts)}  mean={statistics.fmean(counts):.1f}  "
            f"max={max(counts)}  violations={sum(c < bound for c in counts)}"
        )


if __name__ == "__main__":
    main()
