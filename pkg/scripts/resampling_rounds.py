#!/usr/bin/env python3
"""Rounds needed by the resampling labeller on cycles and other high-girth graphs.

Usage:
    python scripts/resampling_rounds.py [--seeds 50]
"""

import argparse
import statistics

from goodlabel.bounds import lll_min_k
from goodlabel.graph import cycle, petersen
from goodlabel.labeller import mt_label
from goodlabel.walks import is_good

CASES = [
    ("cycle(20), k=6", cycle(20), 6, False),
    ("cycle(30), k=3", cycle(30), 3, False),
    ("cycle(60), k=4", cycle(60), 4, False),
    ("petersen, k=2 (override)", petersen(), 2, True),
]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seeds", type=int, default=50)
    ap.add_argument("--max-rounds", type=int, default=10_000)
    args = ap.parse_args()

    print("LLL walk length by max degree:", {d: lll_min_k(d).k for d in range(1, 7)})
    for name, g, k, override in CASES:
        rounds, done, good = [], 0, 0
        for seed in range(args.seeds):
            phi, st = mt_label(g, k, seed=seed, max_rounds=args.max_rounds, override=override)
            rounds.append(st.rounds)
            done += st.terminated
            good += is_good(g, phi).good
        print(
            f"{name:28s} terminated {done}/{args.seeds}  good {good}/{args.seeds}  "
            f"rounds median={statistics.median(rounds)} max={max(rounds)}"
        )


if __name__ == "__main__":
    main()
