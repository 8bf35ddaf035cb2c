#!/usr/bin/env python3
"""Converse-direction fuzzing: random chains and their random subgraphs.

Draws seeded random chains, lays each one out canonically, then samples
spanning subgraphs at several edge-keep probabilities and confirms each
has cutwidth at most 2 (verified witness; subset DP as a cross-check on
instances small enough for it).

    python3 scripts/chain_fuzz.py --trials 500 --max-cycles 8 --seed 7
"""

from __future__ import annotations

import argparse
import sys
import time

from cutchain.chains import canonical_layout, random_chain, random_subgraph, underlying_graph
from cutchain.layouts import exact_cutwidth, find_width2_layout, layout_width
from cutchain.rng import SplitMix64

PROBABILITIES = (0.3, 0.6, 0.9)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--trials", type=int, default=200)
    parser.add_argument("--max-cycles", type=int, default=8)
    parser.add_argument("--max-cycle-len", type=int, default=9)
    parser.add_argument("--seed", type=int, default=1)
    parser.add_argument("--dp-cap", type=int, default=14, help="largest n for the DP cross-check")
    args = parser.parse_args()

    rng = SplitMix64(args.seed)
    started = time.monotonic()
    failures = 0
    widths: dict[int, int] = {}
    dp_checked = 0
    for trial in range(args.trials):
        k = 1 + rng.below(args.max_cycles)
        chain = random_chain(k, args.max_cycle_len, rng.next_u64())
        host, _ = underlying_graph(chain)
        width = layout_width(host, canonical_layout(chain))
        widths[width] = widths.get(width, 0) + 1
        if width > 2:
            failures += 1
            print(f"trial {trial}: canonical layout width {width}", file=sys.stderr)
        for probability in PROBABILITIES:
            sub = random_subgraph(chain, probability, rng.next_u64())
            witness = find_width2_layout(sub)
            if witness is None or layout_width(sub, witness) > 2:
                failures += 1
                print(f"trial {trial}: subgraph p={probability} not width 2", file=sys.stderr)
                continue
            if sub.n <= args.dp_cap:
                dp_checked += 1
                if exact_cutwidth(sub).width > 2:
                    failures += 1
                    print(f"trial {trial}: DP disagreement p={probability}", file=sys.stderr)

    elapsed = time.monotonic() - started
    print(f"{args.trials} chains, {args.trials * len(PROBABILITIES)} subgraphs, {elapsed:.1f}s")
    print(f"canonical widths: {dict(sorted(widths.items()))}")
    print(f"DP cross-checked subgraphs: {dp_checked}")
    if failures:
        print(f"{failures} failures", file=sys.stderr)
        return 1
    print("no failures")
    return 0


if __name__ == "__main__":
    sys.exit(main())
