#!/usr/bin/env python3
"""Exhaustive sweep over all labeled graphs up to a given size.

Prints, per vertex count, how many graphs were enumerated, how many have
cutwidth at most 2, and how long the sweep took.  Any disagreement
between the width-2 search, the DP optimum, and the certificate pipeline
is reported with a replayable edge list.

    python3 scripts/exhaustive_sweep.py --max-n 6
"""

from __future__ import annotations

import argparse
import sys
import time

from cutchain.certificates import certify, verify_certificate
from cutchain.graphs import enumerate_labeled_graphs, serialize_edge_list
from cutchain.layouts import exact_cutwidth, find_width2_layout


def sweep(max_n: int) -> int:
    bad = 0
    print(f"{'n':>3} {'graphs':>9} {'width<=2':>9} {'seconds':>9}")
    for n in range(1, max_n + 1):
        started = time.monotonic()
        total = 0
        thin = 0
        for g in enumerate_labeled_graphs(n):
            total += 1
            optimum = exact_cutwidth(g).width
            layout = find_width2_layout(g)
            if (optimum <= 2) != (layout is not None):
                bad += 1
                print(f"DISAGREEMENT {serialize_edge_list(g)!r}", file=sys.stderr)
                continue
            if layout is None:
                continue
            thin += 1
            cert = certify(g)
            problems = verify_certificate(cert) if cert else ["no certificate produced"]
            if problems:
                bad += 1
                print(f"BAD CERTIFICATE {serialize_edge_list(g)!r}: {problems[0]}", file=sys.stderr)
        print(f"{n:>3} {total:>9} {thin:>9} {time.monotonic() - started:>9.2f}")
    return bad


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=6, help="largest vertex count (<= 7)")
    args = parser.parse_args()
    bad = sweep(args.max_n)
    if bad:
        print(f"{bad} failures", file=sys.stderr)
        return 1
    print("no failures")
    return 0


if __name__ == "__main__":
    sys.exit(main())
