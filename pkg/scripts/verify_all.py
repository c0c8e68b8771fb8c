#!/usr/bin/env python3
"""Run every brute-force check at desk scale and print one line per check.

Usage:
    python scripts/verify_all.py [--threads K] [--census-max 6]
"""

from __future__ import annotations

import argparse
import sys
import time

from irrlab import oracle
from irrlab.extremal import max_total_irregularity, tree_max


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--threads", type=int, default=1)
    ap.add_argument("--seq-max", type=int, default=12)
    ap.add_argument("--tree-max", type=int, default=14)
    ap.add_argument("--census-max", type=int, default=6)
    args = ap.parse_args()

    ok = True

    def line(name, passed, detail, t0):
        nonlocal ok
        ok &= passed
        print(f"{'PASS' if passed else 'FAIL'}  {name:<28} {detail}  ({time.perf_counter() - t0:.1f}s)")

    t0 = time.perf_counter()
    bad = [n for n in range(2, args.seq_max + 1)
           if oracle.bruteforce_max_over_sequences(n, threads=args.threads)[0] != max_total_irregularity(n)]
    line("general maximum", not bad, f"n=2..{args.seq_max} mismatches={bad}", t0)

    t0 = time.perf_counter()
    bad = []
    for n in range(2, args.tree_max + 1):
        best, arg = oracle.bruteforce_tree_max(n)
        if best != tree_max(n) or (n >= 3 and arg != {(n - 1,) + (1,) * (n - 1)}):
            bad.append(n)
    line("tree maximum", not bad, f"n=2..{args.tree_max} mismatches={bad}", t0)

    for n in range(4, args.census_max + 1):
        t0 = time.perf_counter()
        res = oracle.extremal_census(n, threads=args.threads)
        passed = (res.max_value == max_total_irregularity(n) and res.family_subset_confirmed
                  and oracle.census_complement_closed(res))
        line(f"census n={n}", passed,
             f"max={res.max_value} classes={res.class_count} family={2 ** (n // 2 - 1)}", t0)

    t0 = time.perf_counter()
    for audit in oracle.audit_bounds(threads=args.threads):
        line(audit.bound_id, not audit.violations,
             f"instances={audit.instances} max_ratio={audit.max_ratio}", t0)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
