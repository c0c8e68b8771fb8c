#!/usr/bin/env python3
"""Tabulate the maximum-irr_t isomorphism classes for small n.

For each class: canonical graph6, degree sequence, labeled count, and whether
it is a member of the one-universal-vertex family or the complement of one.
"""

from __future__ import annotations

import argparse

from irrlab import oracle
from irrlab.extremal import enumerate_extremal_family
from irrlab.graph import canonical_form, complement, degree_sequence, parse_graph6

ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
ap.add_argument("--n-max", type=int, default=6)
ap.add_argument("--threads", type=int, default=1)
args = ap.parse_args()

for n in range(2, args.n_max + 1):
    res = oracle.extremal_census(n, threads=args.threads)
    family = {canonical_form(eg.graph) for eg in enumerate_extremal_family(n)} if n >= 4 else set()
    print(f"n={n}  max irr_t={res.max_value}  classes={res.class_count}")
    for rep, count in zip(res.representatives, res.labeled_counts):
        g = parse_graph6(rep)
        key = rep.encode()
        if key in family:
            tag = "family"
        elif canonical_form(complement(g)) in family:
            tag = "complement of family"
        else:
            tag = "-"
        seq = ",".join(map(str, degree_sequence(g)))
        print(f"  {rep:<8} {seq:<22} labeled={count:<6} {tag}")
