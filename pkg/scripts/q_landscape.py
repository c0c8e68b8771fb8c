#!/usr/bin/env python3
"""Print irr_t of the extremal construction for every admissible number of universal vertices."""

import sys

from irrlab.extremal import contribution_terms, eq7_value

for n in map(int, sys.argv[1:] or ["6", "9", "12", "15"]):
    print(f"n={n}")
    for q in range((n - 1) // 2 + 1):
        terms = contribution_terms(n, q)
        print(f"  q={q:<3} irr_t={eq7_value(n, q):<8} terms(U-N, U-Nbar, N-Nbar, N-N)={terms}")
