"""Degree sequences: graphicality, realisation, and exhaustive enumeration.

Sequences are plain tuples of ints sorted non-increasing. Because ``irr_t``
only depends on the degree sequence, the enumerators here are the search space
for the brute-force maximum checks in :mod:`irrlab.oracle`.
"""

from __future__ import annotations

import heapq
from typing import Iterable, Iterator, Sequence

from .errors import NotGraphical, NotTreeSequence, OrderTooSmall
from .graph import Graph, from_edge_list

DegreeSequence = tuple[int, ...]


def _eg_holds(d: Sequence[int]) -> bool:
    """Erdős–Gallai inequalities for a sorted sequence with even sum, in O(n).

    For each k the tail sum of ``min(d_i, k)`` splits into entries ``>= k``
    (a prefix of the tail, contributing ``k`` each) and the rest (summed from a
    suffix-sum table).
    """
    n = len(d)
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] + d[i]
    p = n  # d[0:p] are the entries >= k
    lhs = 0
    for k in range(1, n + 1):
        lhs += d[k - 1]
        while p > 0 and d[p - 1] < k:
            p -= 1
        q = max(p, k)
        if lhs > k * (k - 1) + k * (q - k) + suffix[q]:
            return False
    return True


def is_graphical(d: Sequence[int]) -> bool:
    d = sorted(d, reverse=True)
    n = len(d)
    if n and (d[-1] < 0 or d[0] > n - 1):
        return False
    if sum(d) % 2:
        return False
    return _eg_holds(d)


def realize(d: Sequence[int]) -> Graph:
    """Havel–Hakimi realisation; vertex ``i`` receives degree ``d[i]``."""
    if not is_graphical(d):
        raise NotGraphical(f"{tuple(d)} is not graphical")
    n = len(d)
    heap = [(-x, v) for v, x in enumerate(d) if x > 0]
    heapq.heapify(heap)
    edges = []
    while heap:
        need, v = heapq.heappop(heap)
        need = -need
        partners = [heapq.heappop(heap) for _ in range(need)]
        for r, w in partners:
            edges.append((v, w))
            if r + 1 < 0:
                heapq.heappush(heap, (r + 1, w))
    return from_edge_list(n, edges)


def enumerate_graphical(n: int, first_values: Iterable[int] | None = None) -> Iterator[DegreeSequence]:
    """All graphical sequences of length ``n`` in lexicographically decreasing order.

    ``first_values`` restricts the leading entry, which is how callers split the
    stream into disjoint partitions; iterating the values in decreasing order
    reproduces the global order.
    """
    if n == 0:
        yield ()
        return
    firsts = range(n - 1, -1, -1) if first_values is None else sorted(set(first_values), reverse=True)
    seq = [0] * n

    def extend(k: int, hi: int, total: int) -> Iterator[DegreeSequence]:
        # seq[0:k] fixed, next entry in [0, hi]
        if k == n:
            if total % 2 == 0 and _eg_holds(seq):
                yield tuple(seq)
            return
        for x in range(hi, -1, -1):
            seq[k] = x
            t = total + x
            kk = k + 1
            # condition kk with the most generous tail: every later entry <= x
            if t > kk * (kk - 1) + (n - kk) * min(x, kk):
                continue
            yield from extend(kk, x, t)

    for first in firsts:
        if not 0 <= first <= n - 1:
            continue
        seq[0] = first
        yield from extend(1, first, first)


def _partitions(total: int, largest: int) -> Iterator[tuple[int, ...]]:
    if total == 0:
        yield ()
        return
    for x in range(min(total, largest), 0, -1):
        for rest in _partitions(total - x, x):
            yield (x,) + rest


def enumerate_tree_sequences(n: int) -> Iterator[DegreeSequence]:
    """Every non-increasing positive sequence of length ``n`` summing to ``2(n-1)``.

    Subtracting one from each entry gives a partition of ``n - 2``, so this is a
    partition walk in decreasing lexicographic order.
    """
    if n < 2:
        raise OrderTooSmall(f"trees need n >= 2, got {n}")
    for part in _partitions(n - 2, n - 2):
        yield tuple(x + 1 for x in part) + (1,) * (n - len(part))


def is_tree_sequence(d: Sequence[int]) -> bool:
    n = len(d)
    return n >= 2 and all(x >= 1 for x in d) and sum(d) == 2 * (n - 1)


def realize_tree(d: Sequence[int]) -> Graph:
    """Caterpillar realisation: internal vertices on a path, leaves hung greedily.

    Vertex ``i`` receives degree ``d[i]``.
    """
    if not is_tree_sequence(d):
        raise NotTreeSequence(f"{tuple(d)} is not a tree degree sequence")
    n = len(d)
    spine = [v for v in range(n) if d[v] >= 2]
    leaves = [v for v in range(n) if d[v] == 1]
    if not spine:
        return from_edge_list(2, [(0, 1)])
    edges = list(zip(spine, spine[1:]))
    it = iter(leaves)
    for pos, v in enumerate(spine):
        used = (pos > 0) + (pos < len(spine) - 1)
        edges.extend((v, next(it)) for _ in range(d[v] - used))
    return from_edge_list(n, edges)
