"""Albertson irregularity and total irregularity.

``irr(G)`` sums the imbalance ``|d(u) - d(v)|`` over edges; ``irr_t(G)`` sums
it over all unordered vertex pairs and therefore depends on the degree
sequence alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from operator import mul
from typing import Sequence

from .errors import EdgeAbsent, EdgePresent, IndexOutOfRange, LoopEdge, NotSorted
from .graph import Graph, degree_sequence


@dataclass(frozen=True)
class IrregularityReport:
    n: int
    m: int
    irr: int
    irr_t: int
    degree_sequence: tuple[int, ...]

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "irr": self.irr,
            "irr_t": self.irr_t,
            "degree_sequence": list(self.degree_sequence),
        }


def irr(g: Graph) -> int:
    d = g.degrees
    return sum(abs(d[u] - d[v]) for u, v in g.edges)


def irr_t(g: Graph) -> int:
    """Total irregularity by direct summation over all vertex pairs (quadratic)."""
    d = g.degrees
    n = len(d)
    return sum(abs(d[i] - d[j]) for i in range(n) for j in range(i + 1, n))


def irr_t_of_sequence(d: Sequence[int]) -> int:
    """Total irregularity of a non-increasing degree sequence in linear time.

    In sorted order the ``i``-th largest value (1-based) is the larger member of
    ``n - i`` pairs and the smaller of ``i - 1``, so its net coefficient is
    ``n - 2i + 1``.
    """
    if hasattr(d, "tolist"):
        d = d.tolist()
    n = len(d)
    if any(a < b for a, b in zip(d, d[1:])):
        raise NotSorted("degree sequence must be sorted non-increasing")
    return sum(map(mul, range(n - 1, -n, -2), d))


def report(g: Graph) -> IrregularityReport:
    ds = degree_sequence(g)
    return IrregularityReport(g.order, g.size, irr(g), irr_t_of_sequence(ds), ds)


def _check_pair(g: Graph, u: int, v: int) -> None:
    if u == v:
        raise LoopEdge(f"loop at vertex {u}")
    if not (0 <= u < g.order and 0 <= v < g.order):
        raise IndexOutOfRange(f"pair {(u, v)} outside 0..{g.order - 1}")


def _bump(d: Sequence[int], a: int, skip: tuple[int, int]) -> int:
    # sum over x not in skip of |a+1 - d[x]| - |a - d[x]|
    total = 0
    for x, dx in enumerate(d):
        if x not in skip:
            total += 1 if a >= dx else -1
    return total


def irr_t_delta_add(g: Graph, u: int, v: int) -> int:
    """``irr_t(g + uv) - irr_t(g)`` from degrees alone.

    Both endpoint degrees rise by one, so the u-v pair itself is unchanged and
    every other pair involving u or v moves by exactly +-1.
    """
    _check_pair(g, u, v)
    if g.has_edge(u, v):
        raise EdgePresent(f"edge {(u, v)} already in graph")
    d = g.degrees
    return _bump(d, d[u], (u, v)) + _bump(d, d[v], (u, v))


def irr_t_delta_remove(g: Graph, u: int, v: int) -> int:
    """``irr_t(g - uv) - irr_t(g)``; the mirror image of :func:`irr_t_delta_add`."""
    _check_pair(g, u, v)
    if not g.has_edge(u, v):
        raise EdgeAbsent(f"edge {(u, v)} not in graph")
    d = g.degrees
    # lowering a to a-1 against dx: +1 when a <= dx, -1 when a > dx
    total = 0
    for x, dx in enumerate(d):
        if x != u and x != v:
            total += (1 if d[u] <= dx else -1) + (1 if d[v] <= dx else -1)
    return total
