"""Simple undirected graphs on vertices ``0..n-1``, plus graph6 / edge-list codecs.

Graphs are immutable values. Edges are stored as unordered pairs ``(u, v)``
with ``u < v``; neighbor lists are derived lazily and kept sorted.
"""

from __future__ import annotations

import heapq
import itertools
import random
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import (
    DuplicateEdge,
    IndexOutOfRange,
    LoopEdge,
    MalformedEdgeList,
    MalformedGraph6,
    OrderTooLarge,
    UnsupportedOrder,
)

GRAPH6_MAX_ORDER = 62
CANONICAL_MAX_ORDER = 8
_G6_HEADER = ">>graph6<<"


@dataclass(frozen=True)
class Graph:
    order: int
    edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.order < 0:
            raise IndexOutOfRange(f"negative order {self.order}")
        for u, v in self.edges:
            if not 0 <= u < v < self.order:
                raise IndexOutOfRange(f"edge {(u, v)} not normalised for order {self.order}")

    @property
    def size(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.order)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(x)) for x in nbrs)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        """Degree of each vertex, indexed by vertex (not sorted)."""
        return tuple(len(x) for x in self.adjacency)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def edge_list(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def with_edge(self, u: int, v: int) -> Graph:
        e = _normalise(self.order, u, v)
        if e in self.edges:
            raise DuplicateEdge(f"edge {e} already present")
        return Graph(self.order, self.edges | {e})

    def without_edge(self, u: int, v: int) -> Graph:
        e = _normalise(self.order, u, v)
        return Graph(self.order, self.edges - {e})

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.order)):
            raise IndexOutOfRange("relabeling is not a permutation of the vertex set")
        return Graph(self.order, frozenset(
            (min(perm[u], perm[v]), max(perm[u], perm[v])) for u, v in self.edges))

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.order, self.order), dtype=bool)
        if self.edges:
            uv = np.array(list(self.edges))
            a[uv[:, 0], uv[:, 1]] = True
            a[uv[:, 1], uv[:, 0]] = True
        return a

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, edges={self.edge_list()})"


def _normalise(n: int, u: int, v: int) -> tuple[int, int]:
    if u == v:
        raise LoopEdge(f"loop at vertex {u}")
    if not (0 <= u < n and 0 <= v < n):
        raise IndexOutOfRange(f"edge {(u, v)} has an endpoint outside 0..{n - 1}")
    return (u, v) if u < v else (v, u)


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if n < 0:
        raise IndexOutOfRange(f"negative order {n}")
    seen: set[tuple[int, int]] = set()
    for u, v in edges:
        e = _normalise(n, u, v)
        if e in seen:
            raise DuplicateEdge(f"edge {e} listed twice")
        seen.add(e)
    return Graph(n, frozenset(seen))


def complete(n: int) -> Graph:
    return Graph(n, frozenset(itertools.combinations(range(n), 2)))


def path(n: int) -> Graph:
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise IndexOutOfRange("cycles need at least 3 vertices")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    k = g.order
    return Graph(g.order + h.order, g.edges | {(u + k, v + k) for u, v in h.edges})


def complement(g: Graph) -> Graph:
    n = g.order
    return Graph(n, frozenset(e for e in itertools.combinations(range(n), 2) if e not in g.edges))


def degree_sequence(g: Graph) -> tuple[int, ...]:
    """Degrees sorted non-increasing."""
    return tuple(sorted(g.degrees, reverse=True))


def is_regular(g: Graph) -> bool:
    return len(set(g.degrees)) <= 1


def is_connected(g: Graph) -> bool:
    # n <= 1 is connected by convention
    if g.order <= 1:
        return True
    seen = [False] * g.order
    seen[0] = True
    todo = deque([0])
    count = 1
    while todo:
        v = todo.popleft()
        for w in g.adjacency[v]:
            if not seen[w]:
                seen[w] = True
                count += 1
                todo.append(w)
    return count == g.order


def is_tree(g: Graph) -> bool:
    return g.order >= 1 and g.size == g.order - 1 and is_connected(g)


# ---------------------------------------------------------------- graph6

@lru_cache(maxsize=None)
def _column_pairs(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Upper-triangle pairs (i, j), i < j, in graph6 order: by column j, then row i."""
    rows = [i for j in range(1, n) for i in range(j)]
    cols = [j for j in range(1, n) for _ in range(j)]
    return np.array(rows, dtype=np.intp), np.array(cols, dtype=np.intp)


def pair_index(i: int, j: int) -> int:
    """Position of pair ``{i, j}`` in the graph6 bit order."""
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


_SIXBIT = np.array([32, 16, 8, 4, 2, 1], dtype=np.uint8)


def _bits_to_graph6(n: int, bits: np.ndarray) -> str:
    pad = -len(bits) % 6
    if pad:
        bits = np.concatenate([bits, np.zeros(pad, dtype=np.uint8)])
    payload = (bits.reshape(-1, 6) @ _SIXBIT + 63).astype(np.uint8).tobytes()
    return chr(63 + n) + payload.decode("ascii")


def to_graph6(g: Graph) -> str:
    n = g.order
    if n > GRAPH6_MAX_ORDER:
        raise UnsupportedOrder(f"graph6 encoding limited to n <= {GRAPH6_MAX_ORDER}, got {n}")
    bits = np.zeros(n * (n - 1) // 2, dtype=np.uint8)
    for u, v in g.edges:
        bits[pair_index(u, v)] = 1
    return _bits_to_graph6(n, bits)


def mask_to_graph6(n: int, mask: int) -> str:
    """graph6 of the labeled graph whose k-th graph6 bit is bit ``k`` of ``mask``."""
    m = n * (n - 1) // 2
    bits = np.array([(mask >> k) & 1 for k in range(m)], dtype=np.uint8)
    return _bits_to_graph6(n, bits)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise MalformedGraph6("empty graph6 string")
    raw = s.encode("ascii", errors="replace")
    if any(c < 63 or c > 126 for c in raw):
        raise MalformedGraph6(f"graph6 characters must lie in '?'..'~': {s!r}")
    n = raw[0] - 63
    if n == 63:
        raise UnsupportedOrder(f"multi-byte graph6 header (n > {GRAPH6_MAX_ORDER}) not supported")
    m = n * (n - 1) // 2
    nbytes = -(-m // 6)
    if len(raw) - 1 != nbytes:
        raise MalformedGraph6(
            f"graph6 for n={n} needs {nbytes} payload bytes, found {len(raw) - 1}")
    if not m:
        return Graph(n)
    groups = np.frombuffer(raw[1:], dtype=np.uint8) - 63
    bits = np.unpackbits(groups.reshape(-1, 1), axis=1)[:, 2:].ravel()
    if bits[m:].any():
        raise MalformedGraph6(f"non-zero padding bits in {s!r}")
    rows, cols = _column_pairs(n)
    on = np.flatnonzero(bits[:m])
    return Graph(n, frozenset(zip(rows[on].tolist(), cols[on].tolist())))


# ---------------------------------------------------------------- edge lists

def to_edge_list_text(g: Graph) -> str:
    lines = [f"{g.order} {g.size}"]
    lines.extend(f"{u} {v}" for u, v in g.edge_list())
    return "\n".join(lines) + "\n"


def parse_edge_list_text(text: str) -> Iterator[tuple[int, Graph]]:
    """Yield ``(line_number, graph)`` for each "n m" block in ``text``.

    Blank lines between blocks are ignored. Errors carry the 1-based line number.
    """
    lines = text.split("\n")
    i = 0
    while i < len(lines):
        if not lines[i].strip():
            i += 1
            continue
        start = i + 1
        n, m = _ints(lines[i], start, 2)
        edges = []
        for k in range(m):
            lineno = start + 1 + k
            if i + 1 + k >= len(lines):
                raise MalformedEdgeList(f"line {lineno}: expected {m} edge lines, input ended")
            edges.append(tuple(_ints(lines[i + 1 + k], lineno, 2)))
        try:
            g = from_edge_list(n, edges)
        except (LoopEdge, IndexOutOfRange, DuplicateEdge) as exc:
            raise MalformedEdgeList(f"line {start}: {exc}") from exc
        yield start, g
        i += 1 + m


def _ints(line: str, lineno: int, count: int) -> list[int]:
    parts = line.split()
    if len(parts) != count:
        raise MalformedEdgeList(f"line {lineno}: expected {count} integers, got {line!r}")
    try:
        vals = [int(p) for p in parts]
    except ValueError:
        raise MalformedEdgeList(f"line {lineno}: non-integer token in {line!r}") from None
    if any(x < 0 for x in vals):
        raise MalformedEdgeList(f"line {lineno}: negative value in {line!r}")
    return vals


# ---------------------------------------------------------------- canonical form

@lru_cache(maxsize=None)
def _relabel_table(n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.intp)
    rows, cols = _column_pairs(n)
    # bit k of a relabeled graph reads A[perm[rows[k]], perm[cols[k]]]
    m = len(rows)
    weights = np.left_shift(np.int64(1), np.arange(m - 1, -1, -1, dtype=np.int64))
    return perms[:, rows], perms[:, cols], weights


def canonical_form(g: Graph) -> bytes:
    """Lexicographically smallest graph6 adjacency bit string over all relabelings.

    Brute force over all ``n!`` permutations, so limited to ``n <= 8``. Returned
    as the ASCII graph6 text of that minimal relabeling, which makes it both a
    hashable key and a readable representative.
    """
    n = g.order
    if n > CANONICAL_MAX_ORDER:
        raise OrderTooLarge(f"canonical_form is brute force; n <= {CANONICAL_MAX_ORDER}, got {n}")
    if n <= 1:
        return to_graph6(g).encode("ascii")
    a = g.adjacency_matrix()
    pr, pc, weights = _relabel_table(n)
    bits = a[pr, pc]
    keys = bits.astype(np.int64) @ weights
    best = bits[int(np.argmin(keys))].astype(np.uint8)
    return _bits_to_graph6(n, best).encode("ascii")


# ---------------------------------------------------------------- generators

def from_prufer(seq: Sequence[int]) -> Graph:
    """Labeled tree on ``len(seq) + 2`` vertices encoded by a Prüfer sequence."""
    n = len(seq) + 2
    if any(not 0 <= x < n for x in seq):
        raise IndexOutOfRange(f"Prüfer entries must lie in 0..{n - 1}")
    remaining = [1] * n
    for x in seq:
        remaining[x] += 1
    leaves = [v for v in range(n) if remaining[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        remaining[x] -= 1
        if remaining[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return from_edge_list(n, edges)


def random_tree(n: int, rng: random.Random) -> Graph:
    """Uniform labeled tree via a random Prüfer sequence."""
    if n == 1:
        return Graph(1)
    return from_prufer([rng.randrange(n) for _ in range(n - 2)])


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    """Erdős–Rényi G(n, p)."""
    return Graph(n, frozenset(e for e in itertools.combinations(range(n), 2) if rng.random() < p))
