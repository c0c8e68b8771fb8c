"""Graphs of maximum total irregularity and the tree maximum.

Labeling convention for the extremal construction on ``n`` vertices with ``q``
universal vertices: vertices ``0..q-1`` are universal, and the non-universal
vertex with 1-based rank ``i`` (ranked by non-increasing degree) is vertex
``q - 1 + i``. Between two non-universal vertices of ranks ``i < j`` the edge
is forced when ``i + j < n - 2q + 1``, forbidden when ``i + j > n - 2q + 1``,
and optional on the boundary ``i + j == n - 2q + 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .errors import AlreadyStar, InvalidQ, InvalidSpec, NotATree, OrderTooSmall, OverflowGuard
from .graph import Graph, from_edge_list, is_tree

MAX_CLOSED_FORM_ORDER = 2_000_000


def _guard(n: int) -> None:
    if n > MAX_CLOSED_FORM_ORDER:
        raise OverflowGuard(f"closed forms guarded to n <= {MAX_CLOSED_FORM_ORDER}, got {n}")


def _check_q(n: int, q: int) -> None:
    if n < 1 or not 0 <= q <= (n - 1) // 2:
        raise InvalidQ(f"need 0 <= q <= floor((n-1)/2); got n={n}, q={q}")


def max_total_irregularity(n: int) -> int:
    if n < 1:
        raise InvalidSpec(f"order must be positive, got {n}")
    _guard(n)
    num = 2 * n**3 - 3 * n**2 - 2 * n + (3 if n % 2 else 0)
    assert num % 12 == 0
    return num // 12


def eq7_value(n: int, q: int) -> int:
    """Total irregularity of the extremal construction with ``q`` universal vertices."""
    _check_q(n, q)
    _guard(n)
    num = 2 * n**3 - 3 * n**2 - 2 * n - 4 * q**3 + 4 * q + (3 if n % 2 else 0)
    assert num % 12 == 0
    return num // 12


def _ceil_half(x: int) -> int:
    return -(-x // 2)


def contribution_terms(n: int, q: int) -> tuple[int, int, int, int]:
    """Closed-form class-pair contributions (U-N, U-Nbar, N-Nbar, N-N).

    U are the ``q`` universal vertices, N the ``n - 2q - 1`` non-universal
    vertices adjacent to the top-ranked one (itself included), Nbar the ``q + 1``
    remaining vertices of degree ``q``. Pairs inside U or inside Nbar contribute
    nothing. When ``n = 2q + 1`` the class N is empty and the top-ranked vertex
    is one of the degree-``q`` vertices.
    """
    _check_q(n, q)
    _guard(n)
    s = n - 2 * q - 1
    c = _ceil_half(s)
    u_n = q * ((n - 2) * s + 2 * c)
    u_nbar = q * (q + 1) * (n - 1 - q)
    n_nbar = (q + 1) * ((n - 2 * q) * s - 2 * c)
    n_n = (n - 2 * q) * s * (s - 1)
    assert u_n % 2 == 0 and n_nbar % 2 == 0 and n_n % 6 == 0
    return u_n // 2, u_nbar, n_nbar // 2, n_n // 6 - (s - c) * c


def optional_pairs(n: int, q: int) -> list[tuple[int, int]]:
    """Rank pairs ``(i, j)``, ``i < j <= n - q``, on the boundary ``i + j = n - 2q + 1``."""
    _check_q(n, q)
    t = n - 2 * q + 1
    return [(i, t - i) for i in range(1, n - q + 1) if i < t - i <= n - q]


@dataclass(frozen=True)
class ExtremalSpec:
    n: int
    q: int = 1
    optional_mask: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        try:
            allowed = set(optional_pairs(self.n, self.q))
        except InvalidQ as exc:
            raise InvalidSpec(str(exc)) from exc
        extra = set(self.optional_mask) - allowed
        if extra:
            raise InvalidSpec(f"mask pairs {sorted(extra)} are not optional for n={self.n}, q={self.q}")

    @classmethod
    def from_bits(cls, n: int, q: int, bits: int) -> ExtremalSpec:
        """Decode a bitset over ``optional_pairs(n, q)``; bit k selects the k-th pair."""
        try:
            pairs = optional_pairs(n, q)
        except InvalidQ as exc:
            raise InvalidSpec(str(exc)) from exc
        if bits < 0 or bits >> len(pairs):
            raise InvalidSpec(f"mask {bits:#x} has bits beyond the {len(pairs)} optional pairs")
        return cls(n, q, frozenset(p for k, p in enumerate(pairs) if bits >> k & 1))

    @property
    def bits(self) -> int:
        pairs = optional_pairs(self.n, self.q)
        return sum(1 << k for k, p in enumerate(pairs) if p in self.optional_mask)


@dataclass(frozen=True)
class ExtremalGraph:
    spec: ExtremalSpec
    graph: Graph

    def universal(self, k: int) -> int:
        """Vertex of the k-th universal vertex (1-based)."""
        return k - 1

    def ubar(self, i: int) -> int:
        """Vertex of the non-universal vertex of rank ``i`` (1-based)."""
        return self.spec.q - 1 + i

    @property
    def labeling(self) -> dict[str, int]:
        q, n = self.spec.q, self.spec.n
        lab = {f"u{k}": self.universal(k) for k in range(1, q + 1)}
        lab.update({f"ubar{i}": self.ubar(i) for i in range(1, n - q + 1)})
        return lab

    def non_neighbors_of_top(self) -> list[int]:
        """Non-universal vertices not adjacent to the top-ranked one."""
        top = self.ubar(1)
        nbrs = set(self.graph.neighbors(top))
        return [v for v in range(self.spec.q, self.spec.n) if v != top and v not in nbrs]


def construct_extremal(spec: ExtremalSpec) -> ExtremalGraph:
    n, q = spec.n, spec.q
    t = n - 2 * q + 1
    edges = [(u, v) for u in range(q) for v in range(u + 1, n)]
    for i in range(1, n - q + 1):
        for j in range(i + 1, n - q + 1):
            if i + j < t or (i + j == t and (i, j) in spec.optional_mask):
                edges.append((q - 1 + i, q - 1 + j))
    return ExtremalGraph(spec, from_edge_list(n, edges))


def enumerate_extremal_family(n: int) -> Iterator[ExtremalGraph]:
    """All ``2**(n//2 - 1)`` members with one universal vertex, by ascending mask bits."""
    if n < 4:
        raise OrderTooSmall(f"the extremal family is defined for n >= 4, got {n}")
    k = len(optional_pairs(n, 1))
    for bits in range(1 << k):
        yield construct_extremal(ExtremalSpec.from_bits(n, 1, bits))


# ---------------------------------------------------------------- trees

def star(n: int) -> Graph:
    if n < 1:
        raise InvalidSpec(f"star needs n >= 1, got {n}")
    return from_edge_list(n, [(0, v) for v in range(1, n)])


def tree_max(n: int) -> int:
    if n < 1:
        raise InvalidSpec(f"tree order must be positive, got {n}")
    return (n - 1) * (n - 2)


def is_star(t: Graph) -> bool:
    return is_tree(t) and (t.order <= 2 or max(t.degrees) == t.order - 1)


def pendant_shift(t: Graph) -> Graph:
    """Move one pendant vertex onto a maximum-degree vertex.

    ``u`` is the lowest-index vertex of maximum degree, ``v`` the lowest-index
    pendant vertex not adjacent to ``u``, ``w`` its neighbor. Returns
    ``t - vw + uv``.
    """
    if not is_tree(t):
        raise NotATree("pendant_shift needs a tree")
    d = t.degrees
    u = d.index(max(d))
    for v in range(t.order):
        if v != u and d[v] == 1 and not t.has_edge(u, v):
            w = t.neighbors(v)[0]
            return t.without_edge(v, w).with_edge(u, v)
    raise AlreadyStar("tree is a star; no pendant vertex can be moved")


def star_ascent(t: Graph) -> list[Graph]:
    """Apply :func:`pendant_shift` until a star is reached; returns the whole chain."""
    if not is_tree(t):
        raise NotATree("star_ascent needs a tree")
    chain = [t]
    while True:
        try:
            chain.append(pendant_shift(chain[-1]))
        except AlreadyStar:
            return chain
        if len(chain) > t.order:
            raise RuntimeError("star ascent failed to terminate within n steps")


def check_structure(eg: ExtremalGraph) -> list[str]:
    """Audit the forced/forbidden edge rules and the size of Nbar; returns problems found."""
    n, q = eg.spec.n, eg.spec.q
    g = eg.graph
    t = n - 2 * q + 1
    problems = []
    for k in range(q):
        if g.degrees[k] != n - 1:
            problems.append(f"vertex {k} should be universal")
    for i in range(1, n - q + 1):
        for j in range(i + 1, n - q + 1):
            present = g.has_edge(eg.ubar(i), eg.ubar(j))
            if i + j < t and not present:
                problems.append(f"forced pair ({i},{j}) missing")
            elif i + j > t and present:
                problems.append(f"forbidden pair ({i},{j}) present")
    if len(eg.non_neighbors_of_top()) not in (q, q + 1):
        problems.append(f"|Nbar| = {len(eg.non_neighbors_of_top())} not in {{q, q+1}}")
    return problems
