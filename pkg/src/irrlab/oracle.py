"""Brute-force checks of the closed-form results.

Three independent search spaces are used:

* graphical degree sequences, for the general maximum of ``irr_t`` (the
  measure depends only on the degree sequence, every graphical sequence is
  realisable, and connectivity is not required, so sequence space is an exact
  and much smaller stand-in for graph space);
* tree degree sequences, for the tree maximum;
* every labeled graph on ``n`` vertices, encoded as an integer whose bit ``k``
  is the ``k``-th graph6 bit, for the isomorphism census and the comparison
  bounds. This route works on numpy arrays of masks and never touches
  :class:`~irrlab.graph.Graph` until it reports results.

Every search takes a partition argument and results merge by max / union, so
``threads > 1`` fans partitions out to worker processes.
"""

from __future__ import annotations

import os
import random
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

import numpy as np

from .degseq import enumerate_graphical, enumerate_tree_sequences, realize_tree
from .errors import OrderGuard
from .extremal import enumerate_extremal_family
from .graph import (
    GRAPH6_MAX_ORDER,
    Graph,
    _column_pairs,
    canonical_form,
    complement,
    mask_to_graph6,
    parse_graph6,
    random_tree,
    to_graph6,
)
from .irregularity import irr, irr_t_of_sequence

GUARD_ENV = "IRRLAB_GUARD_OVERRIDE"
SEQUENCE_MAX_ORDER = 14
TREE_MAX_ORDER = 40
CENSUS_MAX_ORDER = 7
CONNECTED_AUDIT_MAX_ORDER = 7
TREE_AUDIT_MAX_ORDER = 9
CHUNK = 1 << 17


def guard(n: int, lo: int, hi: int, what: str, force: bool = False) -> None:
    if n < lo:
        raise OrderGuard(f"{what} needs n >= {lo}, got {n}")
    if n > hi:
        if force or os.environ.get(GUARD_ENV) == "1":
            warnings.warn(f"{what} at n={n} exceeds the desk-scale guard n <= {hi}; this may be slow",
                          RuntimeWarning, stacklevel=3)
            return
        raise OrderGuard(f"{what} guarded to n <= {hi}, got {n} (use force to override)")


def _run(fn: Callable, parts: Sequence, threads: int) -> list:
    if threads <= 1 or len(parts) <= 1:
        return [fn(p) for p in parts]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, parts))


def merge_max(results: Iterable[tuple[int, frozenset]]) -> tuple[int, frozenset]:
    """Associative merge of (max, argmax) pairs."""
    best, arg = -1, frozenset()
    for value, witnesses in results:
        if value > best:
            best, arg = value, frozenset(witnesses)
        elif value == best:
            arg |= witnesses
    return best, arg


# ---------------------------------------------------------------- sequence space

def _max_over_graphical(args: tuple[int, Sequence[int]]) -> tuple[int, frozenset]:
    n, firsts = args
    best, arg = -1, []
    for d in enumerate_graphical(n, firsts):
        v = irr_t_of_sequence(d)
        if v > best:
            best, arg = v, [d]
        elif v == best:
            arg.append(d)
    return best, frozenset(arg)


def bruteforce_max_over_sequences(n: int, first_values: Iterable[int] | None = None,
                                  threads: int = 1, force: bool = False) -> tuple[int, frozenset]:
    """Max of ``irr_t`` over every graphical sequence of order ``n``, with all maximisers.

    ``first_values`` restricts the search to sequences with those leading
    entries; by default every partition ``0..n-1`` is searched.
    """
    guard(n, 2, SEQUENCE_MAX_ORDER, "sequence oracle", force)
    firsts = list(range(n)) if first_values is None else list(first_values)
    parts = [(n, [f]) for f in firsts]
    return merge_max(_run(_max_over_graphical, parts, threads))


def bruteforce_tree_max(n: int, force: bool = False) -> tuple[int, frozenset]:
    guard(n, 2, TREE_MAX_ORDER, "tree oracle", force)
    best, arg = -1, []
    for d in enumerate_tree_sequences(n):
        v = irr_t_of_sequence(d)
        if v > best:
            best, arg = v, [d]
        elif v == best:
            arg.append(d)
    return best, frozenset(arg)


# ---------------------------------------------------------------- labeled graph space

class MaskBatch:
    """Degrees and derived quantities for labeled graphs ``lo <= mask < hi`` on ``n`` vertices."""

    def __init__(self, n: int, lo: int, hi: int):
        self.n = n
        rows, cols = _column_pairs(n)
        self.rows, self.cols = rows, cols
        self.masks = np.arange(lo, hi, dtype=np.int64)
        m = len(rows)
        self.bits = ((self.masks[:, None] >> np.arange(m, dtype=np.int64)) & 1).astype(np.int16)
        incidence = np.zeros((m, n), dtype=np.int16)
        incidence[np.arange(m), rows] = 1
        incidence[np.arange(m), cols] = 1
        self.degrees = self.bits @ incidence

    def irr_t(self) -> np.ndarray:
        d = -np.sort(-self.degrees, axis=1).astype(np.int64)
        coef = np.arange(self.n - 1, -self.n, -2, dtype=np.int64)
        return d @ coef

    def irr(self) -> np.ndarray:
        d = self.degrees.astype(np.int64)
        imbalance = np.abs(d[:, self.rows] - d[:, self.cols])
        return (imbalance * self.bits).sum(axis=1)

    def connected(self) -> np.ndarray:
        n = self.n
        if n <= 1:
            return np.ones(len(self.masks), dtype=bool)
        nbr = np.zeros((n, len(self.masks)), dtype=np.int64)
        for k, (i, j) in enumerate(zip(self.rows, self.cols)):
            b = self.bits[:, k].astype(np.int64)
            nbr[i] |= b << j
            nbr[j] |= b << i
        reach = np.ones(len(self.masks), dtype=np.int64)
        for _ in range(n - 1):
            grown = reach.copy()
            for v in range(n):
                grown |= np.where((reach >> v) & 1 == 1, nbr[v], 0)
            reach = grown
        return reach == (1 << n) - 1


def _chunks(n: int) -> list[tuple[int, int, int]]:
    total = 1 << (n * (n - 1) // 2)
    return [(n, lo, min(lo + CHUNK, total)) for lo in range(0, total, CHUNK)]


def _max_over_masks(part: tuple[int, int, int]) -> tuple[int, frozenset]:
    batch = MaskBatch(*part)
    values = batch.irr_t()
    best = int(values.max())
    return best, frozenset(batch.masks[values == best].tolist())


@dataclass
class CensusResult:
    n: int
    max_value: int
    class_count: int
    representatives: list[str]
    family_subset_confirmed: bool
    labeled_counts: list[int] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "max_value": self.max_value,
            "class_count": self.class_count,
            "representatives": list(self.representatives),
            "family_subset_confirmed": self.family_subset_confirmed,
            "labeled_counts": list(self.labeled_counts),
        }


def extremal_census(n: int, threads: int = 1, force: bool = False) -> CensusResult:
    """Group every labeled graph attaining the maximum ``irr_t`` into isomorphism classes.

    Representatives are canonical graph6 strings, sorted; ``labeled_counts``
    gives the number of labeled graphs in each class, aligned with them.
    """
    guard(n, 2, CENSUS_MAX_ORDER, "census", force)
    best, masks = merge_max(_run(_max_over_masks, _chunks(n), threads))
    classes: dict[bytes, int] = {}
    for mask in sorted(masks):
        key = canonical_form(parse_graph6(mask_to_graph6(n, mask)))
        classes[key] = classes.get(key, 0) + 1
    reps = sorted(classes)
    if n >= 4:
        family = {canonical_form(eg.graph) for eg in enumerate_extremal_family(n)}
        confirmed = family <= classes.keys()
    else:
        # no family below n = 4; nothing to confirm
        confirmed = True
    return CensusResult(
        n=n,
        max_value=best,
        class_count=len(reps),
        representatives=[r.decode("ascii") for r in reps],
        family_subset_confirmed=confirmed,
        labeled_counts=[classes[r] for r in reps],
    )


def census_complement_closed(result: CensusResult) -> bool:
    reps = {r.encode("ascii") for r in result.representatives}
    return all(canonical_form(complement(parse_graph6(r.decode("ascii")))) in reps for r in reps)


# ---------------------------------------------------------------- comparison bounds

@dataclass
class AuditResult:
    bound_id: str
    instances: int = 0
    violations: list[str] = field(default_factory=list)
    max_ratio: Fraction = Fraction(0)

    def as_dict(self) -> dict:
        return {
            "bound_id": self.bound_id,
            "instances": self.instances,
            "violations": list(self.violations),
            "max_ratio": str(self.max_ratio),
        }


def _audit_connected_part(part: tuple[int, int, int]) -> tuple[int, list[str], Fraction]:
    n = part[0]
    batch = MaskBatch(*part)
    keep = batch.connected()
    if not keep.any():
        return 0, [], Fraction(0)
    it = batch.irr_t()[keep]
    ir = batch.irr()[keep]
    masks = batch.masks[keep]
    bad = 4 * it > n * n * ir
    violations = [mask_to_graph6(n, int(x)) for x in masks[bad]]
    ratio = Fraction(0)
    pos = ir > 0
    if pos.any():
        approx = np.where(pos, 4 * it / np.maximum(n * n * ir, 1), 0.0)
        k = int(np.argmax(approx))
        ratio = Fraction(4 * int(it[k]), n * n * int(ir[k]))
    return int(keep.sum()), violations, ratio


def audit_connected(n_max: int = CONNECTED_AUDIT_MAX_ORDER, threads: int = 1,
                    force: bool = False) -> AuditResult:
    """``irr_t <= n^2 irr / 4`` on every connected labeled graph with ``2 <= n <= n_max``."""
    guard(n_max, 2, CONNECTED_AUDIT_MAX_ORDER, "connected-graph audit", force)
    res = AuditResult("connected_quarter_n_squared")
    parts = [c for n in range(2, n_max + 1) for c in _chunks(n)]
    for count, violations, ratio in _run(_audit_connected_part, parts, threads):
        res.instances += count
        res.violations.extend(violations)
        res.max_ratio = max(res.max_ratio, ratio)
    return res


def _describe(g: Graph) -> str:
    if g.order <= GRAPH6_MAX_ORDER:
        return to_graph6(g)
    return f"{g.order}:" + ",".join(f"{u}-{v}" for u, v in g.edge_list())


def tree_bound_ratio(t: Graph) -> Fraction | None:
    """``irr_t / ((n - 2) irr)``, 0 when both sides vanish, ``None`` for a violation."""
    n = t.order
    lhs = irr_t_of_sequence(sorted(t.degrees, reverse=True))
    rhs = (n - 2) * irr(t)
    if lhs > rhs:
        return None
    return Fraction(lhs, rhs) if rhs else Fraction(0)


def tree_fixtures(n_max: int = TREE_AUDIT_MAX_ORDER, random_count: int = 1000,
                  random_n_max: int = 100, seed: int = 0) -> list[Graph]:
    """Caterpillar realisations of every tree sequence up to ``n_max`` plus random Prüfer trees."""
    trees = [realize_tree(d) for n in range(2, n_max + 1) for d in enumerate_tree_sequences(n)]
    rng = random.Random(seed)
    trees.extend(random_tree(rng.randint(3, random_n_max), rng) for _ in range(random_count))
    return trees


def audit_trees(n_max: int = TREE_AUDIT_MAX_ORDER, random_count: int = 1000,
                random_n_max: int = 100, seed: int = 0, force: bool = False) -> AuditResult:
    """``irr_t <= (n - 2) irr`` on the tree fixtures."""
    guard(n_max, 2, TREE_AUDIT_MAX_ORDER, "tree audit", force)
    res = AuditResult("tree_n_minus_2")
    for t in tree_fixtures(n_max, random_count, random_n_max, seed):
        res.instances += 1
        ratio = tree_bound_ratio(t)
        if ratio is None:
            res.violations.append(_describe(t))
        else:
            res.max_ratio = max(res.max_ratio, ratio)
    return res


def audit_bounds(n_max: int = CONNECTED_AUDIT_MAX_ORDER, tree_n_max: int = TREE_AUDIT_MAX_ORDER,
                 random_count: int = 1000, random_n_max: int = 100, seed: int = 0,
                 threads: int = 1, force: bool = False) -> list[AuditResult]:
    return [
        audit_connected(n_max, threads=threads, force=force),
        audit_trees(tree_n_max, random_count, random_n_max, seed, force=force),
    ]
