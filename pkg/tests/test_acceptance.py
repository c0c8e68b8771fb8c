"""Exit criteria. Each test is one criterion; the terminal summary prints PASS/FAIL per test."""

import random
import time
from math import comb

import pytest

from irrlab import oracle
from irrlab.degseq import enumerate_tree_sequences, realize_tree
from irrlab.extremal import (
    ExtremalSpec,
    construct_extremal,
    contribution_terms,
    enumerate_extremal_family,
    eq7_value,
    is_star,
    max_total_irregularity,
    optional_pairs,
    pendant_shift,
    star_ascent,
    tree_max,
)
from irrlab.graph import (
    Graph,
    canonical_form,
    complement,
    degree_sequence,
    from_edge_list,
    parse_graph6,
    path,
    random_graph,
    random_tree,
    to_graph6,
)
from irrlab.irregularity import irr, irr_t, irr_t_delta_add, irr_t_delta_remove, irr_t_of_sequence

from conftest import pairwise_irr_t


def closed_form(n):
    return (2 * n**3 - 3 * n**2 - 2 * n + (3 if n % 2 else 0)) // 12


def test_ac01_theorem_exactness():
    start = time.perf_counter()
    for n in range(2, 13):
        best, _ = oracle.bruteforce_max_over_sequences(n)
        assert best == closed_form(n) == max_total_irregularity(n), n
    assert time.perf_counter() - start < 60


def test_ac02_spot_values():
    expected = {4: 6, 5: 14, 6: 26, 7: 44, 8: 68}
    for n, value in expected.items():
        assert max_total_irregularity(n) == value
        assert oracle.bruteforce_max_over_sequences(n)[0] == value


def test_ac03_optional_edges_are_neutral():
    for n in range(4, 17):
        for eg in enumerate_extremal_family(n):
            g, before = eg.graph, irr_t(eg.graph)
            for i, j in optional_pairs(n, 1):
                u, v = eg.ubar(i), eg.ubar(j)
                if g.has_edge(u, v):
                    assert irr_t_delta_remove(g, u, v) == 0
                    assert irr_t(g.without_edge(u, v)) == before
                else:
                    assert irr_t_delta_add(g, u, v) == 0
                    assert irr_t(g.with_edge(u, v)) == before


def test_ac04_family_count_and_membership():
    start = time.perf_counter()
    for n in range(4, 17):
        members = list(enumerate_extremal_family(n))
        assert len(members) == 2 ** (n // 2 - 1)
        assert len({degree_sequence(eg.graph) for eg in members}) == len(members)
        assert all(irr_t(eg.graph) == max_total_irregularity(n) for eg in members)
    assert time.perf_counter() - start < 10


def test_ac05_contribution_terms_consistency():
    for n in range(3, 51):
        for q in range((n - 1) // 2 + 1):
            g = construct_extremal(ExtremalSpec(n, q)).graph
            assert sum(contribution_terms(n, q)) == eq7_value(n, q) == pairwise_irr_t(g.degrees)
        assert eq7_value(n, 0) == eq7_value(n, 1)
        assert all(eq7_value(n, q) < eq7_value(n, 1) for q in range(2, (n - 1) // 2 + 1))


def test_ac06_tree_maximum():
    for n in range(2, 15):
        best, arg = oracle.bruteforce_tree_max(n)
        assert best == (n - 1) * (n - 2) == tree_max(n)
        if n >= 3:
            assert arg == {(n - 1,) + (1,) * (n - 1)}
    rng = random.Random(2012)
    for n in (5, 10, 20, 50, 100):
        for _ in range(100):
            t = random_tree(n, rng)
            if not is_star(t):
                assert irr_t(pendant_shift(t)) >= irr_t(t) + 2
            chain = star_ascent(t)
            assert len(chain) - 1 <= n and is_star(chain[-1])
            assert irr_t(chain[-1]) == tree_max(n)


def test_ac07_figure_one():
    assert irr_t_of_sequence((3, 3, 2, 1, 1, 1, 1)) == 22
    g1 = from_edge_list(7, [(0, 1), (0, 2), (0, 3), (3, 4), (4, 5), (4, 6)])
    g2 = from_edge_list(7, [(0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (4, 6)])
    assert degree_sequence(g1) == degree_sequence(g2) == (3, 3, 2, 1, 1, 1, 1)
    assert (irr(g1), irr(g2)) == (10, 8)
    assert irr_t(g1) == irr_t(g2) == 22


def test_ac08_property_suites():
    rng = random.Random(8)
    for _ in range(1000):
        n = rng.randint(1, 200)
        g = random_graph(n, rng.random(), rng)
        t = irr_t(g)
        assert irr(g) <= t
        assert t == irr_t(complement(g))
        assert t == irr_t_of_sequence(degree_sequence(g))
        if n >= 2:
            u, v = rng.sample(range(n), 2)
            if g.has_edge(u, v):
                assert irr_t_delta_remove(g, u, v) == irr_t(g.without_edge(u, v)) - t
            else:
                assert irr_t_delta_add(g, u, v) == irr_t(g.with_edge(u, v)) - t


def test_ac09_census():
    res = oracle.extremal_census(4)
    assert res.max_value == 6 and res.class_count == 4
    assert sum(res.labeled_counts) < 2 ** comb(4, 2)
    family = {canonical_form(eg.graph) for eg in enumerate_extremal_family(4)}
    classes = {r.encode() for r in res.representatives}
    complements = {canonical_form(complement(parse_graph6(f.decode()))) for f in family}
    assert len(family) == 2 and family <= classes
    assert classes == family | complements and not family & complements
    # the census count differs from the family count of 2^(n/2 - 1) = 2
    assert res.class_count != 2 ** (4 // 2 - 1)
    start = time.perf_counter()
    frozen = {5: 4, 6: 8}
    for n, count in frozen.items():
        r = oracle.extremal_census(n)
        assert r.max_value == max_total_irregularity(n)
        assert r.class_count == count and r.family_subset_confirmed
    assert time.perf_counter() - start < 300


def test_ac10_bound_audit():
    connected, trees = oracle.audit_bounds(7, random_count=1000, random_n_max=100)
    assert connected.violations == [] and connected.instances > 0
    assert trees.violations == [] and trees.instances >= 1000
    p3 = path(3)
    tight = [t for t in oracle.tree_fixtures(random_count=0)
             if t.order == 3 and canonical_form(t) == canonical_form(p3)]
    assert tight and all(oracle.tree_bound_ratio(t) == 1 for t in tight)
    assert trees.max_ratio == 1


def test_ac11_performance():
    rng = random.Random(11)
    seq = sorted((rng.randrange(1_000_000) for _ in range(1_000_000)), reverse=True)
    start = time.perf_counter()
    irr_t_of_sequence(seq)
    assert time.perf_counter() - start < 1.0

    corpus = [to_graph6(random_graph(rng.randint(0, 62), rng.random(), rng)) for _ in range(10_000)]
    start = time.perf_counter()
    for line in corpus:
        assert to_graph6(parse_graph6(line)) == line
    assert time.perf_counter() - start < 2.0
