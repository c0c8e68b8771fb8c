import itertools
import random

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from irrlab.errors import (
    DuplicateEdge,
    IndexOutOfRange,
    LoopEdge,
    MalformedEdgeList,
    MalformedGraph6,
    OrderTooLarge,
    UnsupportedOrder,
)
from irrlab.graph import (
    Graph,
    canonical_form,
    complement,
    complete,
    degree_sequence,
    disjoint_union,
    from_edge_list,
    from_prufer,
    is_connected,
    is_tree,
    parse_edge_list_text,
    parse_graph6,
    path,
    random_graph,
    random_tree,
    to_edge_list_text,
    to_graph6,
)

from conftest import graphs

STAR4 = from_edge_list(4, [(0, 1), (0, 2), (0, 3)])


def nx_graph6(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.order))
    h.add_edges_from(g.edges)
    return nx.to_graph6_bytes(h, header=False).decode().strip()


def test_from_edge_list_star():
    assert STAR4.degrees == (3, 1, 1, 1)
    assert STAR4.size == 3


def test_empty_graph():
    g = from_edge_list(3, [])
    assert g.size == 0 and g.degrees == (0, 0, 0)


@pytest.mark.parametrize("n, edges, exc", [
    (2, [(0, 0)], LoopEdge),
    (3, [(0, 3)], IndexOutOfRange),
    (3, [(0, 1), (1, 0)], DuplicateEdge),
])
def test_from_edge_list_errors(n, edges, exc):
    with pytest.raises(exc):
        from_edge_list(n, edges)


@pytest.mark.parametrize("text, g", [
    ("C~", complete(4)),
    ("Cs", STAR4),
    ("@", Graph(1)),
    ("?", Graph(0)),
])
def test_graph6_known_values(text, g):
    assert to_graph6(g) == text
    assert parse_graph6(text) == g
    assert nx_graph6(g) == text


def test_graph6_star_bits_by_hand():
    # column-major upper triangle (0,1),(0,2),(1,2),(0,3),(1,3),(2,3) -> 110100
    assert to_graph6(STAR4) == "C" + chr(63 + 0b110100)


def test_graph6_header_accepted():
    assert parse_graph6(">>graph6<<Cs\n") == STAR4


@pytest.mark.parametrize("bad", ["", "C", "C~~", "C!", "B@"])
def test_graph6_malformed(bad):
    # "B@" sets a padding bit (n=3 has 3 data bits in a 6-bit group)
    with pytest.raises(MalformedGraph6):
        parse_graph6(bad)


def test_graph6_order_limits():
    with pytest.raises(UnsupportedOrder):
        to_graph6(Graph(63))
    with pytest.raises(UnsupportedOrder):
        parse_graph6("~?@?" + "?" * 10)
    g = random_graph(62, 0.3, random.Random(1))
    assert parse_graph6(to_graph6(g)) == g


@given(graphs(max_order=20))
def test_graph6_round_trip_matches_reference(g):
    text = to_graph6(g)
    assert text == nx_graph6(g)
    assert parse_graph6(text) == g


@given(st.integers(0, 62), st.integers(0, 2**32))
def test_graph6_round_trip_all_orders(n, seed):
    g = random_graph(n, 0.5, random.Random(seed))
    assert parse_graph6(to_graph6(g)) == g


def test_complement_examples():
    assert complement(complete(4)) == Graph(4)
    # center 0 becomes isolated, leaves 1..3 form a triangle
    assert complement(STAR4) == from_edge_list(4, [(1, 2), (1, 3), (2, 3)])
    k3_k1 = disjoint_union(complete(3), Graph(1))
    assert canonical_form(complement(STAR4)) == canonical_form(k3_k1)


@given(graphs())
def test_complement_involution_and_degrees(g):
    c = complement(g)
    assert complement(c) == g
    assert c.order == g.order
    assert all(dc == g.order - 1 - d for d, dc in zip(g.degrees, c.degrees))


def test_degree_sequence_examples(paw):
    assert degree_sequence(paw) == (3, 2, 2, 1)
    assert degree_sequence(from_edge_list(5, [(0, i) for i in range(1, 5)])) == (4, 1, 1, 1, 1)
    assert degree_sequence(Graph(3)) == (0, 0, 0)


@given(graphs())
def test_handshake(g):
    assert sum(degree_sequence(g)) == 2 * g.size


def test_is_connected():
    assert is_connected(path(4))
    assert not is_connected(disjoint_union(complete(3), Graph(1)))
    assert is_connected(Graph(0))
    assert is_connected(Graph(1))


@given(graphs(max_order=10))
def test_is_connected_matches_networkx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.order))
    h.add_edges_from(g.edges)
    expected = True if g.order == 0 else nx.is_connected(h)
    assert is_connected(g) == expected


def test_canonical_form_examples(paw):
    assert canonical_form(STAR4) != canonical_form(paw)
    for perm in itertools.permutations(range(4)):
        assert canonical_form(paw.relabel(perm)) == canonical_form(paw)
    with pytest.raises(OrderTooLarge):
        canonical_form(Graph(9))


@given(graphs(max_order=7), st.randoms(use_true_random=False))
def test_canonical_form_relabel_invariant(g, rng):
    perm = list(range(g.order))
    rng.shuffle(perm)
    assert canonical_form(g.relabel(perm)) == canonical_form(g)
    assert canonical_form(complement(complement(g))) == canonical_form(g)


@given(graphs(max_order=6), graphs(max_order=6))
def test_canonical_form_decides_isomorphism(g, h):
    def nxg(x):
        y = nx.Graph()
        y.add_nodes_from(range(x.order))
        y.add_edges_from(x.edges)
        return y
    same = g.order == h.order and nx.is_isomorphic(nxg(g), nxg(h))
    assert (canonical_form(g) == canonical_form(h)) == same


def test_canonical_form_is_a_relabeling(paw):
    assert parse_graph6(canonical_form(paw).decode()).size == paw.size


def test_edge_list_text_round_trip(paw):
    text = to_edge_list_text(paw) + "\n" + to_edge_list_text(STAR4)
    got = list(parse_edge_list_text(text))
    assert [g for _, g in got] == [paw, STAR4]
    assert got[0][0] == 1 and got[1][0] == 7


@pytest.mark.parametrize("text, lineno", [
    ("3 2\n0 1\n", "line 3"),
    ("3 1\n0 x\n", "line 2"),
    ("3 1\n0 3\n", "line 1"),
    ("3\n", "line 1"),
])
def test_edge_list_errors_carry_line_numbers(text, lineno):
    with pytest.raises(MalformedEdgeList, match=lineno):
        list(parse_edge_list_text(text))


def test_prufer_trees():
    assert from_prufer([0, 0]) == STAR4
    rng = random.Random(7)
    for n in (1, 2, 3, 10, 100):
        t = random_tree(n, rng)
        assert is_tree(t) and t.order == n


def test_graph_is_hashable_value(paw):
    assert paw == Graph(4, frozenset(paw.edges))
    assert len({paw, paw.relabel([0, 1, 2, 3])}) == 1
