"""Leaf-labelled trees: the two orders, the constructions and the text syntax."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wqokit import epsilon as E
from wqokit._text import ParseError
from wqokit.oracle import brute_le_k, brute_le_t
from wqokit.ordinals import OMEGA, Ordinal, parse_ordinal
from wqokit.qo import antichain, chain, named_qo
from wqokit.trees import (
    Leaf,
    Node,
    TreeOrder,
    embed_desc,
    enumerate_trees,
    eps_to_tree,
    format_tree,
    g_type,
    height,
    le_k,
    le_t,
    parse_tree,
    random_tree,
    relabel,
    spine,
    two_plus_omega,
    vertex_count,
)

C2 = chain(2)
A2 = antichain(2)
a = Leaf(0)


@st.composite
def trees(draw, n_labels=2, max_height=3):
    seed = draw(st.integers(0, 2**32 - 1))
    return random_tree(random.Random(seed), n_labels, max_height)


# -- basic shape ----------------------------------------------------------------

def test_height_examples():
    assert height(Leaf(0)) == 0
    assert height(Node([Leaf(0)])) == 1
    assert height(spine(0, 4)) == 3


def test_spine_examples():
    assert spine(5, 1) == Leaf(5)
    assert spine(5, 2) == Node([Leaf(5)])
    for k in range(1, 8):
        assert height(spine(0, k)) == k - 1
    with pytest.raises(ValueError):
        spine(0, 0)


def test_node_needs_children():
    with pytest.raises(ValueError):
        Node([])


# -- the homomorphism order -------------------------------------------------------

def test_le_t_examples():
    assert le_t(A2, a, a)
    assert le_t(A2, a, Node([a]))
    assert not le_t(A2, Node([a]), a)
    assert not le_t(A2, Leaf(0), Leaf(1))
    assert le_t(C2, Leaf(0), Leaf(1))


def test_spine_against_marked_tree():
    # with i > j the spine is too tall and the other side has a 1-leaf
    assert not le_t(C2, spine(0, 4), Node([Leaf(1), spine(0, 2)]))
    assert not le_t(C2, Node([Leaf(1), spine(0, 2)]), spine(0, 4))
    # equal heights collapse: ((0)) maps onto the second child of (1, (0))
    assert le_t(C2, spine(0, 3), Node([Leaf(1), spine(0, 2)]))
    assert brute_le_t(C2, spine(0, 3), Node([Leaf(1), spine(0, 2)]))
    assert not le_t(C2, Node([Leaf(1), spine(0, 2)]), spine(0, 3))


def test_children_order_is_irrelevant():
    s = Node([Leaf(0), Node([Leaf(1)])])
    t = Node([Node([Leaf(1)]), Leaf(0)])
    for order in (le_t, le_k):
        assert order(A2, s, t) and order(A2, t, s)


@pytest.mark.parametrize("q", [chain(1), C2, A2], ids=["1", "chain2", "anti2"])
def test_le_t_is_a_quasi_order(q):
    ts = enumerate_trees(q.n, 4)
    o = TreeOrder(q)
    rel = {(i, j): o.le_t(s, t) for i, s in enumerate(ts) for j, t in enumerate(ts)}
    n = len(ts)
    assert all(rel[i, i] for i in range(n))
    for i in range(n):
        for j in range(n):
            if rel[i, j]:
                assert all(rel[i, k] for k in range(n) if rel[j, k])


# -- the Kruskal order -------------------------------------------------------------

def test_le_k_examples():
    t = Node([a, Node([a])])
    assert le_k(A2, t, t)
    assert not le_k(A2, Node([a, a]), Node([a]))
    assert le_k(A2, Node([a, a]), Node([Node([a, a])]))
    assert brute_le_k(A2, Node([a, a]), Node([Node([a, a])]))


def test_le_k_needs_branching_preserved():
    # a fork cannot be realised by two leaves below a single path
    s = Node([a, a])
    t = Node([Node([a, Node([a])])])
    assert le_k(A2, s, t)
    assert not le_k(A2, s, Node([Node([Node([a])])]))
    assert le_t(A2, s, Node([Node([Node([a])])]))


@settings(max_examples=200)
@given(trees(), trees())
def test_kruskal_implies_homomorphism(s, t):
    if le_k(C2, s, t):
        assert le_t(C2, s, t)


@settings(max_examples=100, deadline=None)
@given(trees(max_height=2), trees(max_height=2))
def test_random_pairs_match_oracles(s, t):
    if vertex_count(s) <= 7 and vertex_count(t) <= 7:
        assert le_t(A2, s, t) == brute_le_t(A2, s, t)
        assert le_k(A2, s, t) == brute_le_k(A2, s, t)


def test_exhaustive_small_agreement():
    q = C2
    ts = enumerate_trees(q.n, 4)
    o = TreeOrder(q)
    for s in ts:
        for t in ts:
            assert o.le_t(s, t) == brute_le_t(q, s, t)
            assert o.le_k(s, t) == brute_le_k(q, s, t)


def test_label_lifting_preserves_order():
    # antichain 2 embeds into antichain 3 by 0 -> 0, 1 -> 2
    ts = enumerate_trees(2, 4)
    big = antichain(3)
    for s in ts:
        for t in ts:
            lifted = le_t(big, relabel(s, [0, 2]), relabel(t, [0, 2]))
            assert lifted == le_t(A2, s, t)


# -- enumeration ---------------------------------------------------------------------

def test_enumeration_counts():
    assert [len(enumerate_trees(1, n)) for n in (4, 5, 6)] == [8, 17, 37]
    assert [len(enumerate_trees(2, n)) for n in (4, 5)] == [22, 59]


def test_enumeration_has_no_duplicates_up_to_child_order():
    ts = enumerate_trees(2, 5)

    def canon(t):
        if isinstance(t, Leaf):
            return ("L", t.label)
        return ("N", tuple(sorted(canon(c) for c in t.children)))

    assert len({canon(t) for t in ts}) == len(ts)
    assert all(vertex_count(t) <= 5 for t in ts)


# -- the descending-pairs construction -------------------------------------------------

def test_embed_desc_examples():
    assert embed_desc(2, 1) == Node([spine(0, 5), Node([Leaf(1), spine(0, 3)])])
    assert embed_desc(1, 0) == Node([spine(0, 4), Node([Leaf(1), spine(0, 2)])])
    for i in range(1, 7):
        for j in range(i):
            assert height(embed_desc(i, j)) == i + 3
    with pytest.raises(ValueError):
        embed_desc(2, 2)


# -- the epsilon-notation map -------------------------------------------------------------

def test_eps_to_tree_examples():
    omega = E.OmegaOrder(2)
    assert eps_to_tree(E.OMEGA, omega) == spine(1, 3)
    assert eps_to_tree(E.ZERO, omega) == Node([Leaf(1), spine(0, 2)])
    assert eps_to_tree(E.Eps(1), omega) == Leaf(3)
    with pytest.raises(E.InvalidTerm):
        eps_to_tree(E.ESeq((E.OMEGA,)), omega)


def test_two_plus_omega_is_a_chain():
    q = two_plus_omega(E.OmegaOrder(2))
    assert q.names == ("0", "1", "e0", "e1")
    assert all(q.le(i, j) == (i <= j) for i in range(4) for j in range(4))


def test_eps_to_tree_reflects_order_small():
    omega = E.OmegaOrder(1)
    terms = E.enumerate_terms(omega, 4)
    q = two_plus_omega(omega)
    o = TreeOrder(q)
    for s in terms:
        for t in terms:
            if o.le_t(eps_to_tree(s, omega), eps_to_tree(t, omega)):
                assert E.cmp(s, t, omega) <= 0


# -- symbolic order types ----------------------------------------------------------------

@pytest.mark.parametrize(
    "arg,text",
    [(0, "0"), (1, "w"), (2, "e_0"), (5, "e_3"), ("w", "e_w"), ("w^w", "e_w^w"), ("w + 3", "e_(w + 3)")],
)
def test_g_type(arg, text):
    a = parse_ordinal(arg) if isinstance(arg, str) else arg
    assert str(g_type(a)) == text


def test_g_type_index():
    assert g_type(5).index == 3
    assert g_type(OMEGA).index == OMEGA
    assert g_type(Ordinal.from_int(2)).kind == "eps"


# -- text syntax ------------------------------------------------------------------------

def test_parse_examples():
    q = named_qo("chain2")
    assert parse_tree("a", q) == Leaf(0)
    assert parse_tree("(a, b)", q) == Node([Leaf(0), Leaf(1)])
    assert parse_tree("0^3", q) == spine(0, 3)
    assert parse_tree("(1, 0^2)", q) == Node([Leaf(1), spine(0, 2)])


@given(trees(n_labels=3))
def test_format_parse_round_trip(t):
    q = antichain(3)
    assert parse_tree(format_tree(t, q), q) == t


@pytest.mark.parametrize("text", ["(a", "()", "(a,)", "c", "a^0", "a b", ""])
def test_parse_errors(text):
    with pytest.raises(ParseError, match="position"):
        parse_tree(text, C2)
