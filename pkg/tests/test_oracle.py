"""The brute-force reference procedures on their own."""

import pytest

from wqokit.oracle import (
    OTYPE_CAP,
    SizeCapExceeded,
    brute_le_k,
    brute_le_t,
    brute_otype,
    factor_search,
    higman_embeds,
)
from wqokit.qo import antichain, chain
from wqokit.sequences import Atom, Pow
from wqokit.trees import Leaf, Node, spine

A2 = antichain(2)
a = Leaf(0)


def test_brute_le_t_examples():
    assert brute_le_t(A2, a, a)
    assert not brute_le_t(A2, Node([a]), a)
    assert brute_le_t(A2, a, Node([Leaf(1), Node([a])]))


def test_brute_le_k_examples():
    assert brute_le_k(A2, a, a)
    assert not brute_le_k(A2, Node([a, a]), Node([a]))
    assert brute_le_t(A2, Node([a, a]), Node([a]))
    t = Node([a, Node([Leaf(1), a])])
    assert brute_le_k(A2, t, t)


def test_tree_cap():
    with pytest.raises(SizeCapExceeded):
        brute_le_t(A2, spine(0, 9), a)


def test_brute_otype_examples():
    assert brute_otype(antichain(2)) == 2
    assert brute_otype(chain(3)) == 3
    with pytest.raises(SizeCapExceeded):
        brute_otype(antichain(OTYPE_CAP + 1))


def test_higman_examples():
    q = antichain(2)
    assert higman_embeds(q, [0], [1, 0])
    assert not higman_embeds(q, [0, 0], [0])
    assert higman_embeds(q, [0, 1], [1, 0, 1])
    assert higman_embeds(chain(2), [0, 0], [1, 1])
    assert higman_embeds(q, [], [])


def test_factor_search_rejects_atoms():
    with pytest.raises(ValueError):
        factor_search(A2, (Atom(0),))


def test_factor_search_finds_deep_factor():
    inner = Pow([Atom(0)])
    s = (Pow([Atom(1), inner]),)
    assert factor_search(A2, s) == [Atom(1), inner]
