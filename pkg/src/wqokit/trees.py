"""Finite leaf-labelled trees under tree homomorphism and homeomorphic embedding.

Labels are element indices of an ambient :class:`~wqokit.qo.QO`.  Child order is
never significant: both orders are decided by for-all/exists or by matching
over the children, so ``(a, b)`` and ``(b, a)`` behave identically even though
they are distinct values.

Expression syntax: a leaf is a label, a node is ``(T1, T2, ...)``, and
``q^k`` is the non-branching tree with a single ``q`` leaf at depth ``k - 1``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator, Sequence, Union

from . import epsilon as E
from ._text import Scanner
from .matching import has_saturating_matching
from .ordinals import Ordinal, minus2_plus
from .qo import QO, chain

__all__ = [
    "Leaf",
    "Node",
    "Tree",
    "TreeOrder",
    "height",
    "vertex_count",
    "spine",
    "le_t",
    "le_k",
    "embed_desc",
    "two_plus_omega",
    "eps_to_tree",
    "SymbolicOrdinal",
    "g_type",
    "labels",
    "relabel",
    "enumerate_trees",
    "random_tree",
    "parse_tree",
    "format_tree",
]


class Leaf:
    __slots__ = ("label", "_hash")

    def __init__(self, label: int):
        self.label = label
        self._hash = hash(("leaf", label))

    def __eq__(self, other):
        return self is other or (isinstance(other, Leaf) and self.label == other.label)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Leaf({self.label})"


class Node:
    __slots__ = ("children", "height", "_hash")

    def __init__(self, children: Sequence["Tree"]):
        children = tuple(children)
        if not children:
            raise ValueError("a node needs at least one child")
        self.children = children
        self.height = 1 + max(height(c) for c in children)
        self._hash = hash(children)

    def __eq__(self, other):
        return self is other or (
            isinstance(other, Node) and self._hash == other._hash and self.children == other.children
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Node({list(self.children)!r})"


Tree = Union[Leaf, Node]


def height(t: Tree) -> int:
    return 0 if isinstance(t, Leaf) else t.height


def vertex_count(t: Tree) -> int:
    if isinstance(t, Leaf):
        return 1
    return 1 + sum(vertex_count(c) for c in t.children)


def labels(t: Tree) -> set[int]:
    if isinstance(t, Leaf):
        return {t.label}
    return set().union(*(labels(c) for c in t.children))


def relabel(t: Tree, mapping: Sequence[int]) -> Tree:
    if isinstance(t, Leaf):
        return Leaf(mapping[t.label])
    return Node([relabel(c, mapping) for c in t.children])


def spine(q: int, k: int) -> Tree:
    """The tree with one leaf ``q`` at depth ``k - 1`` and no branching."""
    if k < 1:
        raise ValueError("spine length must be at least 1")
    t: Tree = Leaf(q)
    for _ in range(k - 1):
        t = Node([t])
    return t


class TreeOrder:
    """Decides both tree orders over a fixed label order, caching subtree pairs.

    Reuse one instance across many comparisons over the same labels to share
    the cache; the module-level :func:`le_t` and :func:`le_k` use a fresh one.
    """

    def __init__(self, q: QO):
        self.q = q
        self._t: dict[tuple[Tree, Tree], bool] = {}
        self._k: dict[tuple[Tree, Tree], bool] = {}

    def le_t(self, s: Tree, t: Tree) -> bool:
        key = (s, t)
        hit = self._t.get(key)
        if hit is not None:
            return hit
        if isinstance(s, Leaf):
            if isinstance(t, Leaf):
                res = self.q.le(s.label, t.label)
            else:
                res = any(self.le_t(s, c) for c in t.children)
        elif isinstance(t, Leaf) or s.height > t.height:
            res = False
        else:
            res = all(any(self.le_t(a, b) for b in t.children) for a in s.children)
        self._t[key] = res
        return res

    def le_k(self, s: Tree, t: Tree) -> bool:
        key = (s, t)
        hit = self._k.get(key)
        if hit is not None:
            return hit
        if isinstance(s, Leaf):
            if isinstance(t, Leaf):
                res = self.q.le(s.label, t.label)
            else:
                res = any(self.le_k(s, c) for c in t.children)
        elif isinstance(t, Leaf) or s.height > t.height:
            res = False
        else:
            res = any(self.le_k(s, c) for c in t.children)
            if not res:
                sc, tc = s.children, t.children
                res = has_saturating_matching(
                    len(sc), len(tc), lambda i, j: self.le_k(sc[i], tc[j])
                )
        self._k[key] = res
        return res


def le_t(q: QO, s: Tree, t: Tree) -> bool:
    """Is there a tree homomorphism from ``s`` to ``t`` respecting leaf labels?"""
    return TreeOrder(q).le_t(s, t)


def le_k(q: QO, s: Tree, t: Tree) -> bool:
    """Is ``s`` homeomorphically (inf-preservingly) embeddable in ``t``?"""
    return TreeOrder(q).le_k(s, t)


def embed_desc(i: int, j: int) -> Tree:
    """Image of ``(i, j)``, ``j < i``, under the embedding of the descending pairs
    into trees over the chain ``0 < 1``."""
    if not 0 <= j < i:
        raise ValueError(f"need 0 <= j < i, got ({i}, {j})")
    return Node([spine(0, i + 3), Node([Leaf(1), spine(0, j + 2)])])


def two_plus_omega(omega: E.OmegaOrder) -> QO:
    """The chain ``0 < 1 < e0 < e1 < ...`` labelling the images of :func:`eps_to_tree`."""
    return chain(2 + omega.size, ["0", "1"] + [f"e{a}" for a in range(omega.size)])


def eps_to_tree(t: E.EpsilonTerm, omega: E.OmegaOrder) -> Tree:
    """Order-reflecting map from epsilon-notation terms to trees over ``two_plus_omega``."""
    E.check(t, omega)
    return _eps_tree(t)


def _eps_tree(t: E.EpsilonTerm) -> Tree:
    if isinstance(t, E.Omega):
        return spine(1, 3)
    if isinstance(t, E.Eps):
        return Leaf(2 + t.index)
    if E.is_finite(t):
        return Node([Leaf(1), spine(0, E.value(t) + 2)])
    infinite = [p for p in t.parts if not E.is_finite(p)]
    finite = t.parts[len(infinite):]
    children = []
    m = 0
    for p in infinite:
        image = _eps_tree(p)
        m += height(image) + 2
        children.append(Node([image, spine(0, m)]))
    if finite:
        tail = E.ESeq(tuple(finite))
        n = E.value(tail)
        # offset continues the running sum over the infinite summands
        children.append(Node([_eps_tree(tail), spine(0, m + n + 4)]))
    return Node(children)


@dataclass(frozen=True)
class SymbolicOrdinal:
    """``0``, ``w``, or ``e_index`` (an epsilon number with index below epsilon_0)."""

    kind: str
    index: Ordinal | None = None

    def __str__(self):
        if self.kind == "zero":
            return "0"
        if self.kind == "omega":
            return "w"
        text = str(self.index)
        return f"e_({text})" if " " in text else f"e_{text}"


def g_type(a: Ordinal | int) -> SymbolicOrdinal:
    """Maximal order type of the trees over a wqo of maximal order type ``a``.

    For ``a >= 2`` this is the fixed-point-free epsilon function at ``-2 + a``.
    Below epsilon_0 there is no fixed point of ``x -> e_x``, so it is plain
    ``e_(-2 + a)``.
    """
    if isinstance(a, int):
        a = Ordinal.from_int(a)
    if a.is_zero:
        return SymbolicOrdinal("zero")
    if a == 1:
        return SymbolicOrdinal("omega")
    return SymbolicOrdinal("eps", minus2_plus(a))


def enumerate_trees(n_labels: int, max_vertices: int) -> list[Tree]:
    """One representative per tree up to reordering of children, smallest first."""
    trees: list[Tree] = []
    sizes: list[int] = []
    start: dict[int, int] = {}
    for n in range(1, max_vertices + 1):
        start[n] = len(trees)
        if n == 1:
            fresh = [Leaf(q) for q in range(n_labels)]
        else:
            fresh = [Node([trees[i] for i in ids]) for ids in _multisets(sizes, n - 1, 0)]
        trees.extend(fresh)
        sizes.extend([n] * len(fresh))
    return trees


def _multisets(sizes: list[int], total: int, lo: int) -> Iterator[list[int]]:
    if total == 0:
        yield []
        return
    for i in range(lo, len(sizes)):
        if sizes[i] > total:
            break
        for rest in _multisets(sizes, total - sizes[i], i):
            yield [i] + rest


def random_tree(rng: random.Random, n_labels: int, max_height: int, max_children: int = 3) -> Tree:
    if max_height == 0 or rng.random() < 0.3:
        return Leaf(rng.randrange(n_labels))
    k = rng.randint(1, max_children)
    return Node([random_tree(rng, n_labels, max_height - 1, max_children) for _ in range(k)])


def parse_tree(text: str, q: QO) -> Tree:
    sc = Scanner(text)
    t = _parse(sc, q)
    sc.done()
    return t


def _parse(sc: Scanner, q: QO) -> Tree:
    if sc.at("("):
        sc.next()
        children = [_parse(sc, q)]
        while sc.at(","):
            sc.next()
            children.append(_parse(sc, q))
        sc.expect(")")
        return Node(children)
    tok = sc.peek()
    if tok is None or tok[0] not in ("name", "num"):
        sc.fail("expected a label or '('")
    try:
        label = q.resolve(tok[1])
    except KeyError:
        sc.fail(f"unknown label {tok[1]!r}")
    sc.next()
    if sc.at("^"):
        sc.next()
        tok = sc.peek()
        if tok is None or tok[0] != "num" or int(tok[1]) < 1:
            sc.fail("expected a positive spine length")
        sc.next()
        return spine(label, int(tok[1]))
    return Leaf(label)


def format_tree(t: Tree, q: QO | None = None) -> str:
    if isinstance(t, Leaf):
        return q.names[t.label] if q is not None else str(t.label)
    return "(" + ", ".join(format_tree(c, q) for c in t.children) + ")"


