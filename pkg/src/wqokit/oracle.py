"""Brute-force reference procedures, used only to validate the fast ones.

Everything here searches the definitions directly (explicit vertex maps,
permutations, greedy subsequence matching) and refuses inputs above a hard
size cap instead of running for hours.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .qo import QO
from .sequences import Atom, Indec, Pow, SeqOrder, _single
from .trees import Leaf, Tree

__all__ = [
    "SizeCapExceeded",
    "TREE_CAP",
    "OTYPE_CAP",
    "brute_le_t",
    "brute_le_k",
    "brute_otype",
    "higman_embeds",
    "factor_search",
]

TREE_CAP = 8
OTYPE_CAP = 7


class SizeCapExceeded(ValueError):
    pass


@dataclass
class _Flat:
    """A tree as explicit vertex arrays in preorder."""

    parent: list[int]
    label: list[int | None]  # None for internal vertices
    ancestors: list[frozenset[int]]  # strict ancestors
    descendants: list[list[int]]  # strict descendants


def _flatten(t: Tree) -> _Flat:
    parent: list[int] = []
    label: list[int | None] = []
    anc: list[frozenset[int]] = []

    def walk(node: Tree, p: int, above: frozenset[int]) -> None:
        me = len(parent)
        parent.append(p)
        anc.append(above)
        if isinstance(node, Leaf):
            label.append(node.label)
            return
        label.append(None)
        for c in node.children:
            walk(c, me, above | {me})

    walk(t, -1, frozenset())
    desc: list[list[int]] = [[] for _ in parent]
    for v, a in enumerate(anc):
        for u in a:
            desc[u].append(v)
    return _Flat(parent, label, anc, desc)


def _meet(f: _Flat, u: int, v: int) -> int:
    if u == v:
        return u
    common = (f.ancestors[u] | {u}) & (f.ancestors[v] | {v})
    return max(common, key=lambda w: len(f.ancestors[w]))


def _search(q: QO, s: Tree, t: Tree, inf_preserving: bool) -> bool:
    fs, ft = _flatten(s), _flatten(t)
    if len(fs.parent) > TREE_CAP or len(ft.parent) > TREE_CAP:
        raise SizeCapExceeded(f"trees above {TREE_CAP} vertices")
    n = len(fs.parent)
    image = [-1] * n

    def candidates(v: int) -> list[int]:
        pool = range(len(ft.parent)) if fs.parent[v] < 0 else ft.descendants[image[fs.parent[v]]]
        if fs.label[v] is None:
            return list(pool)
        return [w for w in pool if ft.label[w] is not None and q.le(fs.label[v], ft.label[w])]

    def consistent(v: int) -> bool:
        if not inf_preserving:
            return True
        for u in range(v):
            if image[_meet(fs, u, v)] != _meet(ft, image[u], image[v]):
                return False
        return True

    def assign(v: int) -> bool:
        if v == n:
            return True
        for w in candidates(v):
            image[v] = w
            if consistent(v) and assign(v + 1):
                return True
        image[v] = -1
        return False

    return assign(0)


def brute_le_t(q: QO, s: Tree, t: Tree) -> bool:
    """Search all vertex maps for an ancestor-preserving, label-respecting one."""
    return _search(q, s, t, inf_preserving=False)


def brute_le_k(q: QO, s: Tree, t: Tree) -> bool:
    """As :func:`brute_le_t`, additionally requiring infima to be preserved."""
    return _search(q, s, t, inf_preserving=True)


def brute_otype(q: QO) -> int:
    """Longest strict linear extension of the quotient, found over all permutations."""
    if q.n > OTYPE_CAP:
        raise SizeCapExceeded(f"quasi-orders above {OTYPE_CAP} elements")
    reps = [cls[0] for cls in q.classes()]
    best = 0
    for perm in itertools.permutations(reps):
        if all(not q.lt(perm[j], perm[i]) for i in range(len(perm)) for j in range(i + 1, len(perm))):
            best = max(best, len(perm))
    return best


def higman_embeds(q: QO, u: Sequence[int], v: Sequence[int]) -> bool:
    """Finite-word embedding: greedy leftmost matching is exact."""
    j = 0
    for x in u:
        while j < len(v) and not q.le(x, v[j]):
            j += 1
        if j == len(v):
            return False
        j += 1
    return True


def _subterms(c: Indec, out: list[Indec]) -> None:
    if isinstance(c, Pow):
        for b in c.body:
            if b not in out:
                out.append(b)
            _subterms(b, out)


def factor_search(q: QO, s) -> list[Indec]:
    """Cofinal factors by definition: candidates ``x`` with ``x^w`` embeddable in ``s``.

    Candidates are the proper sub-expressions of ``s`` and the atoms over its
    range; the survivors are reduced to maximal representatives.
    """
    p = _single(s)
    if not isinstance(p, Pow):
        raise ValueError("an atom has no cofinal factors")
    order = SeqOrder(q)
    candidates: list[Indec] = []
    _subterms(p, candidates)
    labels = sorted({c.label for c in candidates if isinstance(c, Atom)})
    for x in labels:
        if Atom(x) not in candidates:
            candidates.append(Atom(x))
    found = [c for c in candidates if order.le((Pow([c]),), (p,))]

    def below(a: Indec, b: Indec) -> bool:
        return order.le((a,), (b,))

    kept: list[Indec] = []
    for c in found:
        if any(below(c, d) and not below(d, c) for d in found):
            continue
        if any(below(c, k) and below(k, c) for k in kept):
            continue
        kept.append(c)
    return kept
