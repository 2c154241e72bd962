"""Maps between leaf-labelled trees and indecomposable sequences.

``tree_to_seq`` sends a leaf to the one-letter sequence and a node to the
w-power of the concatenated images of its children.  ``seq_to_tree`` goes back
through the maximal cofinal factors.  Both are order-embeddings, and the round
trips are the identity up to equivalence, which :func:`check_equivalence`
verifies on a sample.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable

from .qo import QO
from .sequences import Atom, Indec, NormalSeq, Pow, SeqOrder, _single, factors, random_indecomposable
from .trees import Leaf, Node, Tree, TreeOrder, random_tree

__all__ = [
    "tree_to_seq",
    "seq_to_tree",
    "CaseResult",
    "EquivalenceReport",
    "check_equivalence",
    "random_sample",
]


def _tree_indec(t: Tree) -> Indec:
    if isinstance(t, Leaf):
        return Atom(t.label)
    return Pow([c for child in t.children for c in tree_to_seq(child)])


def tree_to_seq(t: Tree) -> NormalSeq:
    """Image of a tree; its length is ``w`` to the height of the tree."""
    return (_tree_indec(t),)


def seq_to_tree(s, q: QO, order: SeqOrder | None = None) -> Tree:
    """Tree of an indecomposable sequence, built from its maximal factors."""
    order = order or SeqOrder(q)
    c = _single(s)
    if isinstance(c, Atom):
        return Leaf(c.label)
    return Node([seq_to_tree(f, q, order) for f in factors(q, c, order)])


@dataclass(frozen=True)
class CaseResult:
    index: int
    direction: str  # "g.f" for trees, "f.g" for sequences
    ok: bool

    def line(self) -> str:
        return f"{self.index} {self.direction} {'ok' if self.ok else 'FAIL'}"


@dataclass
class EquivalenceReport:
    cases: list[CaseResult] = field(default_factory=list)
    seed: int | None = None

    @property
    def passed(self) -> int:
        return sum(c.ok for c in self.cases)

    @property
    def failures(self) -> list[CaseResult]:
        return [c for c in self.cases if not c.ok]

    @property
    def ok(self) -> bool:
        return self.passed == len(self.cases)

    def summary(self) -> str:
        return f"{self.passed}/{len(self.cases)} ok"

    def lines(self, verbose: bool = False) -> list[str]:
        shown = self.cases if verbose else self.failures
        head = [] if self.seed is None else [f"seed {self.seed}"]
        return head + [c.line() for c in shown] + [self.summary()]


def check_equivalence(q: QO, sample: Iterable[Tree | NormalSeq], seed: int | None = None) -> EquivalenceReport:
    """Round-trip every tree and every indecomposable sequence in ``sample``."""
    torder, sorder = TreeOrder(q), SeqOrder(q)
    report = EquivalenceReport(seed=seed)
    for i, item in enumerate(sample):
        if isinstance(item, (Leaf, Node)):
            back = seq_to_tree(tree_to_seq(item), q, sorder)
            ok = torder.le_t(item, back) and torder.le_t(back, item)
            report.cases.append(CaseResult(i, "g.f", ok))
        else:
            s = (_single(item),)
            back = tree_to_seq(seq_to_tree(s, q, sorder))
            ok = sorder.le(s, back) and sorder.le(back, s)
            report.cases.append(CaseResult(i, "f.g", ok))
    return report


def random_sample(q: QO, cases: int, seed: int, max_height: int = 3) -> list[Tree | NormalSeq]:
    """Alternating random trees and indecomposable sequences of bounded height."""
    rng = random.Random(seed)
    out: list[Tree | NormalSeq] = []
    for i in range(cases):
        if i % 2 == 0:
            out.append(random_tree(rng, q.n, max_height))
        else:
            out.append((random_indecomposable(rng, q.n, max_height),))
    return out
