"""Property suites cross-checking the fast procedures against brute force.

Each suite returns a :class:`SuiteResult`; the CLI ``check`` command prints it
and the acceptance tests assert on it.  All randomness comes from a seeded
:class:`random.Random`, so reports are reproducible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cmp_to_key
from typing import Sequence

from . import epsilon as E
from . import oracle
from .correspondence import check_equivalence
from .ordinals import compare
from .qo import QO, named_qo
from .sequences import SeqOrder, length, node_count, random_indecomposable, random_normal_seq, truncate
from .trees import TreeOrder, enumerate_trees, eps_to_tree, random_tree, two_plus_omega

__all__ = [
    "SuiteResult",
    "STANDARD_QOS",
    "standard_qos",
    "describe",
    "tree_suite",
    "sequence_suite",
    "correspondence_suite",
    "epsilon_suite",
    "SUITES",
]

STANDARD_QOS = ("1", "chain2", "anti2", "chain3", "anti3")


def standard_qos(names: Sequence[str] = STANDARD_QOS) -> list[QO]:
    return [named_qo(n) for n in names]


def describe(q: QO) -> str:
    """``chainN``, ``antiN`` or a plain element count, for report lines."""
    if all(q.le(i, j) == (i <= j) for i in range(q.n) for j in range(q.n)):
        return "1" if q.n == 1 else f"chain{q.n}"
    if all(q.le(i, j) == (i == j) for i in range(q.n) for j in range(q.n)):
        return f"anti{q.n}"
    return f"a {q.n}-element quasi-order"


@dataclass
class SuiteResult:
    name: str
    total: int = 0
    failures: list[str] = field(default_factory=list)
    details: list[str] = field(default_factory=list)

    @property
    def passed(self) -> int:
        return self.total - len(self.failures)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, ok: bool, what: str) -> None:
        self.total += 1
        if not ok:
            self.failures.append(what)

    def lines(self) -> list[str]:
        return self.details + [f"FAIL {f}" for f in self.failures] + [f"{self.passed}/{self.total} ok"]


def tree_suite(qos: Sequence[QO] | None = None, max_vertices: int = 5) -> SuiteResult:
    """Fast tree orders against explicit map search, on every pair of small trees."""
    qos = standard_qos(("1", "chain2", "anti2")) if qos is None else qos
    res = SuiteResult("trees")
    for q in qos:
        trees = enumerate_trees(q.n, max_vertices)
        order = TreeOrder(q)
        for a, s in enumerate(trees):
            for b, t in enumerate(trees):
                lt, lk = order.le_t(s, t), order.le_k(s, t)
                ok = (
                    lt == oracle.brute_le_t(q, s, t)
                    and lk == oracle.brute_le_k(q, s, t)
                    and (lt or not lk)
                )
                res.record(ok, f"{describe(q)} pair ({a}, {b})")
        res.details.append(f"{len(trees)} trees over {describe(q)}")
    return res


def _check_sequence_pair(q: QO, s, t) -> list[str]:
    """Properties of one pair; returns the names of the violated ones."""
    bad = []
    orders = [SeqOrder(q, slack) for slack in (0, 1, 2)]
    verdict = orders[0].le(s, t)
    if any(o.le(s, t) != verdict for o in orders[1:]):
        bad.append("expansion-stability")
    if verdict and compare(length(s), length(t)) > 0:
        bad.append("length")
    if verdict:
        for n in (1, 2, 3):
            if not oracle.higman_embeds(q, truncate(s, n), truncate(t, n * node_count(s))):
                bad.append(f"truncation(n={n})")
    order = orders[0]
    for c in s:
        whole = order.le((c,), t)
        for k in range(1, len(t)):
            if whole != (order.le((c,), t[:k]) or order.le((c,), t[k:])):
                bad.append("splitting")
                break
    return bad


def sequence_suite(
    qos: Sequence[QO] | None = None, cases: int = 1000, seed: int = 0, max_depth: int = 3
) -> SuiteResult:
    qos = standard_qos() if qos is None else qos
    rng = random.Random(seed)
    res = SuiteResult("sequences")
    for i in range(cases):
        q = qos[i % len(qos)]
        s = random_normal_seq(rng, q.n, max_depth)
        t = random_normal_seq(rng, q.n, max_depth)
        bad = _check_sequence_pair(q, s, t)
        res.record(not bad, f"case {i}: {', '.join(bad)}")
    return res


def correspondence_suite(
    qos: Sequence[QO] | None = None, cases: int = 500, seed: int = 0, max_height: int = 3
) -> SuiteResult:
    """Round trips through both maps, alternating trees and sequences."""
    qos = standard_qos() if qos is None else qos
    rng = random.Random(seed)
    res = SuiteResult("correspondence")
    for i in range(cases):
        q = qos[i % len(qos)]
        if i % 2 == 0:
            item = random_tree(rng, q.n, max_height)
        else:
            item = (random_indecomposable(rng, q.n, max_height),)
        case = check_equivalence(q, [item]).cases[0]
        res.record(case.ok, f"case {i} {case.direction}")
    return res


def epsilon_suite(omega_size: int = 1, max_nodes: int = 4) -> SuiteResult:
    """Linearity of the notation order, agreement with values, and reflection by trees."""
    omega = E.OmegaOrder(omega_size)
    terms = E.enumerate_terms(omega, max_nodes)
    ranked = sorted(terms, key=cmp_to_key(lambda a, b: E.cmp(a, b, omega)))
    pos = {t: i for i, t in enumerate(ranked)}
    q = two_plus_omega(omega)
    order = TreeOrder(q)
    images = {t: eps_to_tree(t, omega) for t in terms}
    res = SuiteResult("epsilon")
    res.details.append(f"{len(terms)} terms over a chain of {omega_size}")
    for s in terms:
        for t in terms:
            c = E.cmp(s, t, omega)
            ok = c == (pos[s] > pos[t]) - (pos[s] < pos[t])
            if E.is_finite(s) and E.is_finite(t):
                vs, vt = E.value(s), E.value(t)
                ok = ok and c == (vs > vt) - (vs < vt)
            if order.le_t(images[s], images[t]):
                ok = ok and c <= 0
            res.record(ok, f"{s} vs {t}")
    return res


SUITES = {
    "trees": tree_suite,
    "sequences": sequence_suite,
    "correspondence": correspondence_suite,
    "epsilon": epsilon_suite,
}
