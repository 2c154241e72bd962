"""Maximum bipartite matching by augmenting paths (Kuhn's algorithm)."""

from __future__ import annotations

from typing import Callable, Sequence


def has_saturating_matching(n_left: int, n_right: int, edge: Callable[[int, int], bool]) -> bool:
    """True iff every left vertex can be matched to a distinct right vertex.

    ``edge(i, j)`` is evaluated lazily and at most once per pair.
    """
    if n_left > n_right:
        return False
    adj: list[Sequence[int]] = []
    for i in range(n_left):
        row = [j for j in range(n_right) if edge(i, j)]
        if not row:
            return False
        adj.append(row)
    match_right = [-1] * n_right

    def augment(i: int, seen: list[bool]) -> bool:
        for j in adj[i]:
            if seen[j]:
                continue
            seen[j] = True
            if match_right[j] < 0 or augment(match_right[j], seen):
                match_right[j] = i
                return True
        return False

    for i in range(n_left):
        if not augment(i, [False] * n_right):
            return False
    return True
