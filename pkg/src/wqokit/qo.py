"""Explicit finite quasi-orders and their ordinal invariants.

A :class:`QO` stores, for each element ``i``, the bitmask of elements above it
(``up[i]`` has bit ``j`` set iff ``i <= j``).  All invariants are computed by the
lower-set recursions memoised on bitmasks of surviving elements, so they are
exponential in the worst case and meant for desk-scale instances.

File format (``#`` starts a comment)::

    elem a
    elem b
    le a b
"""

from __future__ import annotations

import itertools
import os
from typing import Iterable, Mapping, Sequence

from .matching import has_saturating_matching

__all__ = [
    "QO",
    "closure",
    "chain",
    "antichain",
    "named_qo",
    "BUILTIN_QOS",
    "disjoint_union",
    "product",
    "powerset_f",
    "powerset_elements",
    "multiset_le",
    "l_set",
    "l_le",
    "l_incomp",
    "otype",
    "height",
    "width",
    "parse_qo",
    "format_qo",
    "load_qo",
    "enumerate_qos",
    "random_qo",
]


def _default_names(n: int) -> tuple[str, ...]:
    if n <= 26:
        return tuple("abcdefghijklmnopqrstuvwxyz"[:n])
    return tuple(f"x{i}" for i in range(n))


class QO:
    """A finite quasi-order on elements ``0..n-1`` with display names."""

    __slots__ = ("names", "up", "_index")

    def __init__(self, names: Sequence[str], up: Sequence[int]):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError("element names must be unique")
        if len(up) != len(names):
            raise ValueError("relation size does not match element count")
        n = len(names)
        for i in range(n):
            if not up[i] >> i & 1:
                raise ValueError(f"relation is not reflexive at {names[i]!r}")
            for j in _bits(up[i]):
                if up[j] & ~up[i]:
                    raise ValueError("relation is not transitive")
        self.names = names
        self.up = tuple(up)
        self._index = {name: i for i, name in enumerate(names)}

    @property
    def n(self) -> int:
        return len(self.names)

    def __len__(self) -> int:
        return len(self.names)

    def le(self, i: int, j: int) -> bool:
        return bool(self.up[i] >> j & 1)

    def lt(self, i: int, j: int) -> bool:
        return self.le(i, j) and not self.le(j, i)

    def equiv(self, i: int, j: int) -> bool:
        return self.le(i, j) and self.le(j, i)

    def incomparable(self, i: int, j: int) -> bool:
        return not self.le(i, j) and not self.le(j, i)

    def matrix(self) -> list[list[bool]]:
        return [[self.le(i, j) for j in range(self.n)] for i in range(self.n)]

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown element {name!r}") from None

    def resolve(self, label: str) -> int:
        """Map a label to an element: by name first, then as a decimal index."""
        if label in self._index:
            return self._index[label]
        if label.isdigit() and int(label) < self.n:
            return int(label)
        raise KeyError(f"unknown element {label!r}")

    def classes(self) -> list[list[int]]:
        """The equivalence classes, each listed in index order."""
        seen = 0
        out = []
        for i in range(self.n):
            if seen >> i & 1:
                continue
            cls = [j for j in range(self.n) if self.equiv(i, j)]
            for j in cls:
                seen |= 1 << j
            out.append(cls)
        return out

    def induced(self, indices: Iterable[int]) -> "QO":
        idx = list(indices)
        up = []
        for i in idx:
            up.append(sum(1 << k for k, j in enumerate(idx) if self.le(i, j)))
        return QO([self.names[i] for i in idx], up)

    def __eq__(self, other):
        if not isinstance(other, QO):
            return NotImplemented
        return self.names == other.names and self.up == other.up

    def __hash__(self):
        return hash((self.names, self.up))

    def __repr__(self):
        return f"QO(n={self.n}, names={list(self.names)})"


def _bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def closure(n: int, names: Sequence[str] | None = None, pairs: Iterable[tuple[int, int]] = ()) -> QO:
    """Smallest quasi-order on ``n`` elements containing ``pairs``."""
    names = _default_names(n) if names is None else tuple(names)
    if len(names) != n:
        raise ValueError("need exactly n names")
    if len(set(names)) != n:
        raise ValueError("duplicate element names")
    up = [1 << i for i in range(n)]
    for i, j in pairs:
        if not (0 <= i < n and 0 <= j < n):
            raise IndexError(f"pair ({i}, {j}) out of range")
        up[i] |= 1 << j
    # Warshall over bitmask rows
    for k in range(n):
        bit = 1 << k
        for i in range(n):
            if up[i] & bit:
                up[i] |= up[k]
    return QO(names, up)


def chain(n: int, names: Sequence[str] | None = None) -> QO:
    return closure(n, names, [(i, i + 1) for i in range(n - 1)])


def antichain(n: int, names: Sequence[str] | None = None) -> QO:
    return closure(n, names)


BUILTIN_QOS = {
    "1": lambda: chain(1),
    "chain2": lambda: chain(2),
    "chain3": lambda: chain(3),
    "anti2": lambda: antichain(2),
    "anti3": lambda: antichain(3),
}


def named_qo(name: str) -> QO:
    """Built-in quasi-orders: ``1``, ``chainN``, ``antiN``."""
    if name in BUILTIN_QOS:
        return BUILTIN_QOS[name]()
    for prefix, make in (("chain", chain), ("anti", antichain)):
        rest = name[len(prefix):]
        if name.startswith(prefix) and rest.isdigit() and int(rest) >= 1:
            return make(int(rest))
    raise KeyError(f"unknown built-in quasi-order {name!r}")


def disjoint_union(p: QO, q: QO) -> QO:
    names_p, names_q = p.names, q.names
    if set(names_p) & set(names_q):
        names_p = tuple(f"{x}_l" for x in names_p)
        names_q = tuple(f"{x}_r" for x in names_q)
    up = list(p.up) + [mask << p.n for mask in q.up]
    return QO(names_p + names_q, up)


def product(p: QO, q: QO) -> QO:
    """Cartesian product with the coordinatewise order; element ``(i, j)`` has index ``i*|q| + j``."""
    names = [f"{x}.{y}" for x in p.names for y in q.names]
    up = []
    for i in range(p.n):
        for j in range(q.n):
            mask = 0
            for i2 in _bits(p.up[i]):
                mask |= q.up[j] << (i2 * q.n)
            up.append(mask)
    return QO(names, up)


def powerset_elements(n: int, max_card: int) -> list[tuple[int, ...]]:
    """Subsets of ``range(n)`` with at most ``max_card`` elements, by size then lexicographically."""
    out: list[tuple[int, ...]] = []
    for k in range(min(n, max_card) + 1):
        out.extend(itertools.combinations(range(n), k))
    return out


def powerset_f(q: QO, max_card: int | None = None) -> QO:
    """Finite subsets of ``q`` under the domination order.

    Element ``i`` of the result is ``powerset_elements(q.n, max_card)[i]``.
    """
    max_card = q.n if max_card is None else max_card
    subsets = powerset_elements(q.n, max_card)
    # down-closure masks make domination a subset test
    down = [0] * q.n
    for i in range(q.n):
        for j in _bits(q.up[i]):
            down[j] |= 1 << i
    closed = []
    for s in subsets:
        mask = 0
        for x in s:
            mask |= down[x]
        closed.append(mask)
    up = []
    for a in range(len(subsets)):
        up.append(sum(1 << b for b in range(len(subsets)) if closed[a] & ~closed[b] == 0))
    names = ["{" + ",".join(q.names[x] for x in s) + "}" for s in subsets]
    return QO(names, up)


def multiset_le(q: QO, s: Mapping[int, int], t: Mapping[int, int]) -> bool:
    """Term ordering: an injection ``f`` from ``s`` into ``t`` with ``x <= f(x)``."""
    left = [x for x, m in sorted(s.items()) for _ in range(m)]
    right = [y for y, m in sorted(t.items()) for _ in range(m)]
    for x in left + right:
        if not 0 <= x < q.n:
            raise IndexError(f"element {x} out of range")
    return has_saturating_matching(len(left), len(right), lambda i, j: q.le(left[i], right[j]))


def l_set(q: QO, x: int) -> QO:
    """Induced suborder on ``{y : x is not <= y}``."""
    return q.induced(y for y in range(q.n) if not q.le(x, y))


def l_le(q: QO, x: int) -> QO:
    """Induced suborder on ``{y : y <= x}`` (including ``x`` itself)."""
    return q.induced(y for y in range(q.n) if q.le(y, x))


def l_incomp(q: QO, x: int) -> QO:
    """Induced suborder on the elements incomparable with ``x``."""
    return q.induced(y for y in range(q.n) if q.incomparable(x, y))


def _canonical(n: int, up: Sequence[int]) -> tuple[int, ...]:
    best = None
    for perm in itertools.permutations(range(n)):
        rows = [0] * n
        for i in range(n):
            r = 0
            for j in _bits(up[i]):
                r |= 1 << perm[j]
            rows[perm[i]] = r
        key = tuple(rows)
        if best is None or key < best:
            best = key
    return best if best is not None else ()


def _extensions(n: int, up: Sequence[int]) -> Iterable[tuple[int, ...]]:
    """Every quasi-order on ``n + 1`` elements restricting to ``up`` on the first ``n``.

    The new element gets a down-closed set ``D`` below it and an up-closed set
    ``U`` above it, with everything in ``D`` below everything in ``U``.
    """
    down = [0] * n
    for i in range(n):
        for j in _bits(up[i]):
            down[j] |= 1 << i
    subsets = range(1 << n)
    down_closed = [d for d in subsets if all(down[i] & ~d == 0 for i in _bits(d))]
    up_closed = [u for u in subsets if all(up[i] & ~u == 0 for i in _bits(u))]
    new = 1 << n
    for d in down_closed:
        for u in up_closed:
            if any(up[i] & u != u for i in _bits(d)):
                continue
            rows = [up[i] | new if d >> i & 1 else up[i] for i in range(n)]
            rows.append(u | new)
            yield tuple(rows)


def enumerate_qos(n: int) -> list[QO]:
    """One quasi-order per isomorphism class on ``n`` elements.

    Built by one-element extensions of the classes on ``n - 1`` elements and
    deduplicated by a canonical form minimised over all relabellings.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    level: set[tuple[int, ...]] = {()}
    for k in range(n):
        level = {_canonical(k + 1, ext) for rows in level for ext in _extensions(k, rows)}
    return [QO(_default_names(n), rows) for rows in sorted(level)]


def random_qo(rng, n: int, density: float = 0.3) -> QO:
    """Closure of a random relation where each ordered pair is present with ``density``."""
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j and rng.random() < density]
    return closure(n, pairs=pairs)


def _recursion(q: QO, below) -> int:
    """``f(S) = max_{x in S} f(S & below(x)) + 1`` with ``f(empty) = 0``."""
    masks = [below(x) for x in range(q.n)]
    memo: dict[int, int] = {0: 0}

    def f(s: int) -> int:
        if s in memo:
            return memo[s]
        best = 0
        for x in _bits(s):
            v = f(s & masks[x]) + 1
            if v > best:
                best = v
        memo[s] = best
        return best

    return f((1 << q.n) - 1)


def otype(q: QO) -> int:
    full = (1 << q.n) - 1
    return _recursion(q, lambda x: full & ~q.up[x])


def height(q: QO) -> int:
    # strict down-set: the ≤-version contains x and the recursion would not descend
    down = [0] * q.n
    for i in range(q.n):
        for j in _bits(q.up[i]):
            down[j] |= 1 << i
    return _recursion(q, lambda x: down[x] & ~q.up[x])


def width(q: QO) -> int:
    full = (1 << q.n) - 1
    down = [0] * q.n
    for i in range(q.n):
        for j in _bits(q.up[i]):
            down[j] |= 1 << i
    return _recursion(q, lambda x: full & ~(q.up[x] | down[x]))


def parse_qo(text: str) -> QO:
    names: list[str] = []
    pairs: list[tuple[str, str, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].split()
        if not line:
            continue
        if line[0] == "elem" and len(line) == 2:
            if line[1] in names:
                raise ValueError(f"line {lineno}: duplicate element {line[1]!r}")
            names.append(line[1])
        elif line[0] == "le" and len(line) == 3:
            pairs.append((line[1], line[2], lineno))
        else:
            raise ValueError(f"line {lineno}: expected 'elem NAME' or 'le NAME NAME'")
    index = {name: i for i, name in enumerate(names)}
    idx_pairs = []
    for a, b, lineno in pairs:
        if a not in index or b not in index:
            missing = a if a not in index else b
            raise ValueError(f"line {lineno}: unknown element {missing!r}")
        idx_pairs.append((index[a], index[b]))
    return closure(len(names), names, idx_pairs)


def format_qo(q: QO) -> str:
    """Serialise with only the covering pairs (plus a cycle per equivalence class)."""
    lines = [f"elem {name}" for name in q.names]
    classes = q.classes()
    for cls in classes:
        if len(cls) > 1:
            for a, b in zip(cls, cls[1:] + cls[:1]):
                lines.append(f"le {q.names[a]} {q.names[b]}")
    reps = [cls[0] for cls in classes]
    for a in reps:
        for b in reps:
            if not q.lt(a, b):
                continue
            if any(q.lt(a, c) and q.lt(c, b) for c in reps):
                continue
            lines.append(f"le {q.names[a]} {q.names[b]}")
    return "\n".join(lines) + "\n"


def load_qo(source: str) -> QO:
    """A built-in name, or a path to a quasi-order file."""
    try:
        return named_qo(source)
    except KeyError:
        pass
    if not os.path.exists(source):
        raise ValueError(f"{source!r} is neither a built-in quasi-order nor a file")
    with open(source, encoding="utf-8") as fh:
        return parse_qo(fh.read())
