"""Notation system for epsilon numbers over a finite chain, in base-2 normal form.

Terms are the constants ``0``, ``w`` and ``e(a)`` (``a`` an element of the index
chain) together with composites ``<t0, ..., tk>`` read as ``2^t0 + ... + 2^tk``
with strictly decreasing summands.  A one-element composite may not wrap ``w``
or an ``e(a)``, since those are fixed points of ``x -> 2^x``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from ._text import ParseError, Scanner

__all__ = [
    "OmegaOrder",
    "Zero",
    "Omega",
    "Eps",
    "ESeq",
    "EpsilonTerm",
    "ZERO",
    "OMEGA",
    "InvalidTerm",
    "check",
    "validate",
    "cmp",
    "is_finite",
    "value",
    "size",
    "enumerate_terms",
    "parse_term",
    "format_term",
]


@dataclass(frozen=True)
class OmegaOrder:
    """The chain ``0 < 1 < ... < size-1`` indexing the epsilon constants."""

    size: int

    def __post_init__(self):
        if self.size < 0:
            raise ValueError("chain size must be non-negative")

    def __contains__(self, a: int) -> bool:
        return 0 <= a < self.size


@dataclass(frozen=True)
class Zero:
    def __str__(self):
        return "0"


@dataclass(frozen=True)
class Omega:
    def __str__(self):
        return "w"


@dataclass(frozen=True)
class Eps:
    index: int

    def __str__(self):
        return f"e({self.index})"


@dataclass(frozen=True)
class ESeq:
    parts: tuple

    def __str__(self):
        return "<" + ", ".join(str(p) for p in self.parts) + ">"


EpsilonTerm = Union[Zero, Omega, Eps, ESeq]
ZERO = Zero()
OMEGA = Omega()


class InvalidTerm(ValueError):
    pass


def _rank(t: EpsilonTerm) -> int:
    return 0 if isinstance(t, Zero) else 1 if isinstance(t, Omega) else 2


def _cmp(s: EpsilonTerm, t: EpsilonTerm) -> int:
    s_seq, t_seq = isinstance(s, ESeq), isinstance(t, ESeq)
    if not s_seq and not t_seq:
        rs, rt = _rank(s), _rank(t)
        if rs != rt:
            return -1 if rs < rt else 1
        if rs == 2:
            return (s.index > t.index) - (s.index < t.index)
        return 0
    if s_seq and t_seq:
        for a, b in zip(s.parts, t.parts):
            c = _cmp(a, b)
            if c:
                return c
        ls, lt = len(s.parts), len(t.parts)
        return (ls > lt) - (ls < lt)
    # constant against composite: the constant is below iff it is <= the head
    if s_seq:
        return -_cmp(t, s)
    return -1 if _cmp(s, t.parts[0]) <= 0 else 1


def check(t: EpsilonTerm, omega: OmegaOrder) -> None:
    """Raise :class:`InvalidTerm` naming the violated clause, if any."""
    if isinstance(t, (Zero, Omega)):
        return
    if isinstance(t, Eps):
        if t.index not in omega:
            raise InvalidTerm(f"e({t.index}): index outside the chain of size {omega.size}")
        return
    if not isinstance(t, ESeq):
        raise InvalidTerm(f"not a term: {t!r}")
    if not t.parts:
        raise InvalidTerm("empty composite <>")
    for p in t.parts:
        check(p, omega)
    if len(t.parts) == 1 and isinstance(t.parts[0], (Omega, Eps)):
        raise InvalidTerm(f"{t}: a single summand may not be w or e(a)")
    for a, b in zip(t.parts, t.parts[1:]):
        if _cmp(a, b) <= 0:
            raise InvalidTerm(f"{t}: summands must be strictly decreasing ({a} then {b})")


def validate(t: EpsilonTerm, omega: OmegaOrder) -> bool:
    try:
        check(t, omega)
    except InvalidTerm:
        return False
    return True


def cmp(s: EpsilonTerm, t: EpsilonTerm, omega: OmegaOrder) -> int:
    """Compare two valid terms; returns -1, 0 or 1."""
    check(s, omega)
    check(t, omega)
    return _cmp(s, t)


def is_finite(t: EpsilonTerm) -> bool:
    return _cmp(t, OMEGA) < 0


def value(t: EpsilonTerm) -> int:
    """The natural number denoted by a finite term."""
    if isinstance(t, Zero):
        return 0
    if not isinstance(t, ESeq) or not is_finite(t):
        raise ValueError(f"{t} is not a finite term")
    return sum(1 << value(p) for p in t.parts)


def size(t: EpsilonTerm) -> int:
    """Number of constructor nodes."""
    if isinstance(t, ESeq):
        return 1 + sum(size(p) for p in t.parts)
    return 1


class _Key:
    __slots__ = ("t",)

    def __init__(self, t):
        self.t = t

    def __lt__(self, other):
        return _cmp(self.t, other.t) < 0


def enumerate_terms(omega: OmegaOrder, max_nodes: int) -> list[EpsilonTerm]:
    """All valid terms with at most ``max_nodes`` nodes, by size and then by order."""
    if max_nodes < 1:
        raise ValueError("max_nodes must be at least 1")
    by_size: dict[int, list[EpsilonTerm]] = {
        1: [ZERO, OMEGA] + [Eps(a) for a in range(omega.size)]
    }
    for n in range(2, max_nodes + 1):
        found = []
        for parts in _decreasing(by_size, n - 1, None):
            if len(parts) == 1 and isinstance(parts[0], (Omega, Eps)):
                continue
            found.append(ESeq(tuple(parts)))
        by_size[n] = sorted(found, key=_Key)
    out: list[EpsilonTerm] = []
    for n in range(1, max_nodes + 1):
        out.extend(by_size[n])
    return out


def _decreasing(by_size, total, bound):
    """Strictly decreasing part lists of total size ``total``, all below ``bound``."""
    if total == 0:
        yield []
        return
    for n in range(1, total + 1):
        for head in by_size.get(n, ()):
            if bound is not None and _cmp(head, bound) >= 0:
                continue
            for rest in _decreasing(by_size, total - n, head):
                yield [head] + rest


def parse_term(text: str, omega: OmegaOrder | None = None) -> EpsilonTerm:
    """Parse ``0``, ``w``, ``e(a)`` and ``<t0, t1, ...>``; validates when ``omega`` is given."""
    sc = Scanner(text)
    t = _parse(sc)
    sc.done()
    if omega is not None:
        try:
            check(t, omega)
        except InvalidTerm as exc:
            raise ParseError(f"invalid normal form: {exc}") from None
    return t


def _parse(sc: Scanner) -> EpsilonTerm:
    tok = sc.peek()
    if tok is None:
        sc.fail("unexpected end of input")
    kind, val, _ = tok
    if val == "0":
        sc.next()
        return ZERO
    if val == "w":
        sc.next()
        return OMEGA
    if val == "e":
        sc.next()
        sc.expect("(")
        kind, val, _ = sc.peek() or ("", "", 0)
        if kind != "num":
            sc.fail("expected an index")
        sc.next()
        sc.expect(")")
        return Eps(int(val))
    if val == "<":
        sc.next()
        parts = [_parse(sc)]
        while sc.at(","):
            sc.next()
            parts.append(_parse(sc))
        sc.expect(">")
        return ESeq(tuple(parts))
    sc.fail(f"unexpected {val!r}")


def format_term(t: EpsilonTerm) -> str:
    return str(t)
