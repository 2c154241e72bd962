"""Ordinals below epsilon_0 in Cantor normal form.

An :class:`Ordinal` is a strictly decreasing tuple of ``(exponent, coefficient)``
pairs, the exponents themselves being ordinals.  Zero is the empty tuple, so two
ordinals are equal exactly when their term tuples are equal.

Text syntax: ``0``, naturals, ``w``, ``w^E``, ``w^E*c`` joined by ``+``, e.g.
``w^w*2 + w + 3``.  Exponents that are not a natural, ``w`` or a single power
of ``w`` are parenthesised: ``w^(w+1)``.
"""

from __future__ import annotations

from functools import total_ordering
from typing import Iterable

from ._text import ParseError, Scanner

__all__ = [
    "Ordinal",
    "ZERO",
    "ONE",
    "OMEGA",
    "compare",
    "add",
    "nat_add",
    "nat_mul",
    "omega_pow",
    "mul_omega",
    "minus2_plus",
    "parse_ordinal",
]


@total_ordering
class Ordinal:
    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Iterable[tuple["Ordinal", int]] = ()):
        terms = tuple(terms)
        for i, (exp, coef) in enumerate(terms):
            if not isinstance(exp, Ordinal):
                raise TypeError("exponents must be Ordinal instances")
            if not isinstance(coef, int) or coef < 1:
                raise ValueError(f"coefficient must be a positive integer, got {coef!r}")
            if i and compare(terms[i - 1][0], exp) <= 0:
                raise ValueError("exponents must be strictly decreasing")
        self.terms = terms
        # finite ordinals compare equal to ints, so they must hash like them
        if not terms:
            self._hash = hash(0)
        elif terms[0][0].is_zero:
            self._hash = hash(terms[0][1])
        else:
            self._hash = hash(terms)

    @classmethod
    def from_int(cls, n: int) -> "Ordinal":
        if n < 0:
            raise ValueError("ordinals are non-negative")
        return cls(((ZERO, n),)) if n else ZERO

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_finite(self) -> bool:
        return not self.terms or self.terms[0][0].is_zero

    @property
    def leading_exponent(self) -> "Ordinal":
        if not self.terms:
            raise ValueError("zero has no leading exponent")
        return self.terms[0][0]

    def __int__(self) -> int:
        if not self.is_finite:
            raise ValueError(f"{self} is not finite")
        return self.terms[0][1] if self.terms else 0

    def __eq__(self, other):
        if isinstance(other, int):
            return self.is_finite and int(self) == other
        if not isinstance(other, Ordinal):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        if isinstance(other, int):
            other = Ordinal.from_int(other)
        if not isinstance(other, Ordinal):
            return NotImplemented
        return compare(self, other) < 0

    def __add__(self, other):
        if isinstance(other, int):
            other = Ordinal.from_int(other)
        if not isinstance(other, Ordinal):
            return NotImplemented
        return add(self, other)

    def __radd__(self, other):
        if isinstance(other, int):
            return add(Ordinal.from_int(other), self)
        return NotImplemented

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(_term_str(e, c) for e, c in self.terms)

    def __repr__(self):
        return f"Ordinal({str(self)!r})"


ZERO = Ordinal()
ONE = Ordinal(((ZERO, 1),))
OMEGA = Ordinal(((ONE, 1),))


def _exp_str(e: Ordinal) -> str:
    if e.is_finite or (len(e.terms) == 1 and e.terms[0][1] == 1):
        return str(e)
    return f"({e})"


def _term_str(e: Ordinal, c: int) -> str:
    if e.is_zero:
        return str(c)
    base = "w" if e == ONE else f"w^{_exp_str(e)}"
    return base if c == 1 else f"{base}*{c}"


def compare(a: Ordinal, b: Ordinal) -> int:
    """Return -1, 0 or 1 as ``a`` is less than, equal to or greater than ``b``."""
    for (ea, ca), (eb, cb) in zip(a.terms, b.terms):
        c = compare(ea, eb)
        if c:
            return c
        if ca != cb:
            return -1 if ca < cb else 1
    la, lb = len(a.terms), len(b.terms)
    return (la > lb) - (la < lb)


def add(a: Ordinal, b: Ordinal) -> Ordinal:
    """Ordinal sum ``a + b``; terms of ``a`` below the head of ``b`` are absorbed."""
    if b.is_zero:
        return a
    head_exp, head_coef = b.terms[0]
    kept = []
    for e, c in a.terms:
        cmp = compare(e, head_exp)
        if cmp > 0:
            kept.append((e, c))
        elif cmp == 0:
            head_coef += c
            break
        else:
            break
    return Ordinal(kept + [(head_exp, head_coef)] + list(b.terms[1:]))


def _merge(terms: Iterable[tuple[Ordinal, int]]) -> Ordinal:
    acc: dict[Ordinal, int] = {}
    for e, c in terms:
        acc[e] = acc.get(e, 0) + c
    ordered = sorted(acc.items(), key=lambda ec: _SortKey(ec[0]), reverse=True)
    return Ordinal(ordered)


class _SortKey:
    __slots__ = ("o",)

    def __init__(self, o: Ordinal):
        self.o = o

    def __lt__(self, other: "_SortKey") -> bool:
        return compare(self.o, other.o) < 0


def nat_add(a: Ordinal, b: Ordinal) -> Ordinal:
    """Hessenberg (natural) sum: merge the Cantor normal forms termwise."""
    return _merge(a.terms + b.terms)


def nat_mul(a: Ordinal, b: Ordinal) -> Ordinal:
    """Hessenberg (natural) product: distribute and natural-add the exponents."""
    return _merge(
        (nat_add(ea, eb), ca * cb) for ea, ca in a.terms for eb, cb in b.terms
    )


def omega_pow(a: Ordinal) -> Ordinal:
    return Ordinal(((a, 1),))


def mul_omega(a: Ordinal) -> Ordinal:
    """``a * w`` for ``a > 0``, which is ``w^(e+1)`` with ``e`` the leading exponent."""
    if a.is_zero:
        raise ValueError("mul_omega is undefined for 0")
    return omega_pow(add(a.leading_exponent, ONE))


def minus2_plus(a: Ordinal) -> Ordinal:
    """The unique ``b`` with ``2 + b == a``; requires ``a >= 2``."""
    if compare(a, Ordinal.from_int(2)) < 0:
        raise ValueError(f"-2 + a needs a >= 2, got {a}")
    if a.is_finite:
        return Ordinal.from_int(int(a) - 2)
    return a


def parse_ordinal(text: str) -> Ordinal:
    sc = Scanner(text)
    result = _parse_sum(sc)
    sc.done()
    return result


def _parse_sum(sc: Scanner) -> Ordinal:
    result = _parse_term(sc)
    while sc.at("+"):
        sc.next()
        result = add(result, _parse_term(sc))
    return result


def _parse_term(sc: Scanner) -> Ordinal:
    kind, value, _ = sc.peek() or ("", "", 0)
    if kind == "num":
        sc.next()
        return Ordinal.from_int(int(value))
    if value != "w":
        sc.fail("expected a natural number or 'w'")
    sc.next()
    exp = ONE
    if sc.at("^"):
        sc.next()
        exp = _parse_primary(sc)
    coef = 1
    if sc.at("*"):
        sc.next()
        kind, value, _ = sc.next()
        if kind != "num" or int(value) < 1:
            sc.i -= 1
            sc.fail("expected a positive coefficient")
        coef = int(value)
    return Ordinal(((exp, coef),))


def _parse_primary(sc: Scanner) -> Ordinal:
    kind, value, _ = sc.peek() or ("", "", 0)
    if kind == "num":
        sc.next()
        return Ordinal.from_int(int(value))
    if value == "w":
        sc.next()
        if sc.at("^"):
            sc.next()
            return omega_pow(_parse_primary(sc))
        return OMEGA
    if value == "(":
        sc.next()
        inner = _parse_sum(sc)
        sc.expect(")")
        return inner
    sc.fail("expected an exponent")
    raise ParseError("unreachable")  # pragma: no cover
