"""The epsilon notation: validity, order, values and the text syntax."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from wqokit._text import ParseError
from wqokit.epsilon import (
    OMEGA,
    ZERO,
    Eps,
    ESeq,
    InvalidTerm,
    OmegaOrder,
    check,
    cmp,
    enumerate_terms,
    format_term,
    is_finite,
    parse_term,
    validate,
    value,
)

EMPTY, ONE_ELT, TWO = OmegaOrder(0), OmegaOrder(1), OmegaOrder(2)
one = ESeq((ZERO,))
two = ESeq((one,))
three = ESeq((one, ZERO))


def to_term(n: int):
    """Base-2 normal form of a natural number, independent of :func:`value`."""
    if n == 0:
        return ZERO
    bits = [i for i in range(n.bit_length() - 1, -1, -1) if n >> i & 1]
    return ESeq(tuple(to_term(i) for i in bits))


def test_validate_examples():
    assert validate(ZERO, EMPTY)
    assert not validate(ESeq((OMEGA,)), EMPTY)
    assert validate(three, EMPTY)


def test_cmp_examples():
    assert cmp(ZERO, OMEGA, EMPTY) == -1
    assert cmp(OMEGA, Eps(0), ONE_ELT) == -1
    assert cmp(one, two, EMPTY) == -1


def test_value_examples():
    assert value(ZERO) == 0
    assert value(one) == 1
    assert value(three) == 3
    with pytest.raises(ValueError):
        value(OMEGA)


def test_enumerate_examples():
    assert enumerate_terms(EMPTY, 1) == [ZERO, OMEGA]
    assert enumerate_terms(ONE_ELT, 1) == [ZERO, OMEGA, Eps(0)]
    assert one in enumerate_terms(EMPTY, 2)
    with pytest.raises(ValueError):
        enumerate_terms(EMPTY, 0)


@pytest.mark.parametrize(
    "term,clause",
    [
        (ESeq((Eps(0),)), "single summand"),
        (ESeq((ZERO, one)), "strictly decreasing"),
        (ESeq((ZERO, ZERO)), "strictly decreasing"),
        (Eps(3), "outside the chain"),
        (ESeq(()), "empty"),
    ],
)
def test_check_names_violated_clause(term, clause):
    with pytest.raises(InvalidTerm, match=clause):
        check(term, TWO)


def test_cmp_rejects_invalid_terms():
    with pytest.raises(InvalidTerm):
        cmp(ESeq((OMEGA,)), ZERO, EMPTY)


def test_constants_order():
    for a in range(3):
        assert cmp(OMEGA, Eps(a), OmegaOrder(3)) == -1
        for b in range(3):
            assert cmp(Eps(a), Eps(b), OmegaOrder(3)) == (a > b) - (a < b)


def test_prefix_is_smaller():
    assert cmp(ESeq((OMEGA,  one)), ESeq((OMEGA, one, ZERO)), EMPTY) == -1


@pytest.mark.parametrize("size,nodes", [(0, 6), (1, 5), (2, 5)])
def test_enumeration_is_strict_linear_order(size, nodes):
    omega = OmegaOrder(size)
    terms = enumerate_terms(omega, nodes)
    assert len(set(terms)) == len(terms)
    for s in terms:
        assert cmp(s, s, omega) == 0
        for t in terms:
            c = cmp(s, t, omega)
            assert c == -cmp(t, s, omega)
            assert (c == 0) == (s == t)
    # transitivity: sorting by a total preorder must produce pairwise agreement
    from functools import cmp_to_key

    ranked = sorted(terms, key=cmp_to_key(lambda a, b: cmp(a, b, omega)))
    for i, a in enumerate(ranked):
        for b in ranked[i + 1:]:
            assert cmp(a, b, omega) == -1


@pytest.mark.parametrize("size,nodes", [(0, 6), (1, 5)])
def test_composite_exceeds_components(size, nodes):
    omega = OmegaOrder(size)
    for t in enumerate_terms(omega, nodes):
        if isinstance(t, ESeq):
            assert all(cmp(p, t, omega) == -1 for p in t.parts)


@given(st.integers(0, 300), st.integers(0, 300))
def test_finite_order_is_value_order(m, n):
    s, t = to_term(m), to_term(n)
    assert validate(s, EMPTY) and validate(t, EMPTY)
    assert value(s) == m and value(t) == n
    assert cmp(s, t, EMPTY) == (m > n) - (m < n)
    assert is_finite(s)


def test_infinite_terms_are_not_finite():
    assert not is_finite(OMEGA)
    assert not is_finite(ESeq((OMEGA, ZERO)))


@pytest.mark.parametrize("text", ["0", "w", "e(1)", "<<0>, 0>", "<e(1), w, <0>>"])
def test_text_round_trip(text):
    t = parse_term(text, TWO)
    assert format_term(t) == text
    assert parse_term(format_term(t), TWO) == t


@pytest.mark.parametrize("text", ["<w>", "<0, <0>>", "e(5)"])
def test_parser_rejects_invalid_normal_forms(text):
    with pytest.raises(ParseError, match="invalid normal form"):
        parse_term(text, TWO)


@pytest.mark.parametrize("text", ["", "<", "<0,>", "e()", "x", "0 0"])
def test_parser_syntax_errors(text):
    with pytest.raises(ParseError, match="position"):
        parse_term(text)
