"""Tiny tokenizer shared by the expression parsers."""

from __future__ import annotations

import re

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_.]*)|(?P<op>\S))")


class ParseError(ValueError):
    """Raised for malformed input text; ``pos`` is the character offset."""

    def __init__(self, message: str, text: str | None = None, pos: int = 0):
        self.text = text
        self.pos = pos
        where = f" at position {pos}" if text is not None else ""
        super().__init__(f"{message}{where}")


class Scanner:
    def __init__(self, text: str):
        self.text = text
        self.tokens: list[tuple[str, str, int]] = []
        i = 0
        while i < len(text):
            m = _TOKEN.match(text, i)
            if m is None or m.end() == i:
                break
            kind = m.lastgroup
            self.tokens.append((kind, m.group(kind), m.start(kind)))
            i = m.end()
        self.i = 0

    def peek(self) -> tuple[str, str, int] | None:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def at(self, value: str) -> bool:
        tok = self.peek()
        return tok is not None and tok[1] == value

    def pos(self) -> int:
        tok = self.peek()
        return tok[2] if tok is not None else len(self.text)

    def next(self) -> tuple[str, str, int]:
        tok = self.peek()
        if tok is None:
            self.fail("unexpected end of input")
        self.i += 1
        return tok

    def expect(self, value: str) -> None:
        tok = self.peek()
        if tok is None or tok[1] != value:
            found = "end of input" if tok is None else repr(tok[1])
            self.fail(f"expected {value!r}, found {found}")
        self.i += 1

    def done(self) -> None:
        if self.peek() is not None:
            self.fail(f"unexpected {self.peek()[1]!r}")

    def fail(self, message: str):
        raise ParseError(message, self.text, self.pos())
