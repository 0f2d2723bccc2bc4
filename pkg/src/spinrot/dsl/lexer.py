"""Tokenizer for rotation programs."""

from __future__ import annotations

import re
from dataclasses import dataclass

IDENT, NUMBER, UNIT, SYMBOL, NEWLINE, EOF = "IDENT", "NUMBER", "UNIT", "SYMBOL", "NEWLINE", "EOF"

UNITS = ("deg", "rad")
SYMBOLS = "(),;+-"

_NUMBER = re.compile(r"(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?")
_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


class LexError(Exception):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{line}:{col}: {message}")
        self.line, self.col = line, col


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    col: int

    @property
    def value(self) -> float:
        return float(self.text)

    def __repr__(self):
        return f"{self.kind} {self.text!r}@{self.line}:{self.col}"


def tokenize(source: str) -> list[Token]:
    """Split ``source`` into tokens; ``#`` starts a comment to end of line."""
    tokens = []
    line, line_start, i = 1, 0, 0
    n = len(source)
    while i < n:
        ch = source[i]
        col = i - line_start + 1
        if ch == "\n":
            tokens.append(Token(NEWLINE, "\n", line, col))
            line, line_start = line + 1, i + 1
            i += 1
        elif ch in " \t\r":
            i += 1
        elif ch == "#":
            while i < n and source[i] != "\n":
                i += 1
        elif ch.isascii() and (ch.isdigit() or (ch == "." and i + 1 < n and source[i + 1].isdigit())):
            m = _NUMBER.match(source, i)
            tokens.append(Token(NUMBER, m.group(0), line, col))
            i = m.end()
        elif ch.isascii() and (ch.isalpha() or ch == "_"):
            m = _IDENT.match(source, i)
            word = m.group(0)
            tokens.append(Token(UNIT if word in UNITS else IDENT, word, line, col))
            i = m.end()
        elif ch in SYMBOLS:
            tokens.append(Token(SYMBOL, ch, line, col))
            i += 1
        else:
            raise LexError(f"illegal character {ch!r}", line, col)
    tokens.append(Token(EOF, "", line, i - line_start + 1))
    return tokens
