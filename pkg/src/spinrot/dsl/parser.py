"""Recursive-descent parser for rotation programs.

Grammar (``;`` or newline separate statements, ``#`` comments)::

    statement := "convention" ("right" | "left")
               | "state" (named | "(" complex "," complex ")" | "bloch" "(" angle "," angle ")")
               | "rot" axis angle
               | "euler" "(" angle "," angle "," angle ")" ("intrinsic" | "extrinsic")
               | "measure" axis | "collapse" ("+" | "-")
               | "audit" | "emit" ("state" | "bloch" | "operator" | "all")
    axis      := "x" | "y" | "z" | "n" "(" angle "," angle ")" | "v" "(" number "," number "," number ")"
    angle     := number ("deg" | "rad")
    named     := "up" | "down" | "x+" | "x-" | "y+" | "y-"
    complex   := ["-"] number ["i"] [("+" | "-") number "i"] | ["-"] "i"
"""

from __future__ import annotations

import math

from ..rotation import EulerMode, RotationConvention
from ..su2 import NonUnitAxis
from . import ast
from .lexer import EOF, IDENT, NEWLINE, NUMBER, SYMBOL, UNIT, Token, tokenize

AXIS_TOL = 1e-6
_ULP_SLACK = 4 * 2.220446049250313e-16


class ParseError(Exception):
    def __init__(self, message: str, line: int = 0, col: int = 0, expected=()):
        where = f"{line}:{col}: " if line else ""
        super().__init__(where + message)
        self.line, self.col = line, col
        self.expected = frozenset(expected)


class EmptyProgram(ParseError):
    pass


class ParseNonUnitAxis(ParseError, NonUnitAxis):
    pass


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.toks = tokens
        self.i = 0

    # token helpers
    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def advance(self) -> Token:
        t = self.toks[self.i]
        self.i += 1
        return t

    def at(self, kind: str, text: str | None = None) -> bool:
        t = self.tok
        return t.kind == kind and (text is None or t.text == text)

    def fail(self, message: str, expected=()):
        t = self.tok
        found = "end of input" if t.kind == EOF else (
            "end of line" if t.kind == NEWLINE else repr(t.text))
        raise ParseError(f"{message}, found {found}", t.line, t.col, expected)

    def expect(self, kind: str, text: str | None = None, what: str | None = None) -> Token:
        if not self.at(kind, text):
            self.fail(f"expected {what or text or kind}", {text or kind})
        return self.advance()

    def keyword(self, choices: tuple[str, ...], what: str) -> str:
        if self.tok.kind == IDENT and self.tok.text in choices:
            return self.advance().text
        self.fail(f"expected {what} ({'|'.join(choices)})", choices)

    # grammar
    def program(self) -> ast.Program:
        stmts = []
        while True:
            while self.at(NEWLINE) or self.at(SYMBOL, ";"):
                self.advance()
            if self.at(EOF):
                break
            stmts.append(self.statement())
            if not (self.at(NEWLINE) or self.at(SYMBOL, ";") or self.at(EOF)):
                self.fail("expected ';' or newline after statement", {";", NEWLINE})
        if not stmts:
            raise EmptyProgram("empty program", self.tok.line, self.tok.col)
        return ast.Program(tuple(stmts))

    def statement(self):
        t = self.tok
        pos = (t.line, t.col)
        word = self.keyword(("convention", "state", "rot", "euler", "measure",
                             "collapse", "audit", "emit"), "statement")
        if word == "convention":
            conv = self.keyword(("right", "left"), "convention")
            return ast.SetConvention(RotationConvention(conv), pos)
        if word == "state":
            return self.state(pos)
        if word == "rot":
            axis = self.axis()
            return ast.Rot(axis, self.angle(), pos)
        if word == "euler":
            self.expect(SYMBOL, "(")
            a = self.angle()
            self.expect(SYMBOL, ",")
            b = self.angle()
            self.expect(SYMBOL, ",")
            g = self.angle()
            self.expect(SYMBOL, ")")
            mode = self.keyword(("intrinsic", "extrinsic"), "euler mode")
            return ast.Euler(a, b, g, EulerMode(mode), pos)
        if word == "measure":
            return ast.Measure(self.axis(), pos)
        if word == "collapse":
            if self.at(SYMBOL, "+") or self.at(SYMBOL, "-"):
                return ast.Collapse(self.advance().text, pos)
            self.fail("expected branch", {"+", "-"})
        if word == "audit":
            return ast.Audit(pos)
        what = self.keyword(("state", "bloch", "operator", "all"), "emit target")
        return ast.Emit(what, pos)

    def state(self, pos):
        if self.at(SYMBOL, "("):
            self.advance()
            up = self.complex()
            self.expect(SYMBOL, ",")
            down = self.complex()
            self.expect(SYMBOL, ")")
            if abs(up) ** 2 + abs(down) ** 2 < 1e-24:
                raise ParseError("zero state vector", *pos)
            return ast.VectorState(up, down, pos)
        if self.at(IDENT, "bloch"):
            self.advance()
            self.expect(SYMBOL, "(")
            theta = self.angle()
            self.expect(SYMBOL, ",")
            phi = self.angle()
            self.expect(SYMBOL, ")")
            return ast.BlochState(theta, phi, pos)
        if self.tok.kind == IDENT and self.tok.text in ("up", "down"):
            return ast.NamedState(self.advance().text, pos)
        if self.tok.kind == IDENT and self.tok.text in ("x", "y"):
            base = self.advance().text
            if self.at(SYMBOL, "+") or self.at(SYMBOL, "-"):
                return ast.NamedState(base + self.advance().text, pos)
            self.fail("expected '+' or '-' after named state", {"+", "-"})
        self.fail("expected state", {"up", "down", "x+", "x-", "y+", "y-", "(", "bloch"})

    def sign(self) -> float:
        if self.at(SYMBOL, "-"):
            self.advance()
            return -1.0
        if self.at(SYMBOL, "+"):
            self.advance()
        return 1.0

    def number(self) -> float:
        s = self.sign()
        return s * self.expect(NUMBER, what="number").value

    def angle(self) -> float:
        value = self.number()
        if not self.at(UNIT):
            self.fail("missing angle unit", {"deg", "rad"})
        unit = self.advance().text
        return math.radians(value) if unit == "deg" else value

    def axis(self):
        if self.tok.kind == IDENT and self.tok.text in ("x", "y", "z"):
            return ast.NamedAxis(self.advance().text)
        if self.at(IDENT, "n"):
            self.advance()
            self.expect(SYMBOL, "(")
            theta = self.angle()
            self.expect(SYMBOL, ",")
            phi = self.angle()
            self.expect(SYMBOL, ")")
            return ast.SphericalAxis(theta, phi)
        if self.at(IDENT, "v"):
            t = self.advance()
            self.expect(SYMBOL, "(")
            x = self.number()
            self.expect(SYMBOL, ",")
            y = self.number()
            self.expect(SYMBOL, ",")
            z = self.number()
            self.expect(SYMBOL, ")")
            n = math.sqrt(x * x + y * y + z * z)
            if abs(n - 1) > AXIS_TOL:
                raise ParseNonUnitAxis(f"axis v({x}, {y}, {z}) has length {n!r}",
                                       t.line, t.col)
            if abs(n - 1) > _ULP_SLACK:
                x, y, z = x / n, y / n, z / n
            return ast.VectorAxis(x, y, z)
        self.fail("expected axis", {"x", "y", "z", "n", "v"})

    def complex(self) -> complex:
        s = self.sign()
        if self.at(IDENT, "i"):
            self.advance()
            return complex(0.0, s)
        value = s * self.expect(NUMBER, what="number").value
        if self.at(IDENT, "i"):
            self.advance()
            return complex(0.0, value)
        if self.at(SYMBOL, "+") or self.at(SYMBOL, "-"):
            s2 = -1.0 if self.advance().text == "-" else 1.0
            imag = s2 * (self.advance().value if self.at(NUMBER) else 1.0)
            self.expect(IDENT, "i", what="'i'")
            return complex(value, imag)
        return complex(value, 0.0)


def parse(tokens) -> ast.Program:
    """Parse a token list (or raw source text) into a :class:`~.ast.Program`."""
    if isinstance(tokens, str):
        tokens = tokenize(tokens)
    return _Parser(list(tokens)).program()


def parse_source(source: str) -> ast.Program:
    return parse(tokenize(source))
