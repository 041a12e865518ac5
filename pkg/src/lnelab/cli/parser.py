"""Recursive-descent parser for polynomial expressions.

Grammar::

    expr     := term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := '-' factor | base ('^' uint)?
    base     := rational | var | '(' expr ')'
    rational := int ('/' uint)?

Multiplication is always explicit. A leading minus applies to the whole
power, so ``-x^2`` means -(x^2), as printed by :class:`Poly`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from lnelab.errors import ParseError
from lnelab.exactmath.poly import Poly

MODES = {
    "affine": ("x", "y"),
    "projective": ("x", "y", "z"),
    "parametric": ("t",),
}
KNOWN_VARIABLES = ("x", "y", "z", "t")

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_]\w*)|(?P<op>[-+*/^()]))")


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: "Node"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exponent: int


Node = Union[Num, Var, Neg, BinOp, Pow]


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int


@dataclass(frozen=True)
class ParsedExpression:
    source_text: str
    ast: Node
    expanded: Poly


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    line, line_start = 1, 0
    while True:
        while pos < len(text) and text[pos].isspace():
            if text[pos] == "\n":
                line += 1
                line_start = pos + 1
            pos += 1
        if pos >= len(text):
            tokens.append(Token("end", "", line, pos - line_start + 1))
            return tokens
        m = _TOKEN.match(text, pos)
        col = pos - line_start + 1
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        tokens.append(Token(kind, m.group(kind), line, col))
        pos = m.end()


class _Parser:
    def __init__(self, text: str, variables: tuple[str, ...]):
        self.tokens = tokenize(text)
        self.i = 0
        self.variables = variables

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def _error(self, message: str, expected: tuple[str, ...] = ()):
        t = self.tok
        where = "end of input" if t.kind == "end" else repr(t.text)
        raise ParseError(f"{message}: found {where}", t.line, t.column, expected)

    def _is(self, text: str) -> bool:
        return self.tok.kind == "op" and self.tok.text == text

    def parse(self) -> Node:
        node = self.expr()
        if self.tok.kind != "end":
            self._error("unexpected token", ("+", "-", "*", "^", "end of input"))
        return node

    def expr(self) -> Node:
        node = self.term()
        while self._is("+") or self._is("-"):
            op = self.tok.text
            self.i += 1
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Node:
        node = self.factor()
        while self._is("*"):
            self.i += 1
            node = BinOp("*", node, self.factor())
        return node

    def factor(self) -> Node:
        if self._is("-"):
            self.i += 1
            return Neg(self.factor())
        node = self.base()
        if self._is("^"):
            self.i += 1
            if self.tok.kind != "int":
                self._error("exponent must be a non-negative integer literal", ("unsigned integer",))
            node = Pow(node, int(self.tok.text))
            self.i += 1
        return node

    def base(self) -> Node:
        t = self.tok
        if t.kind == "int":
            self.i += 1
            value = Fraction(int(t.text))
            if self._is("/"):
                self.i += 1
                if self.tok.kind != "int":
                    self._error("denominator must be an unsigned integer", ("unsigned integer",))
                den = int(self.tok.text)
                if den == 0:
                    self._error("zero denominator")
                value = value / den
                self.i += 1
            return Num(value)
        if t.kind == "name":
            if t.text not in KNOWN_VARIABLES or t.text not in self.variables:
                raise ParseError(f"unknown variable {t.text!r}", t.line, t.column, self.variables)
            self.i += 1
            return Var(t.text)
        if self._is("("):
            self.i += 1
            node = self.expr()
            if not self._is(")"):
                self._error("unbalanced parenthesis", (")",))
            self.i += 1
            return node
        self._error("expected operand", ("number", "variable", "(", "-"))


def expand(node: Node, variables: tuple[str, ...]) -> Poly:
    if isinstance(node, Num):
        return Poly.constant(node.value, variables)
    if isinstance(node, Var):
        return Poly.var(node.name, variables)
    if isinstance(node, Neg):
        return -expand(node.operand, variables)
    if isinstance(node, Pow):
        return expand(node.base, variables) ** node.exponent
    left, right = expand(node.left, variables), expand(node.right, variables)
    if node.op == "+":
        return left + right
    if node.op == "-":
        return left - right
    return left * right


def parse_curve_input(text: str, mode: str = "affine") -> ParsedExpression:
    variables = MODES[mode]
    ast = _Parser(text, variables).parse()
    return ParsedExpression(text, ast, expand(ast, variables))
