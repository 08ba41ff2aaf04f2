"""Recursive-descent parser for ring and Ore-polynomial literals.

Grammar::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := unary (('*'|'/') unary)*
    unary  := '-' unary | power
    power  := atom ('^' NAT)*
    atom   := NAT | IDENT | 'seq' '(' '[' scalars ']' ',' scalar ')' | '(' expr ')'

Products are evaluated in the target algebra, so ``x*y`` comes back in
left-coefficient normal form.  Division is only allowed by units of the
coefficient ring (``3/2``, ``1/(y+1)`` in k(y), ...).
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .errors import ParseError, UsageError

__all__ = ["Node", "tokenize", "parse", "parse_ore_expr", "parse_ring_element",
           "parse_polynomial", "parse_scalar"]

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))", re.S)


@dataclass(frozen=True)
class Token:
    kind: str  # "num", "ident", "op", "end"
    text: str
    line: int
    column: int


@dataclass
class Node:
    kind: str
    children: list = dc_field(default_factory=list)
    value: object = None
    line: int = 1
    column: int = 1


def tokenize(text: str):
    tokens = []
    pos = 0
    line, line_start = 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        skipped = text[pos:m.start(m.lastindex)]
        for i, ch in enumerate(skipped):
            if ch == "\n":
                line += 1
                line_start = pos + i + 1
        start = m.start(m.lastindex)
        col = start - line_start + 1
        num, ident, op = m.groups()
        if num is not None:
            tokens.append(Token("num", num, line, col))
        elif ident is not None:
            tokens.append(Token("ident", ident, line, col))
        elif op is not None:
            if op.isspace():
                pos = m.end()
                continue
            if op not in "+-*/^()[],":
                raise ParseError(f"unexpected character {op!r}", line, col)
            tokens.append(Token("op", op, line, col))
        pos = m.end()
    col = len(text) - line_start + 1
    tokens.append(Token("end", "", line, col))
    return tokens


class _Parser:
    def __init__(self, text):
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self):
        return self.tokens[self.i]

    def advance(self):
        t = self.tokens[self.i]
        self.i += 1
        return t

    def expect(self, text):
        t = self.tok
        if t.kind != "op" or t.text != text:
            found = t.text or "end of input"
            raise ParseError(f"expected {text!r}, found {found!r}", t.line, t.column)
        return self.advance()

    def at(self, text):
        return self.tok.kind == "op" and self.tok.text == text

    def parse(self):
        node = self.expr()
        if self.tok.kind != "end":
            raise ParseError(f"unexpected {self.tok.text!r}", self.tok.line, self.tok.column)
        return node

    def expr(self):
        t = self.tok
        if self.at("+") or self.at("-"):
            op = self.advance().text
            node = self.term()
            if op == "-":
                node = Node("neg", [node], line=t.line, column=t.column)
        else:
            node = self.term()
        while self.at("+") or self.at("-"):
            t = self.advance()
            rhs = self.term()
            node = Node("add" if t.text == "+" else "sub", [node, rhs], line=t.line, column=t.column)
        return node

    def term(self):
        node = self.unary()
        while self.at("*") or self.at("/"):
            t = self.advance()
            rhs = self.unary()
            node = Node("mul" if t.text == "*" else "div", [node, rhs], line=t.line, column=t.column)
        return node

    def unary(self):
        if self.at("-"):
            t = self.advance()
            return Node("neg", [self.unary()], line=t.line, column=t.column)
        return self.power()

    def power(self):
        node = self.atom()
        while self.at("^"):
            t = self.advance()
            e = self.tok
            if e.kind != "num":
                raise ParseError("exponent must be a non-negative integer", e.line, e.column)
            self.advance()
            node = Node("pow", [node], value=int(e.text), line=t.line, column=t.column)
        return node

    def signed_scalar(self):
        t = self.tok
        sign = 1
        if self.at("-") or self.at("+"):
            sign = -1 if self.advance().text == "-" else 1
        n = self.tok
        if n.kind != "num":
            raise ParseError("expected a number", n.line, n.column)
        self.advance()
        value = Fraction(int(n.text))
        if self.at("/"):
            self.advance()
            d = self.tok
            if d.kind != "num":
                raise ParseError("expected a denominator", d.line, d.column)
            self.advance()
            if int(d.text) == 0:
                raise ParseError("zero denominator", d.line, d.column)
            value /= int(d.text)
        return Node("num", value=sign * value, line=t.line, column=t.column)

    def atom(self):
        t = self.tok
        if t.kind == "num":
            self.advance()
            return Node("num", value=Fraction(int(t.text)), line=t.line, column=t.column)
        if t.kind == "ident":
            self.advance()
            if t.text == "seq" and self.at("("):
                self.expect("(")
                self.expect("[")
                items = []
                if not self.at("]"):
                    items.append(self.signed_scalar())
                    while self.at(","):
                        self.advance()
                        items.append(self.signed_scalar())
                self.expect("]")
                self.expect(",")
                tail = self.signed_scalar()
                self.expect(")")
                return Node("seq", items + [tail], line=t.line, column=t.column)
            return Node("var", value=t.text, line=t.line, column=t.column)
        if self.at("("):
            self.advance()
            node = self.expr()
            self.expect(")")
            return node
        found = t.text or "end of input"
        raise ParseError(f"unexpected {found!r}", t.line, t.column)


def parse(text: str) -> Node:
    if not isinstance(text, str):
        raise UsageError("expression must be a string")
    return _Parser(text).parse()


def _evaluate(node: Node, ctx):
    k = node.kind
    try:
        if k == "num":
            return ctx.scalar(node.value)
        if k == "var":
            return ctx.variable(node.value, node)
        if k == "seq":
            return ctx.sequence([c.value for c in node.children[:-1]], node.children[-1].value, node)
        if k == "neg":
            return -_evaluate(node.children[0], ctx)
        if k == "pow":
            base = _evaluate(node.children[0], ctx)
            return ctx.power(base, node.value)
        a = _evaluate(node.children[0], ctx)
        b = _evaluate(node.children[1], ctx)
        if k == "add":
            return a + b
        if k == "sub":
            return a - b
        if k == "mul":
            return a * b
        if k == "div":
            return ctx.divide(a, b, node)
    except ParseError:
        raise
    except (ZeroDivisionError, UsageError, ArithmeticError) as exc:
        raise ParseError(str(exc), node.line, node.column) from None
    raise ParseError(f"unknown node {k}", node.line, node.column)


class _RingContext:
    def __init__(self, ring):
        self.ring = ring

    def scalar(self, value):
        return self.ring.scalar(value)

    def variable(self, name, node):
        if self.ring.var is not None and name == self.ring.var and hasattr(self.ring, "gen"):
            return self.ring.gen()
        raise ParseError(f"unknown identifier {name!r}", node.line, node.column)

    def sequence(self, prefix, tail, node):
        if not hasattr(self.ring, "sequence"):
            raise ParseError("seq(...) literal needs the sequence ring", node.line, node.column)
        return self.ring.sequence(prefix, tail)

    def power(self, base, n):
        return base ** n

    def divide(self, a, b, node):
        if not b.is_unit():
            raise ParseError(f"cannot divide by non-unit {b}", node.line, node.column)
        return a * b.inverse()


class _OreContext(_RingContext):
    def __init__(self, spec):
        super().__init__(spec.ring)
        self.spec = spec

    def scalar(self, value):
        return self.spec.monomial(self.ring.scalar(value), 0)

    def variable(self, name, node):
        if name == "x":
            return self.spec.x
        return self.spec.monomial(super().variable(name, node), 0)

    def sequence(self, prefix, tail, node):
        return self.spec.monomial(super().sequence(prefix, tail, node), 0)

    def divide(self, a, b, node):
        if not b.in_coefficient_ring() or not b.coefficient(0).is_unit():
            raise ParseError(f"cannot divide by {b}", node.line, node.column)
        return a * self.spec.monomial(b.coefficient(0).inverse(), 0)


def parse_ore_expr(text: str, spec):
    """Parse and normalize an Ore-polynomial expression under ``spec``."""
    return _evaluate(parse(text), _OreContext(spec))


def parse_ring_element(text: str, ring):
    return _evaluate(parse(text), _RingContext(ring))


def parse_polynomial(text: str, field, var="y"):
    """Coefficient tuple (constant first) of a polynomial in k[var]."""
    from .rings import PolynomialRing
    return parse_ring_element(text, PolynomialRing(field, var)).data


def parse_scalar(text, field):
    from .rings import BaseFieldRing
    if not isinstance(text, str):
        return field(text)
    return parse_ring_element(text, BaseFieldRing(field)).data
