"""Recursive-descent parser for polynomial expressions.

Grammar (no implicit multiplication)::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := base ('^' uint)?
    base   := var | literal | 'w' | '(' expr ')'

Literals are decimal integers or fractions ``a/b``; ``w`` is the generator
of the quadratic extension declared alongside the expression.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .errors import ExponentOverflow, ParseError, UnknownSymbol
from .polynomials import MPoly, merge_vars
from .scalars import MinPoly

MAX_EXPONENT = 64
GEN_SYMBOL = "w"
DEFAULT_VARS = ("x0", "x1", "x2", "x3", "y0", "y1", "y2", "u0", "u1", "v0", "v1")

_TOKEN_RE = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z_]\w*)|(?P<op>[-+*^()]))")


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Gen:
    pass


@dataclass(frozen=True)
class Add:
    terms: tuple  # ((sign, node), ...)


@dataclass(frozen=True)
class Mul:
    factors: tuple


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exp: int


Node = Union[Num, Var, Gen, Add, Mul, Pow]


def tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos:].strip() == "":
            break
        m = _TOKEN_RE.match(text, pos)
        if not m:
            j = pos
            while j < n and text[j].isspace():
                j += 1
            raise ParseError(f"unexpected character {text[j]!r}", j, text)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        return ParseError(msg, tok[2], self.text)

    def parse(self) -> Node:
        node = self.expr()
        if self.peek()[0] != "end":
            raise self.error(f"unexpected {self.peek()[1]!r}")
        return node

    def expr(self) -> Node:
        terms = []
        sign = 1
        tok = self.peek()
        if tok[0] == "op" and tok[1] in "+-":
            self.take()
            sign = -1 if tok[1] == "-" else 1
        terms.append((sign, self.term()))
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            sign = -1 if self.take()[1] == "-" else 1
            terms.append((sign, self.term()))
        if len(terms) == 1 and terms[0][0] == 1:
            return terms[0][1]
        return Add(tuple(terms))

    def term(self) -> Node:
        factors = [self.factor()]
        while self.peek()[:2] == ("op", "*"):
            self.take()
            factors.append(self.factor())
        return factors[0] if len(factors) == 1 else Mul(tuple(factors))

    def factor(self) -> Node:
        base = self.base()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            tok = self.peek()
            if tok[0] != "num" or "/" in tok[1]:
                raise self.error("exponent must be a non-negative integer")
            self.take()
            e = int(tok[1])
            if e > MAX_EXPONENT:
                raise ExponentOverflow(f"exponent {e} exceeds {MAX_EXPONENT}", tok[2], self.text)
            return Pow(base, e)
        return base

    def base(self) -> Node:
        tok = self.take()
        kind, val, _ = tok
        if kind == "num":
            if "/" in val:
                a, b = val.split("/")
                if int(b) == 0:
                    raise self.error("zero denominator", tok)
                return Num(Fraction(int(a), int(b)))
            return Num(Fraction(int(val)))
        if kind == "name":
            return Gen() if val == GEN_SYMBOL else Var(val)
        if kind == "op" and val == "(":
            node = self.expr()
            if self.peek()[:2] != ("op", ")"):
                raise self.error("expected ')'")
            self.take()
            return node
        if kind == "end":
            raise self.error("unexpected end of input", tok)
        raise self.error(f"unexpected {val!r}", tok)


def parse_ast(text: str) -> Node:
    return _Parser(text).parse()


def _names(node: Node, out: set):
    if isinstance(node, Var):
        out.add(node.name)
    elif isinstance(node, Add):
        for _, t in node.terms:
            _names(t, out)
    elif isinstance(node, Mul):
        for f in node.factors:
            _names(f, out)
    elif isinstance(node, Pow):
        _names(node.base, out)


def to_mpoly(node: Node, vars: Sequence[str], field: MinPoly | None = None) -> MPoly:
    if isinstance(node, Num):
        return MPoly.const(node.value, vars)
    if isinstance(node, Var):
        return MPoly.var(node.name, vars)
    if isinstance(node, Gen):
        if field is None:
            raise UnknownSymbol(f"'{GEN_SYMBOL}' used but no field extension declared")
        return MPoly.const(field.gen, vars)
    if isinstance(node, Add):
        acc = MPoly(vars)
        for sign, t in node.terms:
            p = to_mpoly(t, vars, field)
            acc = acc + p if sign > 0 else acc - p
        return acc
    if isinstance(node, Mul):
        acc = MPoly.const(1, vars)
        for f in node.factors:
            acc = acc * to_mpoly(f, vars, field)
        return acc
    if isinstance(node, Pow):
        return to_mpoly(node.base, vars, field) ** node.exp
    raise TypeError(node)  # pragma: no cover


def parse_expr(text: str, variables: Sequence[str] | None = None,
               field: MinPoly | None = None) -> MPoly:
    """Parse ``text`` into an exact polynomial.

    With ``variables`` given, the result lives over exactly those variables
    and any other name is rejected; otherwise names from :data:`DEFAULT_VARS`
    are accepted and the result uses the ones that occur.
    """
    node = parse_ast(text)
    names: set = set()
    _names(node, names)
    allowed = set(variables) if variables is not None else set(DEFAULT_VARS)
    unknown = sorted(names - allowed)
    if unknown:
        pos = None
        for kind, val, p in tokenize(text):
            if kind == "name" and val == unknown[0]:
                pos = p
                break
        raise UnknownSymbol(f"unknown symbol {unknown[0]!r}", pos, text)
    vars = tuple(variables) if variables is not None else merge_vars(names)
    return to_mpoly(node, vars, field)


def parse_scalar(text, field: MinPoly | None = None):
    """A constant: integer, fraction, or expression in ``w``."""
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    p = parse_expr(str(text), variables=(), field=field)
    return p.constant_value()
