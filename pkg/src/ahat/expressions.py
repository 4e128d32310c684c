"""Manifold expressions: the user-facing notation for generator products.

Grammar (whitespace-insensitive, atom names case-insensitive):

    expr := term (('x' | '*') term)*
    term := atom ('^' posint)?
    atom := 'K3' | 'HP' posint | '(' expr ')'

"K3 x HP2^3" denotes the product of the Kummer surface with three copies
of HP^2.  Parse errors carry the 1-based column where they occurred.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import reduce

from .cobordism import CobordismClass, DEFAULT_CAP, OutOfRangeError, kummer_class, point_class, product, quaternionic_class


class ParseError(ValueError):
    """Syntax error with a 1-based column position."""

    def __init__(self, message: str, column: int):
        super().__init__(f"column {column}: {message}")
        self.column = column


@dataclass(frozen=True)
class Kummer:
    @property
    def weight(self) -> int:
        return 1

    def render(self) -> str:
        return "K3"


@dataclass(frozen=True)
class Quaternionic:
    index: int

    @property
    def weight(self) -> int:
        return self.index

    def render(self) -> str:
        return f"HP{self.index}"


@dataclass(frozen=True)
class Power:
    base: "ManifoldExpr"
    exponent: int

    @property
    def weight(self) -> int:
        return self.base.weight * self.exponent

    def render(self) -> str:
        base = self.base.render()
        if isinstance(self.base, (Product, Power)):
            base = f"({base})"
        return f"{base}^{self.exponent}"


@dataclass(frozen=True)
class Product:
    factors: tuple["ManifoldExpr", ...]

    @property
    def weight(self) -> int:
        return sum(f.weight for f in self.factors)

    def render(self) -> str:
        pieces = []
        for f in self.factors:
            text = f.render()
            if isinstance(f, Product):
                text = f"({text})"
            pieces.append(text)
        return " x ".join(pieces)


ManifoldExpr = Kummer | Quaternionic | Power | Product


_TOKEN_RE = re.compile(
    r"(?P<K3>K3)|(?P<HP>HP)|(?P<INT>\d+)|(?P<TIMES>[x*])|(?P<POW>\^)"
    r"|(?P<LPAREN>\()|(?P<RPAREN>\))|(?P<WS>\s+)",
    re.IGNORECASE,
)


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    column: int  # 1-based


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos + 1)
        kind = match.lastgroup
        if kind != "WS":
            tokens.append(_Token(kind, match.group(), pos + 1))
        pos = match.end()
    tokens.append(_Token("EOF", "", len(text) + 1))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str, description: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            found = repr(tok.text) if tok.kind != "EOF" else "end of input"
            raise ParseError(f"expected {description}, found {found}", tok.column)
        return self.advance()

    def parse_expr(self) -> ManifoldExpr:
        factors = [self.parse_term()]
        while self.peek().kind == "TIMES":
            self.advance()
            factors.append(self.parse_term())
        if len(factors) == 1:
            return factors[0]
        return Product(tuple(factors))

    def parse_term(self) -> ManifoldExpr:
        atom = self.parse_atom()
        if self.peek().kind == "POW":
            self.advance()
            tok = self.expect("INT", "a positive integer exponent")
            exponent = int(tok.text)
            if exponent < 1:
                raise ParseError("exponent must be at least 1", tok.column)
            return Power(atom, exponent)
        return atom

    def parse_atom(self) -> ManifoldExpr:
        tok = self.peek()
        if tok.kind == "K3":
            self.advance()
            return Kummer()
        if tok.kind == "HP":
            self.advance()
            arg = self.expect("INT", "a positive integer after 'HP'")
            index = int(arg.text)
            if index < 1:
                raise ParseError("HP index must be at least 1", arg.column)
            return Quaternionic(index)
        if tok.kind == "LPAREN":
            self.advance()
            inner = self.parse_expr()
            self.expect("RPAREN", "')'")
            return inner
        found = repr(tok.text) if tok.kind != "EOF" else "end of input"
        raise ParseError(f"expected 'K3', 'HP<k>' or '(', found {found}", tok.column)


def parse_manifold(text: str) -> ManifoldExpr:
    """Parse an expression like "K3^2 x HP3" into its syntax tree."""
    parser = _Parser(_tokenize(text))
    expr = parser.parse_expr()
    tok = parser.peek()
    if tok.kind != "EOF":
        raise ParseError(f"expected 'x', '*' or '^', found {tok.text!r}", tok.column)
    return expr


def to_cobordism_class(expr: ManifoldExpr, *, cap: int = DEFAULT_CAP) -> CobordismClass:
    """Evaluate an expression to the cobordism class it denotes."""
    if expr.weight > cap:
        raise OutOfRangeError(f"expression weight {expr.weight} exceeds cap {cap}")

    def evaluate(e: ManifoldExpr) -> CobordismClass:
        if isinstance(e, Kummer):
            return kummer_class()
        if isinstance(e, Quaternionic):
            return quaternionic_class(e.index, cap=cap)
        if isinstance(e, Power):
            base = evaluate(e.base)
            return reduce(product, [base] * e.exponent, point_class())
        return reduce(product, (evaluate(f) for f in e.factors), point_class())

    return evaluate(expr)
