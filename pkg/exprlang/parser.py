"""Recursive-descent parser for metric expressions.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := ('-' | '+') factor | base ('^' uint)?
    base   := number | ident | '(' expr ')' | func '(' expr ')'
"""

import logging
import re
from collections.abc import Iterable
from typing import NamedTuple, Optional

from exprlang.nodes import (
    BinaryOp,
    Call,
    Constant,
    Coordinate,
    ExprAst,
    Negate,
    Parameter,
    Power,
)
from jets import FUNCTIONS
from utils.errors import (
    CoordinateRangeError,
    ExpressionSyntaxError,
    UnknownIdentifierError,
)

logger = logging.getLogger(__name__)

_TOKEN = re.compile(
    r"\s*(?:"
    r"(?P<number>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)"
    r"|(?P<ident>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<op>[-+*/^()])"
    r")"
)
_COORDINATE = re.compile(r"x(\d+)")


class Token(NamedTuple):
    kind: str
    text: str
    offset: int


def _byte_offset(text: str, position: int) -> int:
    return len(text[:position].encode("utf-8"))


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    position = 0
    while position < len(text):
        if text[position:].strip() == "":
            break
        match = _TOKEN.match(text, position)
        if match is None or match.lastgroup is None:
            start = position + (len(text[position:]) - len(text[position:].lstrip()))
            raise ExpressionSyntaxError(
                f"unexpected character {text[start]!r}", _byte_offset(text, start)
            )
        kind = match.lastgroup
        tokens.append(
            Token(kind, match.group(kind), _byte_offset(text, match.start(kind)))
        )
        position = match.end()
    tokens.append(Token("end", "", _byte_offset(text, len(text))))
    return tokens


class _Parser:
    def __init__(self, text: str, n: int, params: frozenset[str]) -> None:
        self.tokens = tokenize(text)
        self.position = 0
        self.n = n
        self.params = params

    @property
    def current(self) -> Token:
        return self.tokens[self.position]

    def _advance(self) -> Token:
        token = self.current
        self.position += 1
        return token

    def _accept(self, op: str) -> bool:
        if self.current.kind == "op" and self.current.text == op:
            self.position += 1
            return True
        return False

    def _expect(self, op: str) -> None:
        if not self._accept(op):
            raise ExpressionSyntaxError(
                f"expected {op!r}, found {self.current.text or 'end of input'!r}",
                self.current.offset,
            )

    def parse(self) -> ExprAst:
        ast = self.expr()
        if self.current.kind != "end":
            raise ExpressionSyntaxError(
                f"unexpected token {self.current.text!r}", self.current.offset
            )
        return ast

    def expr(self) -> ExprAst:
        ast = self.term()
        while self.current.kind == "op" and self.current.text in "+-":
            op = self._advance().text
            ast = BinaryOp(op, ast, self.term())
        return ast

    def term(self) -> ExprAst:
        ast = self.factor()
        while self.current.kind == "op" and self.current.text in "*/":
            op = self._advance().text
            ast = BinaryOp(op, ast, self.factor())
        return ast

    def factor(self) -> ExprAst:
        if self._accept("-"):
            return Negate(self.factor())
        if self._accept("+"):
            return self.factor()
        base = self.base()
        if self._accept("^"):
            token = self.current
            if token.kind != "number":
                raise ExpressionSyntaxError(
                    "exponent must be an unsigned integer literal", token.offset
                )
            if not token.text.isdigit():
                hint = "; use sqrt()" if float(token.text) == 0.5 else ""
                raise ExpressionSyntaxError(
                    f"non-integer exponent {token.text}{hint}", token.offset
                )
            self._advance()
            return Power(base, int(token.text))
        return base

    def base(self) -> ExprAst:
        token = self.current
        if token.kind == "number":
            self._advance()
            return Constant(float(token.text))
        if token.kind == "op" and token.text == "(":
            self._advance()
            inner = self.expr()
            self._expect(")")
            return inner
        if token.kind == "ident":
            self._advance()
            return self._identifier(token)
        raise ExpressionSyntaxError(
            f"unexpected {token.text or 'end of input'!r}", token.offset
        )

    def _identifier(self, token: Token) -> ExprAst:
        name = token.text
        followed_by_call = self.current.kind == "op" and self.current.text == "("
        if name in FUNCTIONS:
            if not followed_by_call:
                raise ExpressionSyntaxError(
                    f"function {name!r} needs an argument", self.current.offset
                )
            self._advance()
            argument = self.expr()
            self._expect(")")
            return Call(name, argument)
        if followed_by_call:
            raise UnknownIdentifierError(
                f"unknown function {name!r} at byte {token.offset}"
            )
        coordinate = _COORDINATE.fullmatch(name)
        if coordinate is not None:
            index = int(coordinate.group(1))
            if not 1 <= index <= self.n:
                raise CoordinateRangeError(
                    f"coordinate {name} out of range for dimension {self.n}"
                )
            return Coordinate(index)
        if name in self.params:
            return Parameter(name)
        raise UnknownIdentifierError(f"unknown identifier {name!r} at byte {token.offset}")


def parse_expression(
    text: str, n: int, params: Optional[Iterable[str]] = None
) -> ExprAst:
    """Parse ``text`` over coordinates x1..xn and the given parameter names.

    Raises:
        ExpressionSyntaxError: malformed text, with the byte offset
        UnknownIdentifierError: an unbound name
        CoordinateRangeError: a coordinate index outside [1, n]
    """
    ast = _Parser(text, n, frozenset(params or ())).parse()
    logger.debug(f"parsed expression {text!r}")
    return ast
