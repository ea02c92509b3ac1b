"""Expression grammar shared by the CLI and the data tables.

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor (('*'|'/') factor)*
    factor := atom ['^' ['-'] INT]
    atom   := INT | NAME | '(' expr ')'

NAME is a generator of the target alphabet or one of the scalar constants
``i``, ``r``, ``w``, ``s`` (= r^2) and ``q`` (= r^4). Division and negative
powers are only defined for scalar operands. Whitespace is ignored.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass

from qorth.errors import ParseError
from qorth.freealg import Alphabet, NcPoly
from qorth.scalar import I, Q, R, S, W, Scalar

logger = logging.getLogger(__name__)

SCALAR_ALPHABET = Alphabet("scalar", ())

_CONSTANTS: dict[str, Scalar] = {"i": I, "r": R, "w": W, "s": S, "q": Q}

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


@dataclass(frozen=True)
class _Token:
    kind: str  # "int", "name", "op", "end"
    text: str
    column: int


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:  # trailing whitespace
            break
        if m.group(1) is not None:
            tokens.append(_Token("int", m.group(1), m.start(1) + 1))
        elif m.group(2) is not None:
            tokens.append(_Token("name", m.group(2), m.start(2) + 1))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(
                    f"Unexpected character {ch!r} at column {m.start(3) + 1}",
                    column=m.start(3) + 1,
                    code="PARSE_UNEXPECTED",
                    suggestions=["Allowed operators are + - * / ^ ( )"],
                )
            tokens.append(_Token("op", ch, m.start(3) + 1))
        pos = m.end()
    tokens.append(_Token("end", "", len(text) + 1))
    return tokens


class _Parser:
    def __init__(self, text: str, alphabet: Alphabet) -> None:
        self.text = text
        self.alphabet = alphabet
        self.tokens = _tokenize(text)
        self.pos = 0

    @property
    def current(self) -> _Token:
        return self.tokens[self.pos]

    def _advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def _error(self, message: str, tok: _Token) -> ParseError:
        return ParseError(
            f"{message} at column {tok.column}",
            column=tok.column,
            code="PARSE_UNEXPECTED",
            log_details=self.text,
        )

    def _expect(self, op: str) -> None:
        tok = self.current
        if tok.kind != "op" or tok.text != op:
            shown = tok.text or "end of input"
            raise self._error(f"Expected {op!r}, found {shown!r}", tok)
        self._advance()

    def parse(self) -> NcPoly:
        if self.current.kind == "end":
            raise self._error("Empty expression", self.current)
        value = self._expr()
        if self.current.kind != "end":
            raise self._error(f"Unexpected {self.current.text!r}", self.current)
        return value

    def _expr(self) -> NcPoly:
        negate = False
        if self.current.kind == "op" and self.current.text in "+-":
            negate = self._advance().text == "-"
        value = self._term()
        if negate:
            value = -value
        while self.current.kind == "op" and self.current.text in "+-":
            op = self._advance().text
            rhs = self._term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def _term(self) -> NcPoly:
        value = self._factor()
        while self.current.kind == "op" and self.current.text in "*/":
            tok = self._advance()
            rhs = self._factor()
            if tok.text == "*":
                value = value * rhs
            else:
                value = value.scale(self._scalar_of(rhs, tok, "Division by").inverse())
        return value

    def _scalar_of(self, p: NcPoly, tok: _Token, what: str) -> Scalar:
        if any(w for w in p.terms):
            raise self._error(f"{what} a non-scalar expression", tok)
        c = p.constant_term()
        if not c:
            raise self._error(f"{what} zero", tok)
        return c

    def _factor(self) -> NcPoly:
        base = self._atom()
        if self.current.kind == "op" and self.current.text == "^":
            caret = self._advance()
            negative = False
            if self.current.kind == "op" and self.current.text == "-":
                self._advance()
                negative = True
            tok = self.current
            if tok.kind != "int":
                raise self._error("Expected an integer exponent", tok)
            self._advance()
            n = int(tok.text)
            if negative:
                scalar = self._scalar_of(base, caret, "Negative power of")
                return NcPoly.constant(self.alphabet, scalar ** (-n))
            return base**n
        return base

    def _atom(self) -> NcPoly:
        tok = self.current
        if tok.kind == "int":
            self._advance()
            return NcPoly.constant(self.alphabet, int(tok.text))
        if tok.kind == "name":
            self._advance()
            if tok.text in self.alphabet:
                return NcPoly.gen(self.alphabet, tok.text)
            if tok.text in _CONSTANTS:
                return NcPoly.constant(self.alphabet, _CONSTANTS[tok.text])
            names = ", ".join(self.alphabet.symbols)
            raise ParseError(
                f"Unknown generator {tok.text!r} at column {tok.column}",
                column=tok.column,
                code="PARSE_UNKNOWN_GENERATOR",
                suggestions=[f"Generators of {self.alphabet.name}: {names}"],
            )
        if tok.kind == "op" and tok.text == "(":
            self._advance()
            value = self._expr()
            self._expect(")")
            return value
        shown = tok.text or "end of input"
        raise self._error(f"Unexpected {shown!r}", tok)


def parse_poly(text: str, alphabet: Alphabet) -> NcPoly:
    """Parse ``text`` into a polynomial over ``alphabet``."""
    return _Parser(text, alphabet).parse()


def parse_scalar(text: str) -> Scalar:
    """Parse a coefficient-field expression, the inverse of ``format_scalar``."""
    p = _Parser(text, SCALAR_ALPHABET).parse()
    return p.constant_term()


def polys(alphabet: Alphabet, *texts: str) -> list[NcPoly]:
    return [parse_poly(t, alphabet) for t in texts]
